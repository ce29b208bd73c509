"""Independent reference implementations used only by the test suite.

These deliberately avoid the library's production code paths: geodesics
are enumerated explicitly, minimums come from unpruned subset sweeps,
spanning trees and feedback edge sets from raw combinations.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, product

from megset import Graph, is_meg_set


def bfs_levels(g: Graph, src: int) -> dict[int, int]:
    levels = {src: 0}
    q = deque([src])
    while q:
        x = q.popleft()
        for y in g.adj[x]:
            if y not in levels:
                levels[y] = levels[x] + 1
                q.append(y)
    return levels


def enumerate_geodesics(g: Graph, x: int, y: int) -> list[tuple[int, ...]]:
    """All shortest x-y paths, by DFS over the BFS level structure."""
    levels = bfs_levels(g, x)
    if y not in levels:
        return []
    paths: list[tuple[int, ...]] = []
    stack: list[int] = [y]

    def walk(v: int) -> None:
        if v == x:
            paths.append(tuple(reversed(stack)))
            return
        for w in g.adj[v]:
            if levels.get(w, -1) == levels[v] - 1:
                stack.append(w)
                walk(w)
                stack.pop()

    walk(y)
    return paths


def path_edges(path: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    return frozenset(
        (a, b) if a < b else (b, a) for a, b in zip(path, path[1:])
    )


def monitors_by_enumeration(g: Graph, x: int, y: int, e: tuple[int, int]) -> bool:
    """Definitional check: e lies on every geodesic between x and y."""
    eu, ev = min(e), max(e)
    paths = enumerate_geodesics(g, x, y)
    return bool(paths) and all((eu, ev) in path_edges(p) for p in paths)


def is_meg_by_enumeration(g: Graph, s) -> bool:
    members = sorted(set(s))
    for e in g.edges:
        if not any(
            monitors_by_enumeration(g, x, y, e)
            for i, x in enumerate(members)
            for y in members[i + 1:]
        ):
            return False
    return True


def all_minimum_megs_bruteforce(g: Graph) -> list[frozenset[int]]:
    """Every minimum MEG-set, by unpruned sweep over all vertex subsets.

    Uses the library predicate (itself pinned to the enumeration oracle
    elsewhere) so the sweep stays affordable; the point here is that no
    forcing or seeding narrows the candidate space.
    """
    for size in range(g.n + 1):
        hits = [
            frozenset(c)
            for c in combinations(range(g.n), size)
            if is_meg_set(g, c)
        ]
        if hits:
            return hits
    return []


def minimum_meg_bruteforce(g: Graph) -> int:
    return len(next(iter(all_minimum_megs_bruteforce(g))))


def is_acyclic(n: int, edges: list[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def fes_bruteforce(g: Graph) -> int:
    """Smallest number of edges whose removal leaves a forest."""
    edges = list(g.edges)
    for k in range(len(edges) + 1):
        for removed in combinations(range(len(edges)), k):
            gone = set(removed)
            if is_acyclic(g.n, [e for i, e in enumerate(edges) if i not in gone]):
                return k
    raise AssertionError


def max_leaf_spanning_tree_bruteforce(g: Graph) -> int:
    """Maximum leaf count over all spanning trees, by raw edge subsets."""
    best = -1
    for subset in combinations(range(g.m), g.n - 1):
        chosen = [g.edges[i] for i in subset]
        if not is_acyclic(g.n, chosen):
            continue
        deg = [0] * g.n
        for u, v in chosen:
            deg[u] += 1
            deg[v] += 1
        if all(d > 0 for d in deg) or g.n == 1:
            best = max(best, sum(1 for d in deg if d == 1))
    return best


def strong_eg_bruteforce(g: Graph, s) -> bool:
    """Exhaustive product over per-pair geodesic choices."""
    members = sorted(set(s))
    pair_choices = []
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            pair_choices.append([path_edges(p) for p in enumerate_geodesics(g, x, y)])
    target = set(g.edges)
    if not target:
        return True
    for pick in product(*pair_choices):
        union = set().union(*pick) if pick else set()
        if union >= target:
            return True
    return False


def longest_path_in_subgraph(g: Graph, vertices: set[int]) -> int:
    """Edge length of the longest simple path inside an induced subgraph."""
    best = 0

    def extend(v: int, seen: set[int], length: int) -> None:
        nonlocal best
        best = max(best, length)
        for w in g.adj[v]:
            if w in vertices and w not in seen:
                seen.add(w)
                extend(w, seen, length + 1)
                seen.remove(w)

    for v in vertices:
        extend(v, {v}, 0)
    return best


def count_simple_paths_of_length(g: Graph, x: int, y: int, length: int) -> int:
    """Brute-force count of simple x-y paths with exactly `length` edges."""
    total = 0

    def extend(v: int, seen: set[int], used: int) -> None:
        nonlocal total
        if used == length:
            if v == y:
                total += 1
            return
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                extend(w, seen, used + 1)
                seen.remove(w)

    extend(x, {x}, 0)
    return total
