"""Feedback-edge-set structure: base graph, core decomposition, and the
constructive MEG-set whose size is linear in the cyclomatic number.

The base graph is what remains after iteratively deleting degree-1
vertices; the removed parts are hanging trees rooted on the base.  The
base decomposes into core vertices (degree >= 3), proper core paths
(degree-2 interiors between distinct core vertices) and core cycles
(closed core paths attached at a single core vertex).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import SizeCapExceededError
from .graph import Graph, build_graph, connected_components, require_connected
from .monitoring import is_meg_set

MLN_VERTEX_CAP = 12


@dataclass
class CoreDecomposition:
    """Base graph plus its hanging trees, core vertices, paths and cycles.

    `base` shares vertex ids with the original graph; vertices stripped
    while forming it are simply isolated there.  Core cycles are closed
    vertex walks (first == last); proper core paths run between two
    distinct core vertices.
    """

    base: Graph
    base_vertices: frozenset[int]
    hanging_trees: list[tuple[int, frozenset[int]]]
    core_vertices: frozenset[int]
    proper_core_paths: list[tuple[int, ...]]
    core_cycles: list[tuple[int, ...]]


@dataclass
class FesConstruction:
    meg_set: frozenset[int]
    k: int
    leaf_count: int
    budget: int


def feedback_edge_number(g: Graph) -> int:
    """Cyclomatic number m - n + 1 of a connected graph."""
    require_connected(g)
    return g.m - g.n + 1


def leaf_set(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def base_graph(g: Graph) -> CoreDecomposition:
    """Strip degree-1 vertices to the 2-core and collect the hanging trees.

    A tree strips away entirely: the base is empty and the whole graph
    is one hanging tree rooted (by convention) at its smallest vertex.
    """
    require_connected(g)
    deg = [g.degree(v) for v in range(g.n)]
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        deg[v] = 0
        for w in g.adj[v]:
            if deg[w] > 0:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    base_vertices = frozenset(v for v in range(g.n) if deg[v] >= 2)
    base_edges = [(u, v) for (u, v) in g.edges if u in base_vertices and v in base_vertices]
    base = build_graph(g.n, base_edges)
    hanging: list[tuple[int, frozenset[int]]] = []
    if not base_vertices:
        if g.n:
            hanging.append((0, frozenset(range(g.n))))
    else:
        removed = [v for v in range(g.n) if v not in base_vertices]
        if removed:
            sub_edges = [(u, v) for (u, v) in g.edges if u not in base_vertices and v not in base_vertices]
            remap = {v: i for i, v in enumerate(removed)}
            forest = build_graph(len(removed), [(remap[u], remap[v]) for u, v in sub_edges])
            for comp in connected_components(forest):
                tree = frozenset(removed[i] for i in comp)
                roots = {w for v in tree for w in g.adj[v] if w in base_vertices}
                assert len(roots) == 1, "a hanging tree attaches to exactly one base vertex"
                hanging.append((roots.pop(), tree))
        hanging.sort()
    return CoreDecomposition(
        base=base,
        base_vertices=base_vertices,
        hanging_trees=hanging,
        core_vertices=frozenset(),
        proper_core_paths=[],
        core_cycles=[],
    )


def core_decomposition(g: Graph) -> CoreDecomposition:
    """Full decomposition of the base into core vertices, paths and cycles.

    Needs at least one cycle (fes >= 1).  With fes = 1 the base is a
    single cycle with no core vertex; it is reported as one core cycle
    anchored at its smallest vertex.
    """
    k = feedback_edge_number(g)
    if k < 1:
        raise ValueError("core decomposition needs feedback edge number >= 1")
    dec = base_graph(g)
    base = dec.base
    core = frozenset(v for v in dec.base_vertices if base.degree(v) >= 3)
    paths: list[tuple[int, ...]] = []
    cycles: list[tuple[int, ...]] = []
    if not core:
        # fes == 1: the base is exactly one cycle
        cycles.append(_closed_walk(base, min(dec.base_vertices)))
    else:
        used: set[tuple[int, int]] = set()
        for c in sorted(core):
            for w in base.adj[c]:
                e = (c, w) if c < w else (w, c)
                if e in used:
                    continue
                walk = [c, w]
                used.add(e)
                while walk[-1] not in core:
                    prev, cur = walk[-2], walk[-1]
                    nxt = next(x for x in base.adj[cur] if x != prev)
                    used.add((cur, nxt) if cur < nxt else (nxt, cur))
                    walk.append(nxt)
                if walk[-1] == c:
                    cycles.append(tuple(walk))
                else:
                    paths.append(tuple(walk))
        assert len(used) == base.m, "every base edge lies on exactly one core path or cycle"
    dec.core_vertices = core
    dec.proper_core_paths = paths
    dec.core_cycles = cycles
    return dec


def _closed_walk(base: Graph, start: int) -> tuple[int, ...]:
    """Walk a 2-regular component from start back to itself, smaller side first."""
    nbrs = sorted(base.adj[start])
    walk = [start, nbrs[0]]
    while walk[-1] != start:
        prev, cur = walk[-2], walk[-1]
        walk.append(next(x for x in base.adj[cur] if x != prev))
    return tuple(walk)


def _path_medians(path: tuple[int, ...]) -> list[int]:
    """Central vertex (even edge count) or both central vertices (odd)."""
    length = len(path) - 1
    if length < 2:
        return []
    if length % 2 == 0:
        return [path[length // 2]]
    return [path[(length - 1) // 2], path[(length + 1) // 2]]


def _cycle_picks(walk: tuple[int, ...]) -> list[int]:
    """Spread internal vertices of a core cycle, as in the cycle construction.

    Two vertices at one-third offsets from the anchor suffice except on
    a 4-cycle, which needs all three internal vertices.
    """
    length = len(walk) - 1
    if length == 4:
        return [walk[1], walk[2], walk[3]]
    return [walk[length // 3], walk[2 * length // 3]]


def fes_meg_construction(g: Graph) -> FesConstruction:
    """MEG-set of size at most 9*fes + leaves - 8 (fes >= 2), built from the
    core decomposition; trees use their leaves and a single cycle uses the
    three-vertex cycle construction on its base.

    The result is verified; a failure would falsify the underlying bound
    and raises instead of returning.
    """
    require_connected(g)
    if g.m == 0:
        raise ValueError("construction needs at least one edge")
    k = g.m - g.n + 1
    leaves = leaf_set(g)
    if k == 0:
        chosen: set[int] = set(leaves)
        budget = len(leaves)
    elif k == 1:
        dec = core_decomposition(g)
        walk = dec.core_cycles[0]
        length = len(walk) - 1
        if length == 4:
            chosen = set(walk[:4])
        else:
            chosen = {walk[0], walk[length // 3], walk[2 * length // 3]}
        chosen |= leaves
        budget = len(leaves) + 4
    else:
        dec = core_decomposition(g)
        chosen = set(leaves) | set(dec.core_vertices)
        for path in dec.proper_core_paths:
            chosen.update(_path_medians(path))
        for walk in dec.core_cycles:
            chosen.update(_cycle_picks(walk))
        budget = 9 * k + len(leaves) - 8
    meg = frozenset(chosen)
    if len(meg) > budget:
        raise RuntimeError(
            f"construction used {len(meg)} vertices, over its budget {budget}; "
            "this would falsify the feedback-edge-set bound"
        )
    if not is_meg_set(g, meg):
        raise RuntimeError("constructed set failed MEG verification")
    return FesConstruction(meg_set=meg, k=k, leaf_count=len(leaves), budget=budget)


def max_leaf_number(g: Graph, *, cap: int = MLN_VERTEX_CAP) -> int:
    """Maximum leaf count over all spanning trees, exactly.

    Uses the identity: for connected graphs on n >= 3 vertices the
    maximum number of leaves equals n minus the size of a minimum
    connected dominating set (the internal vertices of an optimal tree
    are exactly such a set).  Exhaustive over vertex subsets, so capped.
    """
    require_connected(g)
    if g.n > cap:
        raise SizeCapExceededError(f"max leaf number cap is {cap} vertices, got {g.n}")
    if g.n == 1:
        return 0
    if g.n == 2:
        return 2
    for size in range(1, g.n + 1):
        for cand in combinations(range(g.n), size):
            if _connected_dominating(g, cand):
                return g.n - size
    raise AssertionError("a connected graph always has a connected dominating set")


def _connected_dominating(g: Graph, cand: tuple[int, ...]) -> bool:
    inside = set(cand)
    dominated = set(inside)
    for v in inside:
        dominated.update(g.adj[v])
    if len(dominated) != g.n:
        return False
    seen = {cand[0]}
    stack = [cand[0]]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y in inside and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(inside)


def gen_tightness_family(k: int, leaves: int) -> Graph:
    """k four-cycles sharing one core vertex, plus pendant leaves there.

    The family realizes feedback edge number k with monitoring number
    3k + leaves, showing the linear bound cannot drop below 3 per unit
    of feedback.
    """
    if k < 2:
        raise ValueError("tightness family needs k >= 2")
    if leaves < 0:
        raise ValueError("leaf count must be nonnegative")
    edges = []
    for i in range(k):
        a, b, d = 3 * i + 1, 3 * i + 2, 3 * i + 3
        edges += [(0, a), (a, b), (b, d), (0, d)]
    first_leaf = 3 * k + 1
    edges += [(0, first_leaf + j) for j in range(leaves)]
    return build_graph(first_leaf + leaves, edges)
