"""Seeded random graph generators for the property-test corpus.

Every generator is a pure function of (parameters, seed): the same
inputs always produce the identical graph.
"""

from __future__ import annotations

import heapq
import random

from .graph import Graph, build_graph


def _decode_ancestor_sequence(seq: list[int], n: int) -> list[tuple[int, int]]:
    """Decode a Prufer-style ancestor sequence into the edges of a labeled tree."""
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        degree[leaf] -= 1
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, v = (x for x in range(n) if degree[x] == 1)
    edges.append((u, v))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on n vertices (Prufer decoding)."""
    if n < 1:
        raise ValueError("tree needs at least 1 vertex")
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return build_graph(n, _decode_ancestor_sequence(seq, n))


def random_unicyclic(n: int, k: int, seed: int) -> Graph:
    """Cycle of length k on vertices 0..k-1 with a random forest attached."""
    if not 3 <= k <= n:
        raise ValueError("need 3 <= k <= n")
    rng = random.Random(seed)
    edges = [(i, (i + 1) % k) for i in range(k)]
    for v in range(k, n):
        edges.append((rng.randrange(v), v))
    return build_graph(n, edges)


def random_connected(n: int, m: int, seed: int) -> Graph:
    """Random spanning tree plus m-(n-1) random extra edges; simple, connected."""
    if n < 1:
        raise ValueError("need at least 1 vertex")
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise ValueError(f"edge count {m} outside [{n - 1}, {n * (n - 1) // 2}]")
    rng = random.Random(seed)
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        tree_edges = [(0, 1)]
    else:
        seq = [rng.randrange(n) for _ in range(n - 2)]
        tree_edges = _decode_ancestor_sequence(seq, n)
    have = {(min(u, v), max(u, v)) for u, v in tree_edges}
    candidates = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in have
    ]
    extra = rng.sample(candidates, m - (n - 1))
    return build_graph(n, tree_edges + extra)
