"""The monitoring predicate and its set-level operations.

A pair (x, y) monitors an edge e when e lies on every geodesic between
x and y.  Production test: deleting e strictly increases d(x, y); the
two phrasings are equivalent because e is on all geodesics exactly when
its removal destroys all of them.

Set-level operations use an equivalent O(1)-per-query criterion based
on geodesic counts: e = (u, v) is on all x-y geodesics iff the number
of geodesics through e, which is sigma(x,u) * sigma(v,y) in the feasible
orientation, equals sigma(x,y).  One counting BFS per vertex replaces
one BFS per (pair, edge) query.  The test suite pins all three routes
(path enumeration, distance increase, count product) to each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .graph import (
    INFINITE,
    Edge,
    Graph,
    _bfs_with_counts,
    distance,
    distance_without_edge,
    normalize_edge,
    require_connected,
)


@dataclass
class WitnessReport:
    """Per-edge monitoring pairs (possibly capped) plus the uncovered edges."""

    witnesses: dict[Edge, list[tuple[int, int]]]
    uncovered: list[Edge]


@dataclass
class ProbeObservation:
    x: int
    y: int
    old_distance: float
    new_distance: float  # INFINITE when the failed edge was a bridge


@dataclass
class DetectionReport:
    """Distance changes seen by a probe set after one edge fails."""

    failed_edge: Edge
    observations: list[ProbeObservation] = field(default_factory=list)

    @property
    def detected(self) -> bool:
        return bool(self.observations)


@lru_cache(maxsize=128)
def geodesy(g: Graph) -> tuple[tuple[tuple[float, ...], ...], tuple[tuple[int, ...], ...]]:
    """All-pairs distances and geodesic counts (one counting BFS per vertex)."""
    dists = []
    counts = []
    for s in range(g.n):
        d, c = _bfs_with_counts(g, s)
        dists.append(tuple(d))
        counts.append(tuple(c))
    return tuple(dists), tuple(counts)


def _monitors(D, C, x: int, y: int, u: int, v: int) -> bool:
    """Count-product criterion: is edge (u,v) on all x-y geodesics?"""
    d = D[x][y]
    if d == INFINITE:
        return False
    via = 0
    if D[x][u] + 1 + D[v][y] == d:
        via = C[x][u] * C[v][y]
    elif D[x][v] + 1 + D[u][y] == d:
        via = C[x][v] * C[u][y]
    return via == C[x][y]


def pair_monitors_edge(g: Graph, x: int, y: int, e: tuple[int, int]) -> bool:
    """True iff e lies on every geodesic between x and y.

    Decided by the distance-increase test: d(G-e; x, y) > d(G; x, y),
    with INFINITE counting as greater (bridge case).
    """
    require_connected(g)
    eu, ev = normalize_edge(g, e)
    if x == y:
        raise ValueError("monitoring pair must be two distinct vertices")
    return distance_without_edge(g, (eu, ev), x, y) > distance(g, x, y)


def _sorted_set(g: Graph, s) -> list[int]:
    out = sorted(set(s))
    for v in out:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} outside [0,{g.n})")
    return out


def monitored_edges(g: Graph, s) -> set[Edge]:
    """All edges monitored by at least one pair drawn from s."""
    require_connected(g)
    members = _sorted_set(g, s)
    D, C = geodesy(g)
    out: set[Edge] = set()
    for (u, v) in g.edges:
        for i, x in enumerate(members):
            hit = False
            for y in members[i + 1:]:
                if _monitors(D, C, x, y, u, v):
                    out.add((u, v))
                    hit = True
                    break
            if hit:
                break
    return out


def is_meg_set(g: Graph, s) -> bool:
    """True iff every edge of g is monitored by some pair of s."""
    require_connected(g)
    members = _sorted_set(g, s)
    D, C = geodesy(g)
    for (u, v) in g.edges:
        if not _edge_covered(D, C, members, u, v):
            return False
    return True


def _edge_covered(D, C, members: list[int], u: int, v: int) -> bool:
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            if _monitors(D, C, x, y, u, v):
                return True
    return False


def witness_report(g: Graph, s, max_witnesses_per_edge: int = 3) -> WitnessReport:
    """Up to max_witnesses_per_edge monitoring pairs per edge, lexicographic.

    The uncovered list is always complete regardless of the cap.
    """
    require_connected(g)
    if max_witnesses_per_edge < 1:
        raise ValueError("max_witnesses_per_edge must be positive")
    members = _sorted_set(g, s)
    D, C = geodesy(g)
    witnesses: dict[Edge, list[tuple[int, int]]] = {}
    uncovered: list[Edge] = []
    for (u, v) in g.edges:
        found: list[tuple[int, int]] = []
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                if _monitors(D, C, x, y, u, v):
                    found.append((x, y))
                    if len(found) >= max_witnesses_per_edge:
                        break
            if len(found) >= max_witnesses_per_edge:
                break
        witnesses[(u, v)] = found
        if not found:
            uncovered.append((u, v))
    return WitnessReport(witnesses=witnesses, uncovered=uncovered)


def simulate_failure(g: Graph, s, e: tuple[int, int]) -> DetectionReport:
    """Remove edge e and report every probe pair whose distance grew.

    A bridge failure shows up as INFINITE new distance, which counts as
    an increase.  An empty report means no pair of s monitors e.
    """
    require_connected(g)
    eu, ev = normalize_edge(g, e)
    members = _sorted_set(g, s)
    report = DetectionReport(failed_edge=(eu, ev))
    D, _ = geodesy(g)
    # one BFS per probe on G-e covers all pairs of s
    new_dist = {x: _bfs_without_edge(g, eu, ev, x) for x in members}
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            old = D[x][y]
            new = new_dist[x][y]
            if new > old:
                report.observations.append(ProbeObservation(x, y, old, new))
    return report


def _bfs_without_edge(g: Graph, eu: int, ev: int, source: int) -> list[float]:
    from collections import deque

    dist: list[float] = [INFINITE] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        x = q.popleft()
        for y in g.adj[x]:
            if (x == eu and y == ev) or (x == ev and y == eu):
                continue
            if dist[y] == INFINITE:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist
