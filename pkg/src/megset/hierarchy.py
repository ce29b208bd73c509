"""Verifiers for the related covering notions weaker than full monitoring.

These check, in increasing strength: geodetic sets (vertices covered by
some geodesic), edge-geodetic sets (edges covered by some geodesic),
strong edge-geodetic sets (one chosen geodesic per pair covers all
edges), and distance-edge-monitoring sets (one endpoint of the
monitoring pair may be any vertex).  Only verification is provided;
minimizing these parameters is a different problem.
"""

from __future__ import annotations

from .errors import SizeCapExceededError
from .graph import Graph, Edge, require_connected
from .monitoring import _monitors, geodesy

STRONG_EG_DEFAULT_CAP = 10**6


def _members(g: Graph, s) -> list[int]:
    out = sorted(set(s))
    for v in out:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} outside [0,{g.n})")
    return out


def is_geodetic_set(g: Graph, s) -> bool:
    """Every vertex lies on some geodesic between two vertices of s."""
    require_connected(g)
    members = _members(g, s)
    D, _ = geodesy(g)
    in_s = set(members)
    for v in range(g.n):
        if v in in_s:
            continue
        if not any(
            D[x][v] + D[v][y] == D[x][y]
            for i, x in enumerate(members)
            for y in members[i + 1:]
        ):
            return False
    return True


def is_edge_geodetic_set(g: Graph, s) -> bool:
    """Every edge lies on some geodesic between two vertices of s."""
    require_connected(g)
    members = _members(g, s)
    D, _ = geodesy(g)
    for (u, v) in g.edges:
        if not any(
            D[x][u] + 1 + D[v][y] == D[x][y] or D[x][v] + 1 + D[u][y] == D[x][y]
            for i, x in enumerate(members)
            for y in members[i + 1:]
        ):
            return False
    return True


def is_strong_edge_geodetic_set(g: Graph, s, *, cap: int = STRONG_EG_DEFAULT_CAP) -> bool:
    """Can one geodesic per pair of s be chosen so their union covers E?

    Exact backtracking over the per-pair geodesic lists.  The number of
    selections is the product of per-pair geodesic counts; instances
    where it exceeds the cap raise instead of running unbounded.
    """
    require_connected(g)
    members = _members(g, s)
    D, C = geodesy(g)
    product = 1
    pairs = []
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            pairs.append((x, y))
            product *= C[x][y]
            if product > cap:
                raise SizeCapExceededError(
                    f"strong edge-geodetic search space exceeds cap {cap}"
                )
    target = set(g.edges)
    if not target:
        return True
    choice_lists = [_geodesic_edge_sets(g, D, x, y) for (x, y) in pairs]
    choice_lists.sort(key=len)
    suffix: list[set[Edge]] = [set() for _ in range(len(choice_lists) + 1)]
    for i in range(len(choice_lists) - 1, -1, -1):
        suffix[i] = suffix[i + 1].union(*choice_lists[i])

    def backtrack(i: int, covered: frozenset[Edge]) -> bool:
        if len(covered) == len(target):
            return True
        if i == len(choice_lists):
            return False
        if not (target - covered) <= suffix[i]:
            return False
        for edge_set in choice_lists[i]:
            if backtrack(i + 1, covered | edge_set):
                return True
        return False

    return backtrack(0, frozenset())


def _geodesic_edge_sets(g: Graph, D, x: int, y: int) -> list[frozenset[Edge]]:
    """Edge sets of all geodesics from x to y, walking the distance DAG."""
    out: list[frozenset[Edge]] = []
    path: list[int] = [y]

    def walk(v: int) -> None:
        if v == x:
            rev = path[::-1]
            out.append(frozenset(
                (a, b) if a < b else (b, a) for a, b in zip(rev, rev[1:])
            ))
            return
        for w in g.adj[v]:
            if D[x][w] + 1 == D[x][v]:
                path.append(w)
                walk(w)
                path.pop()

    walk(y)
    return out


def is_dem_set(g: Graph, s) -> bool:
    """Distance-edge-monitoring: each edge is monitored by some pair with
    one endpoint in s and the other anywhere in the graph."""
    require_connected(g)
    members = _members(g, s)
    D, C = geodesy(g)
    for (u, v) in g.edges:
        if not any(
            x != y and _monitors(D, C, x, y, u, v)
            for x in members
            for y in range(g.n)
        ):
            return False
    return True
