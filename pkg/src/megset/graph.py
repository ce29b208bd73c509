"""Immutable simple undirected graphs and unweighted shortest-path machinery.

Vertices are dense integers 0..n-1; external labels belong at the I/O
layer.  All distances are BFS hop counts.  ``INFINITE`` marks unreachable
pairs and saturates under addition, so callers never juggle sentinel
integers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import DisconnectedGraphError, GraphFormatError

INFINITE = float("inf")

Edge = tuple[int, int]
DistanceMatrix = tuple[tuple[float, ...], ...]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: edge list plus sorted adjacency, both immutable.

    Connectivity is not an invariant; operations that need it check it.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set()

    def _edge_set(self) -> frozenset[Edge]:
        return _edge_set_of(self)


@lru_cache(maxsize=256)
def _edge_set_of(g: Graph) -> frozenset[Edge]:
    return frozenset(g.edges)


def build_graph(n: int, edges: Iterable[tuple[int, int]], *, strict: bool = False) -> Graph:
    """Validate and normalize an edge list into a Graph.

    Edges are stored with u < v and sorted.  Duplicates are silently
    merged unless ``strict`` is set, in which case they are an error.
    """
    if n < 0:
        raise GraphFormatError(f"vertex count must be nonnegative, got {n}")
    seen: set[Edge] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u},{v}) has an endpoint outside [0,{n})")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            if strict:
                raise GraphFormatError(f"duplicate edge ({e[0]},{e[1]})")
            continue
        seen.add(e)
    ordered = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in ordered:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n=n, edges=ordered, adj=tuple(tuple(sorted(a)) for a in adj))


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise GraphFormatError(f"vertex {v} outside [0,{g.n})")


def normalize_edge(g: Graph, e: tuple[int, int]) -> Edge:
    """Return e as (u,v) with u < v; raise if e is not an edge of g."""
    u, v = e
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u > v:
        u, v = v, u
    if not g.has_edge(u, v):
        raise GraphFormatError(f"({u},{v}) is not an edge of the graph")
    return (u, v)


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Hop distances from source to every vertex (INFINITE if unreachable)."""
    _check_vertex(g, source)
    dist: list[float] = [INFINITE] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        x = q.popleft()
        dx = dist[x] + 1
        for y in g.adj[x]:
            if dist[y] == INFINITE:
                dist[y] = dx
                q.append(y)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    """BFS hop distance between u and v; INFINITE across components."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        return 0
    dist = [-1] * g.n
    dist[u] = 0
    q = deque([u])
    while q:
        x = q.popleft()
        for y in g.adj[x]:
            if dist[y] < 0:
                if y == v:
                    return dist[x] + 1
                dist[y] = dist[x] + 1
                q.append(y)
    return INFINITE


def distance_matrix(g: Graph) -> DistanceMatrix:
    """All-pairs hop distances, one BFS per vertex."""
    return tuple(tuple(bfs_distances(g, s)) for s in range(g.n))


def count_shortest_paths(g: Graph, u: int, v: int) -> int:
    """Number of distinct geodesics from u to v (0 if disconnected).

    Counted over the BFS DAG; Python integers make overflow a non-issue
    even though hypercube counts grow factorially.
    """
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise ValueError("count_shortest_paths requires u != v")
    dist, counts = _bfs_with_counts(g, u)
    return counts[v]


def _bfs_with_counts(g: Graph, source: int) -> tuple[list[float], list[int]]:
    dist: list[float] = [INFINITE] * g.n
    counts = [0] * g.n
    dist[source] = 0
    counts[source] = 1
    q = deque([source])
    while q:
        x = q.popleft()
        dx = dist[x] + 1
        for y in g.adj[x]:
            if dist[y] == INFINITE:
                dist[y] = dx
                q.append(y)
            if dist[y] == dx:
                counts[y] += counts[x]
    return dist, counts


def distance_without_edge(g: Graph, e: tuple[int, int], u: int, v: int) -> float:
    """BFS distance between u and v in G-e, without materializing G-e."""
    eu, ev = normalize_edge(g, e)
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        return 0
    dist: list[float] = [INFINITE] * g.n
    dist[u] = 0
    q = deque([u])
    while q:
        x = q.popleft()
        for y in g.adj[x]:
            if (x == eu and y == ev) or (x == ev and y == eu):
                continue
            if dist[y] == INFINITE:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                q.append(y)
    return INFINITE


def is_connected(g: Graph) -> bool:
    """True iff the graph has a single component (vacuously true for n <= 1)."""
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    q = deque([0])
    reached = 1
    while q:
        x = q.popleft()
        for y in g.adj[x]:
            if not seen[y]:
                seen[y] = True
                reached += 1
                q.append(y)
    return reached == g.n


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("operation requires a connected graph")


def simplicial_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose open neighborhood induces a clique.

    Isolated vertices and leaves qualify: their neighborhoods are
    trivially cliques.
    """
    edge_set = g._edge_set()
    out = []
    for v in range(g.n):
        nb = g.adj[v]
        ok = True
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                if (nb[i], nb[j]) not in edge_set:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(v)
    return frozenset(out)


def twin_vertices(g: Graph) -> frozenset[int]:
    """Vertices of degree >= 1 that have an open or closed twin.

    Open twins share N(u) = N(v); closed twins share N[u] = N[v].  The
    result contains every member of every twin pair, not the pairs.
    """
    open_groups: dict[frozenset[int], list[int]] = {}
    closed_groups: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        if not g.adj[v]:
            continue
        nv = frozenset(g.adj[v])
        open_groups.setdefault(nv, []).append(v)
        closed_groups.setdefault(nv | {v}, []).append(v)
    out: set[int] = set()
    for grp in open_groups.values():
        if len(grp) > 1:
            out.update(grp)
    for grp in closed_groups.values():
        if len(grp) > 1:
            out.update(grp)
    return frozenset(out)


def cut_vertices(g: Graph) -> frozenset[int]:
    """All articulation vertices, by iterative lowlink DFS.

    Requires a connected graph.
    """
    require_connected(g)
    n = g.n
    if n <= 2:
        return frozenset()
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    art = [False] * n
    timer = 0
    # iterative DFS: stack of (vertex, neighbor iterator index)
    stack = [(0, 0)]
    disc[0] = low[0] = timer
    timer += 1
    root_children = 0
    while stack:
        v, i = stack[-1]
        if i < len(g.adj[v]):
            stack[-1] = (v, i + 1)
            w = g.adj[v][i]
            if disc[w] < 0:
                parent[w] = v
                disc[w] = low[w] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                stack.append((w, 0))
            elif w != parent[v]:
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            p = parent[v]
            if p >= 0:
                low[p] = min(low[p], low[v])
                if p != 0 and low[v] >= disc[p]:
                    art[p] = True
    if root_children > 1:
        art[0] = True
    return frozenset(v for v in range(n) if art[v])


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the components, each sorted, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    q.append(y)
        comps.append(sorted(comp))
    return comps


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the given vertices, relabeled densely.

    Returns the subgraph and the old-id -> new-id mapping (sorted order).
    """
    vs = sorted(set(vertices))
    for v in vs:
        _check_vertex(g, v)
    remap = {v: i for i, v in enumerate(vs)}
    keep = set(vs)
    edges = [(remap[u], remap[v]) for (u, v) in g.edges if u in keep and v in keep]
    return build_graph(len(vs), edges), remap


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """A new Graph equal to G-e."""
    eu, ev = normalize_edge(g, e)
    return build_graph(g.n, [ed for ed in g.edges if ed != (eu, ev)])
