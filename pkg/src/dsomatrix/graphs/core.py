"""Simple undirected graphs, family generators and structural predicates."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid vertex indices, self-loops or family parameters."""


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``edges`` holds normalized pairs ``(i, j)`` with ``i < j`` in sorted
    order; ``degrees`` and ``adjacency`` (one neighbour bitmask per vertex)
    are caches derived from it. Build instances with :func:`from_edge_list`.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...] = field(compare=False, repr=False)
    adjacency: tuple[int, ...] = field(compare=False, repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adjacency[i] >> j) & 1)

    def neighbors(self, v: int) -> list[int]:
        mask = self.adjacency[v]
        return [u for u in range(self.n) if (mask >> u) & 1]


def _build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    # trusted path: edges already normalized, deduplicated and sorted
    edges = tuple(edges)
    deg = [0] * n
    adj = [0] * n
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(n, edges, tuple(deg), tuple(adj))


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from vertex count and (possibly unordered, repeated) pairs."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    normalized = set()
    for pair in pairs:
        i, j = (int(x) for x in pair)
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({i}, {j}) out of range for n={n}")
        if i == j:
            raise GraphError(f"self-loop ({i}, {j}) rejected")
        normalized.add((i, j) if i < j else (j, i))
    return _build(n, sorted(normalized))


def edgeless(n: int) -> Graph:
    return _build(n, ())


def complement(g: Graph) -> Graph:
    n = g.n
    return _build(
        n, ((i, j) for i in range(n) for j in range(i + 1, n) if not (g.adjacency[i] >> j) & 1)
    )


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shift = a.n
    return _build(a.n + b.n, a.edges + tuple((i + shift, j + shift) for i, j in b.edges))


def remove_vertex(g: Graph, v: int) -> Graph:
    """Induced subgraph on all vertices except ``v``, relabeled consecutively."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")

    def relabel(x: int) -> int:
        return x - 1 if x > v else x

    return _build(
        g.n - 1, ((relabel(i), relabel(j)) for i, j in g.edges if i != v and j != v)
    )


FAMILIES = ("path", "cycle", "complete", "complete_bipartite", "star", "matching", "edgeless")


def generate_family(
    kind: str, n: int | None = None, p: int | None = None, q: int | None = None
) -> Graph:
    """Named graph with conventional labels.

    Paths and cycles use consecutive vertices; ``complete_bipartite`` puts
    ``0..p-1`` in the first part; the star centre is vertex 0; the matching
    pairs ``(0,1), (2,3), ...``.
    """
    if kind == "complete_bipartite":
        if p is None or q is None or p < 1 or q < 1:
            raise GraphError("complete_bipartite needs p >= 1 and q >= 1")
        return _build(p + q, ((i, j) for i in range(p) for j in range(p, p + q)))
    if kind not in FAMILIES:
        raise GraphError(f"unknown family {kind!r}; expected one of {', '.join(FAMILIES)}")
    if n is None or n < 1:
        raise GraphError(f"{kind} needs n >= 1")
    if kind == "path":
        return _build(n, ((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        if n < 3:
            raise GraphError(f"cycle needs n >= 3, got {n}")
        return _build(n, sorted([(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]))
    if kind == "complete":
        return _build(n, ((i, j) for i in range(n) for j in range(i + 1, n)))
    if kind == "star":
        if n < 2:
            raise GraphError(f"star needs n >= 2, got {n}")
        return _build(n, ((0, j) for j in range(1, n)))
    if kind == "matching":
        if n % 2:
            raise GraphError(f"matching needs even n, got {n}")
        return _build(n, ((i, i + 1) for i in range(0, n, 2)))
    return edgeless(n)


@dataclass(frozen=True)
class DegreeSummary:
    n: int
    m: int
    max_degree: int
    min_degree: int
    first_zagreb: int


def degree_summary(g: Graph) -> DegreeSummary:
    degs = g.degrees
    return DegreeSummary(
        n=g.n,
        m=g.m,
        max_degree=max(degs, default=0),
        min_degree=min(degs, default=0),
        first_zagreb=sum(d * d for d in degs),
    )


@dataclass(frozen=True)
class GraphClass:
    """Structural flags used as theorem preconditions and equality cases.

    ``diameter`` is ``math.inf`` for disconnected graphs. ``bipartite_sizes``
    is ``(p, q)`` with ``p <= q`` when the graph is complete bipartite.
    """

    is_connected: bool
    is_regular: bool
    regular_degree: int | None
    is_complete: bool
    is_bipartite: bool
    parts: tuple[tuple[int, ...], tuple[int, ...]] | None
    is_complete_bipartite: bool
    bipartite_sizes: tuple[int, int] | None
    is_star: bool
    is_edgeless: bool
    is_perfect_matching: bool
    diameter: float


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        mask = g.adjacency[v]
        while mask:
            low = mask & -mask
            u = low.bit_length() - 1
            mask ^= low
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def diameter(g: Graph) -> float:
    if g.n == 0:
        return math.inf
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if -1 in dist:
            return math.inf
        best = max(best, max(dist))
    return best


def _two_coloring(g: Graph) -> list[int] | None:
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def classify(g: Graph) -> GraphClass:
    n, m = g.n, g.m
    degs = g.degrees
    diam = diameter(g)
    connected = diam != math.inf
    regular = n >= 1 and min(degs) == max(degs)

    coloring = _two_coloring(g)
    parts = None
    complete_bip = False
    sizes = None
    if coloring is not None:
        left = tuple(v for v in range(n) if coloring[v] == 0)
        right = tuple(v for v in range(n) if coloring[v] == 1)
        parts = (left, right)
        if left and right and m == len(left) * len(right):
            complete_bip = True
            sizes = (min(len(left), len(right)), max(len(left), len(right)))

    return GraphClass(
        is_connected=connected,
        is_regular=regular,
        regular_degree=degs[0] if regular else None,
        is_complete=n >= 1 and m == n * (n - 1) // 2,
        is_bipartite=coloring is not None,
        parts=parts,
        is_complete_bipartite=complete_bip,
        bipartite_sizes=sizes,
        is_star=complete_bip and n >= 2 and sizes[0] == 1,
        is_edgeless=m == 0,
        is_perfect_matching=n >= 2 and all(d == 1 for d in degs),
        diameter=diam,
    )
