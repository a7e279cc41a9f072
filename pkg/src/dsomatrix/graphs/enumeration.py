"""Exhaustive labeled-graph enumeration and brute-force canonical keys."""

from __future__ import annotations

from typing import Iterator

from .._kernels import min_relabel_code
from .core import Graph, GraphError, _build
from .io import encode_graph6

MAX_ENUMERATION_ORDER = 7
MAX_CANONICAL_ORDER = 8


def edge_slots(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 order; bit ``k`` of an enumeration mask is slot ``k``."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def labeled_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_labeled(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Yield every labeled graph on ``n`` vertices in edge-bitmask order.

    ``start``/``stop`` select a half-open mask range so independent workers
    can split one order between them.
    """
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")
    slots = edge_slots(n)
    total = 1 << len(slots)
    stop = total if stop is None else min(stop, total)
    for mask in range(max(start, 0), stop):
        edges = [slots[k] for k in range(len(slots)) if (mask >> k) & 1]
        edges.sort()
        yield _build(n, edges)


def enumerate_up_to(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_labeled(n)


def canonical_key(g: Graph) -> bytes:
    """graph6 record of the relabeling with the smallest payload; equal iff isomorphic."""
    if g.n > MAX_CANONICAL_ORDER:
        raise GraphError(f"canonical_key is exhaustive over n!; n={g.n} exceeds {MAX_CANONICAL_ORDER}")
    return encode_graph6(g.n, min_relabel_code(g.n, list(g.adjacency)))
