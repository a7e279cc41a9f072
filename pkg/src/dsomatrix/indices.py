"""Degree-based topological indices and the diminished Sombor edge weight."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .graphs import Graph


def edge_weight(d_u: int, d_v: int) -> float:
    """sqrt(d_u^2 + d_v^2) / (d_u + d_v); lies in [sqrt(2)/2, 1)."""
    if d_u < 1 or d_v < 1:
        raise ValueError(f"edge endpoints need positive degrees, got ({d_u}, {d_v})")
    return math.sqrt(d_u * d_u + d_v * d_v) / (d_u + d_v)


def dso_index(g: Graph) -> float:
    """Diminished Sombor index: sum of edge weights."""
    d = g.degrees
    return sum(edge_weight(d[i], d[j]) for i, j in g.edges)


def geometric_arithmetic(g: Graph) -> float:
    d = g.degrees
    return sum(2.0 * math.sqrt(d[i] * d[j]) / (d[i] + d[j]) for i, j in g.edges)


def first_zagreb(g: Graph) -> int:
    return sum(x * x for x in g.degrees)


def gutman_milovanovic(g: Graph, alpha: float, beta: float) -> float:
    """M_{alpha,beta}: sum over edges of (d_u d_v)^alpha (d_u + d_v)^beta."""
    d = g.degrees
    return sum(float(d[i] * d[j]) ** alpha * float(d[i] + d[j]) ** beta for i, j in g.edges)


def weight_square_sum(g: Graph) -> float:
    """Sum over edges of (d_i^2 + d_j^2) / (d_i + d_j)^2."""
    d = g.degrees
    return sum((d[i] ** 2 + d[j] ** 2) / (d[i] + d[j]) ** 2 for i, j in g.edges)


def trace_square_edge_formula(g: Graph) -> float:
    """tr(M^2) computed from degrees alone: twice the weight-square sum."""
    return 2.0 * weight_square_sum(g)


class TraceSquareIdentity(NamedTuple):
    lhs: float
    rhs_corrected: float
    rhs_as_stated: float


def trace_square_identity(g: Graph) -> TraceSquareIdentity:
    """Weight-square sum against m - 2 M_{1,-2} (exact) and m - M_{1,-2} (as published).

    Only the corrected form is an identity, since
    (a^2 + b^2)/(a + b)^2 = 1 - 2ab/(a + b)^2 edge by edge.
    """
    m12 = gutman_milovanovic(g, 1.0, -2.0)
    return TraceSquareIdentity(weight_square_sum(g), g.m - 2.0 * m12, g.m - m12)


@dataclass(frozen=True)
class IndexValue:
    index_id: str
    value: float
    n: int
    m: int


def compute_indices(g: Graph) -> list[IndexValue]:
    """Every index the bound audit consumes, in a fixed order."""
    identity = trace_square_identity(g)
    values = [
        ("DSO", dso_index(g)),
        ("GA", geometric_arithmetic(g)),
        ("M1", float(first_zagreb(g))),
        ("M_1_-2", gutman_milovanovic(g, 1.0, -2.0)),
        ("TR_M2", trace_square_edge_formula(g)),
        ("WSQ", identity.lhs),
        ("WSQ_CORRECTED_RHS", identity.rhs_corrected),
        ("WSQ_AS_STATED_RHS", identity.rhs_as_stated),
    ]
    return [IndexValue(name, value, g.n, g.m) for name, value in values]
