"""Closed-form diminished Sombor spectra of complete, cycle, complete bipartite and star graphs."""

from __future__ import annotations

import math

from .matrix import PreconditionError, Spectrum

HALF_ROOT2 = math.sqrt(2.0) / 2.0


def spec_complete(n: int) -> Spectrum:
    if n < 1:
        raise PreconditionError(f"K_n needs n >= 1, got {n}")
    if n == 1:
        return Spectrum.from_values([0.0])
    return Spectrum.from_values([HALF_ROOT2 * (n - 1)] + [-HALF_ROOT2] * (n - 1))


def spec_cycle(n: int) -> Spectrum:
    if n < 3:
        raise PreconditionError(f"C_n needs n >= 3, got {n}")
    return Spectrum.from_values(math.sqrt(2.0) * math.cos(2.0 * math.pi * j / n) for j in range(n))


def spec_complete_bipartite(p: int, q: int) -> Spectrum:
    if p < 1 or q < 1:
        raise PreconditionError(f"K_(p,q) needs p, q >= 1, got ({p}, {q})")
    top = math.sqrt(p * q) * math.sqrt(p * p + q * q) / (p + q)
    return Spectrum.from_values([top, -top] + [0.0] * (p + q - 2))


def spec_star(n: int) -> Spectrum:
    if n < 2:
        raise PreconditionError(f"S_n needs n >= 2, got {n}")
    top = math.sqrt(n - 1) * math.sqrt(n * n - 2 * n + 2) / n
    return Spectrum.from_values([top, -top] + [0.0] * (n - 2))
