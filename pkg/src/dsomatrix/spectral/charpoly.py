"""Characteristic polynomials: Vieta expansion of a spectrum and the exact path recurrence."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .matrix import Spectrum


@dataclass(frozen=True)
class CharPoly:
    """Monic coefficients ``c_0..c_n`` of sum(c_k * x**k), lowest degree first."""

    coefficients: tuple
    exact: bool

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int):
        return self.coefficients[k]


def char_poly_numeric(s: Spectrum) -> CharPoly:
    # multiply out prod(x - lambda_i), coefficients stored highest degree first
    desc = [1.0]
    for lam in s.eigenvalues:
        nxt = desc + [0.0]
        for k in range(1, len(nxt)):
            nxt[k] -= lam * desc[k - 1]
        desc = nxt
    return CharPoly(tuple(reversed(desc)), exact=False)


def _shift(p: Sequence[Fraction]) -> list[Fraction]:
    return [Fraction(0)] + list(p)


def _axpy(*terms: tuple[Fraction, Sequence[Fraction]]) -> list[Fraction]:
    width = max(len(p) for _, p in terms)
    out = [Fraction(0)] * width
    for scale, p in terms:
        for k, c in enumerate(p):
            out[k] += scale * c
    return out


# squared end weight (degrees 1, 2) and inner weight (degrees 2, 2)
A_SQ = Fraction(5, 9)
B_SQ = Fraction(1, 2)

_LISTED = {
    2: (Fraction(-1, 2), Fraction(0), Fraction(1)),
    3: (Fraction(0), Fraction(-10, 9), Fraction(0), Fraction(1)),
    4: (Fraction(25, 81), Fraction(0), Fraction(-29, 18), Fraction(0), Fraction(1)),
}


def inner_determinants(k_max: int) -> list[list[Fraction]]:
    """Determinants of the k x k tridiagonal blocks with off-diagonal sqrt(1/2).

    Entry ``k`` of the result (ascending coefficients) for ``k = 0..k_max``;
    ``k = 0`` is the empty determinant 1.
    """
    omega = [[Fraction(1)], [Fraction(0), Fraction(1)]]
    for _ in range(2, k_max + 1):
        omega.append(_axpy((Fraction(1), _shift(omega[-1])), (-B_SQ, omega[-2])))
    return omega[: k_max + 1]


def path_char_poly(n: int) -> CharPoly:
    """Exact characteristic polynomial of the path P_n's DSO matrix (n >= 2)."""
    if n < 2:
        raise ValueError(f"path_char_poly needs n >= 2, got {n}")
    if n in _LISTED:
        return CharPoly(_LISTED[n], exact=True)
    omega = inner_determinants(n - 2)
    coeffs = _axpy(
        (Fraction(1), _shift(_shift(omega[n - 2]))),
        (-2 * A_SQ, _shift(omega[n - 3])),
        (A_SQ * A_SQ, omega[n - 4]),
    )
    coeffs = coeffs[: n + 1] + [Fraction(0)] * (n + 1 - len(coeffs))
    return CharPoly(tuple(coeffs), exact=True)
