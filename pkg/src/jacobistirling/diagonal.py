"""Diagonal Jacobi-Stirling polynomials and their descent polynomials.

``p[k][i]`` is the coefficient of z^i in JS(n+k, n; z), a rational
polynomial in n of degree 3k - i.  The descent polynomial A_{k,i}(t) is the
numerator of its ordinary generating function over (1-t)^(3k-i+1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Literal, Tuple

from .exactpoly import Poly, discrete_sum, gf_numerator, series_over_power
from .jsnumbers import build_triangle


class CrossCheckFailure(AssertionError):
    """Two independent routes to the same quantity disagree."""


_N = Poly((0, 1), "n")


@dataclass(frozen=True)
class DiagonalPoly:
    k: int
    coeffs_by_i: Tuple[Poly, ...]
    kind: Literal["second", "first"] = "second"

    def __getitem__(self, i: int) -> Poly:
        return self.coeffs_by_i[i]

    def value(self, n, z):
        return sum(p(n) * z ** i for i, p in enumerate(self.coeffs_by_i))


def leading_coefficient(k: int, i: int) -> Fraction:
    return Fraction(1, 3 ** (k - i) * 2 ** i * factorial(i) * factorial(k - i))


@lru_cache(maxsize=None)
def _p_family(k: int) -> Tuple[Poly, ...]:
    if k == 0:
        return (Poly.const(1, "n"),)
    prev = _p_family(k - 1)
    zero = Poly((), "n")
    out = []
    for i in range(k + 1):
        a = prev[i] if i < k else zero
        b = prev[i - 1] if i >= 1 else zero
        # p_{k,i}(n) - p_{k,i}(n-1) = n^2 p_{k-1,i}(n) + n p_{k-1,i-1}(n), p_{k,i}(0) = 0
        out.append(discrete_sum(_N * _N * a + _N * b))
    return tuple(out)


def diagonal_second(k: int) -> DiagonalPoly:
    if k < 0:
        raise ValueError("k must be nonnegative")
    family = _p_family(k)
    tri = build_triangle("second", 2 * k + 3)
    for n in range(1, k + 4):
        entry = tri.entry(n + k, n)
        for i, p in enumerate(family):
            if p(n) != entry.coeff(i):
                raise CrossCheckFailure(
                    f"p_{{{k},{i}}}({n}) = {p(n)} but JS({n + k},{n}) gives {entry.coeff(i)}")
    return DiagonalPoly(k, family, "second")


def diagonal_first(k: int) -> DiagonalPoly:
    """q_{k,i}(n) = (-1)^i p_{k,i}(-n), the z-coefficients of js(n, n-k; z)."""
    p = diagonal_second(k)
    qs = tuple(c.compose_linear(-1, 0) * (-1) ** i for i, c in enumerate(p.coeffs_by_i))
    tri = build_triangle("first", 2 * k + 4)
    for n in range(k, k + 5):
        entry = tri.entry(n, n - k)
        for i, q in enumerate(qs):
            if q(n) != entry.coeff(i):
                raise CrossCheckFailure(
                    f"q_{{{k},{i}}}({n}) = {q(n)} but js({n},{n - k}) gives {entry.coeff(i)}")
    return DiagonalPoly(k, qs, "first")


@dataclass(frozen=True)
class DescentTable:
    k_max: int
    method: str
    A: Dict[Tuple[int, int], Poly] = field(compare=False)

    def __getitem__(self, key: Tuple[int, int]) -> Poly:
        return self.A[key]

    def same_values(self, other: "DescentTable") -> bool:
        keys = {key for key in self.A if key[0] <= min(self.k_max, other.k_max)}
        return all(self.A[key] == other.A[key] for key in keys)


def descent_table_gf(k_max: int) -> DescentTable:
    A = {}
    for k in range(k_max + 1):
        for i, p in enumerate(diagonal_second(k).coeffs_by_i):
            A[k, i] = gf_numerator(p, 3 * k - i)
    return DescentTable(k_max, "gf", A)


def descent_table_rec(k_max: int) -> DescentTable:
    a: Dict[Tuple[int, int, int], int] = {(0, 0, 0): 1}

    def get(k, i, j):
        if k < 0 or i < 0 or j < 0:
            return 0
        return a.get((k, i, j), 0)

    for k in range(1, k_max + 1):
        for i in range(k + 1):
            m = 3 * k - i
            for j in range(1, 2 * k - i + 1):
                a[k, i, j] = (j * j * get(k - 1, i, j)
                              + (2 * (j - 1) * (m - j - 1) + (m - 2)) * get(k - 1, i, j - 1)
                              + (m - j) ** 2 * get(k - 1, i, j - 2)
                              + j * get(k - 1, i - 1, j)
                              + (m - j) * get(k - 1, i - 1, j - 1))
    A = {}
    for k in range(k_max + 1):
        for i in range(k + 1):
            top = 2 * k - i if k else 0
            A[k, i] = Poly([get(k, i, j) for j in range(top + 1)], "t")
    return DescentTable(k_max, "rec", A)


def first_kind_gf_check(k: int, i: int) -> bool:
    """Check that sum_{n>=1} q_{k,i}(n) t^n has the reversed numerator of A_{k,i}."""
    if not 0 <= i <= k:
        raise ValueError("need 0 <= i <= k")
    q = diagonal_first(k)[i]
    d = 3 * k - i
    A = gf_numerator(diagonal_second(k)[i], d)
    # numerator of the n >= 1 series has degree <= d + 1
    series = [0] + [q(n) for n in range(1, d + 2)]
    num = Poly(series, "t") * Poly((1, -1), "t") ** (d + 1)
    num = Poly(num.coeffs[: d + 2], "t")
    if series_over_power(num, d + 1, d + 8)[1:] != [q(n) for n in range(1, d + 8)]:
        return False
    return num * (-1) ** k == A.reversed_to(d + 1)
