"""Triangles of Jacobi-Stirling numbers as integer polynomials in z."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .exactpoly import Poly

Kind = Literal["second", "first"]

_ZERO = Poly((), "z")
_ONE = Poly.const(1, "z")


class IndexOutOfRange(IndexError):
    pass


def _weight(kind: Kind, n: int, k: int) -> Poly:
    # second kind: k(k+z); first kind: -(n-1)(n-1+z)
    if kind == "second":
        return Poly((k * k, k), "z")
    m = n - 1
    return Poly((-m * m, -m), "z")


@dataclass(frozen=True)
class JSTriangle:
    kind: Kind
    n_max: int
    rows: tuple  # rows[n][k] for 0 <= k <= n

    def entry(self, n: int, k: int) -> Poly:
        if not (0 <= k <= n <= self.n_max):
            raise IndexOutOfRange(f"({n}, {k}) outside 0 <= k <= n <= {self.n_max}")
        return self.rows[n][k]

    def __iter__(self):
        for n, row in enumerate(self.rows):
            for k, p in enumerate(row):
                yield n, k, p


@lru_cache(maxsize=None)
def build_triangle(kind: Kind, n_max: int) -> JSTriangle:
    if kind not in ("second", "first"):
        raise ValueError(f"unknown kind {kind!r}")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    rows = [(_ONE,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            if k == 0:
                row.append(_ZERO)
                continue
            left = prev[k - 1]
            right = prev[k] if k < n else _ZERO
            row.append(left + _weight(kind, n, k) * right)
        rows.append(tuple(row))
    return JSTriangle(kind, n_max, tuple(rows))


def _falling_basis(k: int) -> list:
    """prod_{i<k} (x - i(z+i)) as a list of z-polynomials indexed by x-degree."""
    out = [_ONE]
    for i in range(k):
        root = Poly((i * i, i), "z")
        nxt = [_ZERO] * (len(out) + 1)
        for d, c in enumerate(out):
            nxt[d + 1] = nxt[d + 1] + c
            nxt[d] = nxt[d] - c * root
        out = nxt
    return out


def verify_defining_identity(kind: Kind, n: int) -> bool:
    """Expand the connection identity symbolically and compare exactly."""
    if n > 12:
        raise ValueError("n > 12 is outside the cost guard")
    tri = build_triangle(kind, n)
    if kind == "second":
        lhs = [_ZERO] * n + [_ONE]
        rhs = [_ZERO] * (n + 1)
        for k in range(n + 1):
            c = tri.entry(n, k)
            for d, b in enumerate(_falling_basis(k)):
                rhs[d] = rhs[d] + c * b
    else:
        lhs = _falling_basis(n)
        rhs = [tri.entry(n, k) for k in range(n + 1)]
    return lhs == rhs


def _check_second(t: JSTriangle):
    if t.kind != "second":
        raise ValueError("requires a second-kind triangle")


def stirling2(t: JSTriangle, n: int, k: int) -> int:
    _check_second(t)
    return t.entry(n, k).leading


def central_T(t: JSTriangle, n: int, k: int) -> int:
    """T(2n, 2k), the constant term in z."""
    _check_second(t)
    return t.entry(n, k).coeff(0)


def legendre_stirling(t: JSTriangle, n: int, k: int) -> int:
    return t.entry(n, k)(1)
