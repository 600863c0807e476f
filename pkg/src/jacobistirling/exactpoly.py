"""Exact dense univariate polynomials over Z and Q.

A polynomial is stored as a tuple of coefficients in ascending degree
order.  Coefficients are Python ints when integral and ``Fraction``
otherwise, so the same type covers both integer and rational use.  Trailing
zeros are stripped; the zero polynomial has an empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd
from numbers import Rational
from typing import Iterable, Sequence


class NonIntegerCoefficient(ArithmeticError):
    """A generating-function numerator came out non-integral."""


class ZeroPolynomial(ValueError):
    pass


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"exact rational coefficient expected, got {c!r}")
    return c


class Poly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "t"):
        cs = [_norm(c if isinstance(c, (int, Fraction)) else Fraction(c)) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c, var: str = "t") -> "Poly":
        return cls((c,), var)

    @classmethod
    def monomial(cls, degree: int, c=1, var: str = "t") -> "Poly":
        return cls((0,) * degree + (c,), var)

    @classmethod
    def from_roots(cls, roots: Iterable, var: str = "t") -> "Poly":
        p = cls.const(1, var)
        for r in roots:
            p = p * cls((-Fraction(r), 1), var)
        return p

    # -- basic queries ------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, j: int):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def valuation(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("valuation of the zero polynomial")
        return next(j for j, c in enumerate(self.coeffs) if c != 0)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm(acc) if isinstance(acc, Fraction) else acc

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other, self.var)

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] += c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs], self.var)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly((), self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = Poly.const(1, self.var)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self) -> "Poly":
        return Poly([j * c for j, c in enumerate(self.coeffs)][1:], self.var)

    def compose_linear(self, a, b) -> "Poly":
        """Return p(a*x + b)."""
        lin = Poly((b, a), self.var)
        out = Poly((), self.var)
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def shift_down(self, m: int) -> "Poly":
        """Divide by var**m; the low m coefficients must vanish."""
        if any(self.coeffs[:m]):
            raise ValueError("polynomial not divisible by the requested power")
        return Poly(self.coeffs[m:], self.var)

    def reversed_to(self, n: int) -> "Poly":
        """Return var**n * p(1/var); requires n >= degree."""
        if n < self.degree:
            raise ValueError("reversal degree smaller than the polynomial degree")
        cs = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return Poly(reversed(cs), self.var)

    def with_var(self, var: str) -> "Poly":
        return Poly(self.coeffs, var)

    # -- rendering ----------------------------------------------------
    def __repr__(self):
        return f"Poly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Poly":
        return cls((Fraction(c) for c in obj["coeffs"]), obj.get("var", "t"))


def format_poly(p: Poly) -> str:
    """Render ascending, e.g. ``t+14t^2+21t^3+4t^4`` or ``-1-z``."""
    if p.is_zero():
        return "0"
    parts = []
    for j, c in enumerate(p.coeffs):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if j == 0:
            body = str(mag)
        else:
            mono = p.var if j == 1 else f"{p.var}^{j}"
            if mag == 1:
                body = mono
            elif isinstance(mag, Fraction):
                body = f"({mag}){mono}"
            else:
                body = f"{mag}{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_eval(p: Poly, x):
    return p(Fraction(x) if not isinstance(x, int) else x)


# ---------------------------------------------------------------------
# Summation and generating functions
# ---------------------------------------------------------------------

def binomial_poly(shift: int, j: int, var: str = "n") -> Poly:
    """The polynomial C(n + shift, j) in n."""
    out = Poly.const(Fraction(1, 1), var)
    for r in range(j):
        out = out * Poly((shift - r, 1), var)
    return out * Fraction(1, _factorial(j))


def _factorial(n: int) -> int:
    out = 1
    for m in range(2, n + 1):
        out *= m
    return out


def forward_differences(p: Poly) -> list:
    """Newton coefficients c_j with p(m) = sum_j c_j C(m, j)."""
    d = p.degree
    if d < 0:
        return []
    vals = [p(m) for m in range(d + 1)]
    out = []
    for _ in range(d + 1):
        out.append(vals[0])
        vals = [vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
    return out


def discrete_sum(p: Poly) -> Poly:
    """S(n) = sum_{m=1}^{n} p(m), as a polynomial in n with S(0) = 0.

    Works in the binomial basis, where sum_{m=0}^{n} C(m, j) = C(n+1, j+1).
    """
    var = p.var
    out = Poly((), var)
    for j, c in enumerate(forward_differences(p)):
        if c == 0:
            continue
        term = binomial_poly(1, j + 1, var)
        if j == 0:
            term = term - 1
        out = out + term * c
    return out


def gf_numerator(p: Poly, d: int) -> Poly:
    """Numerator A(t) of sum_{n>=0} p(n) t^n = A(t) / (1-t)^(d+1).

    Requires deg p <= d.  Raises NonIntegerCoefficient when the numerator
    is not integral.
    """
    if p.degree > d:
        raise ValueError(f"degree {p.degree} exceeds bound {d}")
    vals = [p(n) for n in range(d + 1)]
    coeffs = []
    for j in range(d + 1):
        a = sum((-1) ** l * comb(d + 1, l) * vals[j - l] for l in range(j + 1))
        a = _norm(Fraction(a))
        if not isinstance(a, int):
            raise NonIntegerCoefficient(f"coefficient of t^{j} is {a}")
        coeffs.append(a)
    return Poly(coeffs, "t")


def series_over_power(num: Poly, e: int, terms: int) -> list:
    """First ``terms`` coefficients of num(t) / (1-t)^e."""
    out = []
    for n in range(terms):
        # [t^m] (1-t)^-e = C(m+e-1, e-1)
        out.append(sum(num.coeff(j) * comb(n - j + e - 1, e - 1)
                       for j in range(min(n, num.degree) + 1)))
    return [_norm(Fraction(v)) for v in out]


def pochhammer(a, n: int):
    out = Fraction(1)
    for r in range(n):
        out *= a + r
    return _norm(out)


# ---------------------------------------------------------------------
# Integer polynomial GCD and Sturm sequences
# ---------------------------------------------------------------------

def _int_coeffs(p: Poly) -> list:
    if not p.is_integral():
        den = 1
        for c in p.coeffs:
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        p = p * den
    return [int(c) for c in p.coeffs]


def content(cs: Sequence[int]) -> int:
    g = 0
    for c in cs:
        g = gcd(g, c)
    return g


def primitive(cs: Sequence[int]) -> list:
    """Divide out the content, keeping the sign of each coefficient."""
    g = content(cs)
    if g in (0, 1):
        return list(cs)
    return [c // g for c in cs]


def _trim(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def signed_prem(a: Sequence[int], b: Sequence[int]) -> list:
    """Pseudo-remainder of a by b, scaled by a positive factor only.

    The result equals |lc(b)|^(deg a - deg b + 1) * rem(a, b), so its sign
    matches the true remainder, which Sturm chains need.
    """
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    scale = abs(lb)
    steps = len(a) - len(b) + 1
    if steps <= 0:
        return _trim(r)
    sgn = 1 if lb > 0 else -1
    for _ in range(steps):
        if len(r) - 1 < db:
            r = [c * scale for c in r]
            continue
        lr = r[-1]
        shift = len(r) - 1 - db
        # scale*r - sgn*lr * x^shift * b keeps a positive multiplier
        r = [c * scale for c in r]
        for j, c in enumerate(b):
            r[j + shift] -= sgn * lr * c
        r.pop()
        _trim(r)
    return r


def int_gcd(a: Sequence[int], b: Sequence[int]) -> list:
    """Primitive GCD of two integer polynomials, positive leading coefficient."""
    a, b = _trim(primitive(a)), _trim(primitive(b))
    while b:
        r = _trim(primitive(signed_prem(a, b)))
        a, b = b, r
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def int_divexact(a: Sequence[int], b: Sequence[int]) -> list:
    """Exact quotient a / b over Q, returned as a primitive integer polynomial."""
    q = _poly_divmod_q([Fraction(c) for c in a], [Fraction(c) for c in b])
    return _int_coeffs(Poly(q))


def _poly_divmod_q(a: list, b: list) -> list:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for j, c in enumerate(b):
            a[j + shift] -= f * c
        a.pop()
    if any(a):
        raise ArithmeticError("division is not exact")
    return q


def square_free_part(p: Poly) -> Poly:
    cs = _int_coeffs(p)
    if not cs:
        raise ZeroPolynomial("square-free part of zero")
    dp = [j * c for j, c in enumerate(cs)][1:]
    if not dp:
        return Poly(primitive(cs), p.var)
    g = int_gcd(cs, dp)
    return Poly(primitive(int_divexact(cs, g)), p.var)


def sturm_chain(p: Poly) -> list:
    """Sturm sequence of integer coefficient lists (content stripped)."""
    cs = _int_coeffs(p)
    if not cs:
        raise ZeroPolynomial("Sturm chain of zero")
    chain = [primitive(cs)]
    dp = [j * c for j, c in enumerate(cs)][1:]
    if not dp:
        return chain
    chain.append(primitive(dp))
    while True:
        r = signed_prem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(primitive([-c for c in r]))
    return chain


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _eval_list(cs: Sequence[int], x):
    acc = 0
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def sign_variations(signs: Iterable[int]) -> int:
    v, last = 0, 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


def _variations_at(chain, x) -> int:
    if x == float("inf"):
        return sign_variations(_sign(c[-1]) for c in chain)
    if x == float("-inf"):
        return sign_variations(_sign(c[-1]) * (-1) ** (len(c) - 1) for c in chain)
    return sign_variations(_sign(_eval_list(c, x)) for c in chain)


def real_root_count(p: Poly, lo, hi) -> int:
    """Number of distinct real roots of p in (lo, hi].

    ``lo`` and ``hi`` may be exact rationals or +-inf.
    """
    if p.is_zero():
        raise ZeroPolynomial("root count of zero")
    if not lo < hi:
        raise ValueError("need lo < hi")
    chain = sturm_chain(square_free_part(p))
    to_exact = lambda x: x if isinstance(x, float) and abs(x) == float("inf") else Fraction(x)
    return _variations_at(chain, to_exact(lo)) - _variations_at(chain, to_exact(hi))


def is_real_rooted(p: Poly) -> bool:
    """True iff every complex root of p is real (decided exactly)."""
    if p.is_zero():
        raise ZeroPolynomial("real-rootedness of zero")
    q = p.shift_down(p.valuation())
    sf = square_free_part(q)
    if sf.degree <= 0:
        return True
    inf = float("inf")
    return real_root_count(sf, -inf, inf) == sf.degree


def is_unimodal(seq: Sequence) -> bool:
    """Weakly increasing then weakly decreasing."""
    j, n = 0, len(seq)
    while j + 1 < n and seq[j] <= seq[j + 1]:
        j += 1
    while j + 1 < n and seq[j] >= seq[j + 1]:
        j += 1
    return j >= n - 1
