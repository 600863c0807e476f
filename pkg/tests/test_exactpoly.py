from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobistirling.exactpoly import (NonIntegerCoefficient, Poly, ZeroPolynomial,
                                      discrete_sum, format_poly, gf_numerator,
                                      is_real_rooted, is_unimodal, pochhammer,
                                      poly_eval, poly_mul, real_root_count,
                                      series_over_power, square_free_part)

t = Poly((0, 1))
n = Poly((0, 1), "n")
INF = float("inf")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
rat_polys = st.lists(rationals, min_size=0, max_size=7).map(lambda cs: Poly(cs, "n"))


def test_canonical_form():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]).is_zero()
    assert Poly([Fraction(4, 2)]).coeffs == (2,)
    assert isinstance(Poly([Fraction(4, 2)]).coeffs[0], int)


def test_poly_mul_examples():
    assert poly_mul(1 + t, 1 - t) == 1 - t * t
    assert poly_mul(Poly(()), t + t ** 2).is_zero()
    assert poly_mul(t + t ** 2, (1 - t) ** 0) == t + t ** 2


@given(rat_polys, rat_polys)
def test_mul_degree(a, b):
    prod = a * b
    if a.is_zero() or b.is_zero():
        assert prod.is_zero()
    else:
        assert prod.degree == a.degree + b.degree


def test_poly_eval_examples():
    tri = n * (n + 1) * Fraction(1, 2)
    assert poly_eval(tri, 3) == 6
    assert poly_eval(Poly((), "n"), Fraction(7, 3)) == 0
    sq = n * (n + 1) * (2 * n + 1) * Fraction(1, 6)
    assert poly_eval(sq, -1) == 0


def test_discrete_sum_examples():
    assert discrete_sum(n * n) == n * (n + 1) * (2 * n + 1) * Fraction(1, 6)
    assert discrete_sum(Poly.const(1, "n")) == n
    assert discrete_sum(n * (n + 1) * Fraction(1, 2)) == n * (n + 1) * (n + 2) * Fraction(1, 6)


@given(rat_polys)
@settings(max_examples=60)
def test_discrete_sum_differences(p):
    s = discrete_sum(p)
    assert s(0) == 0
    for m in range(1, 51):
        assert s(m) - s(m - 1) == p(m)
    if not p.is_zero():
        assert s.degree == p.degree + 1


def test_gf_numerator_examples():
    assert gf_numerator(n * (n + 1) * (2 * n + 1) * Fraction(1, 6), 3) == t + t ** 2
    assert gf_numerator(n * (n + 1) * Fraction(1, 2), 2) == t
    p = n * (n + 1) * (n + 2) * (12 * n * n + 9 * n - 1) * Fraction(1, 120)
    A = gf_numerator(p, 5)
    # 12 = number of linear extensions of R_{2,{1}}, counted in test_posets
    assert A(1) == 12


def test_gf_numerator_rejects_non_integral():
    with pytest.raises(NonIntegerCoefficient):
        gf_numerator(n * Fraction(1, 2), 1)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6), st.integers(0, 3))
def test_gf_numerator_round_trip(values, extra):
    # integer-valued polynomial through the given points
    p = Poly((), "n")
    for j, v in enumerate(values):
        basis = Poly.const(1, "n")
        for r in range(j):
            basis = basis * Poly((-r, 1), "n") * Fraction(1, r + 1)
        p = p + basis * (v - p(j))
    d = p.degree + extra if not p.is_zero() else extra
    A = gf_numerator(p, d)
    assert series_over_power(A, d + 1, d + 6) == [p(m) for m in range(d + 6)]


def test_real_root_count_examples():
    assert real_root_count(t + t ** 2, -10, 10) == 2
    assert real_root_count(t ** 2 + 1, -10, 10) == 0
    p = t + 14 * t ** 2 + 21 * t ** 3 + 4 * t ** 4
    assert real_root_count(p, -INF, INF) == 4
    assert is_real_rooted(p)


def test_real_root_count_half_open():
    p = Poly.from_roots([0, 1, 2])
    assert real_root_count(p, 0, 2) == 2          # (0, 2] holds 1 and 2
    assert real_root_count(p, -1, 0) == 1
    assert real_root_count(p, Fraction(1, 2), Fraction(3, 2)) == 1


def test_zero_polynomial_errors():
    with pytest.raises(ZeroPolynomial):
        real_root_count(Poly(()), 0, 1)
    with pytest.raises(ZeroPolynomial):
        is_real_rooted(Poly(()))


def test_is_real_rooted_examples():
    assert is_real_rooted(t + t ** 2)
    assert not is_real_rooted(1 + t + t ** 2)
    assert is_real_rooted(2 * t + 12 * t ** 2 + 6 * t ** 3)
    assert is_real_rooted(Poly.const(5))


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6),
       st.lists(st.integers(1, 5), max_size=2),
       st.integers(1, 7))
@settings(max_examples=80)
def test_root_counting_against_constructed_roots(roots, quad_shifts, scale):
    # integer roots (with repeats) times x^2 + c, c > 0, which has no real roots
    p = Poly.from_roots(roots)
    for c in quad_shifts:
        p = p * (t * t + c)
    assert real_root_count(p, -INF, INF) == len(set(roots))
    assert real_root_count(p * scale, -INF, INF) == len(set(roots))
    assert real_root_count(p, -3, 3) == len({r for r in roots if -3 < r <= 3})
    assert is_real_rooted(p) == (not quad_shifts)


@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), min_size=1, max_size=5))
def test_square_free_part_has_distinct_roots(roots):
    p = Poly.from_roots(roots + roots[:2])
    sf = square_free_part(p)
    assert sf.degree == len(set(roots))


def test_pochhammer_identity():
    a = Fraction(2, 3)
    for k in range(1, 21):
        lhs = sum(pochhammer(a, s) / _fact(s) for s in range(k))
        assert lhs == pochhammer(a + 1, k - 1) / _fact(k - 1)


def _fact(m):
    out = 1
    for r in range(2, m + 1):
        out *= r
    return Fraction(out)


def test_unimodal():
    assert is_unimodal([1, 14, 21, 4])
    assert is_unimodal([3, 3, 3])
    assert not is_unimodal([1, 3, 2, 4])


def test_format_and_json():
    assert format_poly(t + 14 * t ** 2) == "t+14t^2"
    z = Poly((-1, -1), "z")
    assert format_poly(z) == "-1-z"
    p = Poly((0, 1, 1))
    assert p.to_json() == {"var": "t", "coeffs": ["0", "1", "1"]}
    assert Poly.from_json(p.to_json()) == p
    big = Poly((10 ** 40, Fraction(1, 3)), "n")
    assert Poly.from_json(big.to_json()) == big
