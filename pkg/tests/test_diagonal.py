from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from jacobistirling.diagonal import (descent_table_gf, descent_table_rec, diagonal_first,
                                     diagonal_second, first_kind_gf_check,
                                     leading_coefficient)
from jacobistirling.exactpoly import Poly, is_real_rooted

t = Poly((0, 1))

TABLE = {
    (0, 0): (1,),
    (1, 0): (0, 1, 1),
    (1, 1): (0, 1),
    (2, 0): (0, 1, 14, 21, 4),
    (2, 1): (0, 2, 12, 6),
    (2, 2): (0, 1, 2),
    (3, 0): (0, 1, 75, 603, 1065, 460, 36),
    (3, 1): (0, 3, 114, 501, 436, 66),
    (3, 2): (0, 3, 55, 116, 36),
    (3, 3): (0, 1, 8, 6),
}


def diagonal_brute(n, k, zval):
    """JS(n+k, n; z) as a sum over weakly increasing k-tuples from [n] of prod j(j+z)."""
    total = 0
    for tup in combinations_with_replacement(range(1, n + 1), k):
        prod = 1
        for j in tup:
            prod *= j * (j + zval)
        total += prod
    return total


@pytest.mark.parametrize("k", range(6))
def test_diagonal_against_monotone_tuples(k):
    f = diagonal_second(k)
    for n in range(1, 6):
        for zval in (0, 1, 3, -2):
            assert f.value(n, zval) == diagonal_brute(n, k, zval)


def test_small_examples():
    n = Poly((0, 1), "n")
    f1 = diagonal_second(1)
    assert f1[0] == n * (n + 1) * (2 * n + 1) * Fraction(1, 6)
    assert f1[1] == n * (n + 1) * Fraction(1, 2)
    assert diagonal_second(0)[0] == Poly.const(1, "n")


@pytest.mark.parametrize("k", range(7))
def test_structure(k):
    f = diagonal_second(k)
    for i, p in enumerate(f.coeffs_by_i):
        assert p.degree == 3 * k - i
        assert p.leading == leading_coefficient(k, i)
        if k:
            for r in range(k + 1):
                assert p(-r) == 0


def test_table_values():
    gf, rec = descent_table_gf(3), descent_table_rec(3)
    for key, coeffs in TABLE.items():
        assert gf[key].coeffs == coeffs
        assert rec[key].coeffs == coeffs


def test_gf_matches_rec_and_invariants():
    gf, rec = descent_table_gf(8), descent_table_rec(8)
    assert gf.same_values(rec)
    for (k, i), A in rec.A.items():
        assert all(c >= 0 for c in A.coeffs)
        if k:
            assert A.coeff(0) == 0
            assert A.degree == 2 * k - i
        assert is_real_rooted(A)


@pytest.mark.parametrize("k", range(6))
def test_first_kind_reversal(k):
    for i in range(k + 1):
        assert first_kind_gf_check(k, i)


def test_first_kind_values():
    n = Poly((0, 1), "n")
    q = diagonal_first(1)
    assert q[1] == -(n * (n - 1)) * Fraction(1, 2)
    # js(2,1;z) = -1-z and js(3,2;z) = -5-3z
    assert (q[0](2), q[1](2)) == (-1, -1)
    assert (q[0](3), q[1](3)) == (-5, -3)


def test_first_kind_guard():
    with pytest.raises(ValueError):
        first_kind_gf_check(2, 3)
