from collections import Counter

import pytest

from jacobistirling.diagonal import descent_table_rec
from jacobistirling.posets import (NotAnExtension, TooLarge, build_P_legendre, build_R,
                                   descent_count, descent_polynomial, linear_extensions,
                                   subsets)
from jacobistirling.permutations import (JACOBI, LEGENDRE, Letter, NotAStirlingWord,
                                         a_table_enum, b_table_enum, bar, brute_force_jsp,
                                         descents, enumerate_jsp, enumerate_stirling,
                                         format_word, has_bar_pattern, is_stirling,
                                         js_to_ls_transform, parse_word, phi, phi_inverse,
                                         psi, psi_inverse, restore_bars, slot_counts,
                                         slot_from_signature, slot_signature, strip_bars,
                                         unbar)

JSP_2_1 = """
2 2 2' 1 1 | 2' 2 2 1 1 | 2' 1 2 2 1 | 2' 1 1 2 2 | 2 2 1 2' 1 | 1 2 2 2' 1 | 1 2' 2 2 1
1 2' 1 2 2 | 2 2 1 1 2' | 1 2 2 1 2' | 1 1 2 2 2' | 1 1 2' 2 2 | 2 2 1 1 1' | 1 2 2 1 1'
1 1 2 2 1' | 1 1 1' 2 2 | 2 2 1' 1 1 | 1' 2 2 1 1 | 1' 1 2 2 1 | 1' 1 1 2 2
"""


def words(text):
    return {parse_word(x) for x in text.replace("\n", "|").split("|") if x.strip()}


def test_letters_and_parsing():
    assert Letter(3, True).code == bar(3) == 5
    assert Letter.from_code(6) == Letter(3, False)
    assert unbar(3) == 6
    w = parse_word("2' 1 2 2 3 3 3' 1 1'")
    assert format_word(w) == "2' 1 2 2 3 3 3' 1 1'"


def test_jsp_2_1_listing():
    got = [w for S in subsets(2, 1) for w in enumerate_jsp(2, S)]
    assert len(got) == 20 == len(set(got))
    assert set(got) == words(JSP_2_1)


def test_k1():
    assert [format_word(w) for w in enumerate_jsp(1)] == ["1 1 1'", "1' 1 1"]
    assert [format_word(w) for w in enumerate_jsp(1, {1})] == ["1 1"]


def test_first_words_k2():
    got = [format_word(w) for w in enumerate_jsp(2)][:5]
    assert got == ["2 2 2' 1 1 1'", "2' 2 2 1 1 1'", "2' 1 2 2 1 1'",
                   "2' 1 1 2 2 1'", "2' 1 1 1' 2 2"]


@pytest.mark.parametrize("k", range(1, 4))
def test_enumeration_matches_brute_force(k):
    for i in range(k + 1):
        for S in subsets(k, i):
            if 3 * k - i > 10:
                continue
            got = list(enumerate_jsp(k, S))
            assert len(got) == len(set(got))
            assert set(got) == brute_force_jsp(k, S)


def test_is_stirling():
    assert is_stirling(parse_word("1 2 2 1"))
    assert not is_stirling(parse_word("2 1 2 1"))
    assert not is_stirling(parse_word("1 1' 1"))     # 1' < 1 sits between the 1s


def test_descent_examples():
    w = parse_word("1 2 2 2' 1 1'")
    assert descents(w, LEGENDRE) == 1
    assert descents(w, JACOBI) == 3
    assert descents(parse_word("1 1 2 3' 2 3 3 1'")) == 2
    with pytest.raises(ValueError):
        descents(w, "other")


@pytest.mark.parametrize("k", range(1, 4))
def test_slot_properties(k):
    # descent slots number des + 1, and a block of a new top letter fits in any slot
    for S in subsets(k, 0) + subsets(k, 1):
        for w in enumerate_jsp(k, S):
            d, nd = slot_counts(w)
            assert d == descents(w) + 1
            assert d + nd == len(w) + 1
            for j in range(len(w) + 1):
                sig = slot_signature(w, j)
                assert slot_from_signature(w, *sig) == j
                top = unbar(k + 1)
                assert is_stirling(w[:j] + (top, top) + w[j:])


def test_generic_multiset_engine():
    got = list(enumerate_stirling({1: 3, 2: 1}))
    assert len(got) == len(set(got)) == 4
    assert all(is_stirling(w) for w in got)


def test_a_table_matches_recurrence():
    a = a_table_enum(4)
    rec = descent_table_rec(4)
    for k in range(5):
        for i in range(k + 1):
            top = 2 * k - i if k else 0
            for j in range(top + 1):
                assert a.get((k, i, j), 0) == rec[k, i].coeff(j)
    assert [a[2, 1, j] for j in (1, 2, 3)] == [2, 12, 6]


def test_b_table_and_transform():
    b = b_table_enum(3)
    assert [b[2, j] for j in (1, 2, 3)] == [4, 24, 12]
    assert sum(b[2, j] for j in (1, 2, 3)) == 40
    a = a_table_enum(3)
    for k in range(1, 4):
        transformed = js_to_ls_transform(a, k)
        assert transformed == {j: v for (kk, j), v in b.items() if kk == k}
        A = descent_polynomial(build_P_legendre(k))
        # P_k descents run one higher than Legendre descents
        assert {j: A.coeff(j + 1) for j in transformed} == transformed


def test_pattern_map():
    # words over every M_{3,S} avoiding "u then u-bar", counted by Jacobi descents
    k = 3
    counts, images = Counter(), set()
    for i in range(k + 1):
        for S in subsets(k, i):
            for w in enumerate_jsp(k, S):
                if has_bar_pattern(w):
                    continue
                counts[descents(w, JACOBI) + 1] += 1
                full = restore_bars(w, k)
                assert strip_bars(full) == w
                assert descents(full, LEGENDRE) == descents(w, JACOBI)
                images.add(full)
    b = b_table_enum(3)
    assert counts == Counter({j: v for (kk, j), v in b.items() if kk == k})
    assert images == set(enumerate_jsp(k))


def test_phi_example():
    ext = (2, 5, 1, 3, 7, 8, 6, 9)
    w = phi(ext)
    assert format_word(w) == "1 1 2 3' 2 3 3 1'"
    assert phi_inverse(w) == ext
    assert descents(w) == descent_count(ext) == 2


@pytest.mark.parametrize("k,S", [(1, ()), (2, ()), (2, {1}), (2, {2}), (3, ()), (3, {2}),
                                 (3, {1, 3})])
def test_phi_bijection(k, S):
    exts = list(linear_extensions(build_R(k, S)))
    image = [phi(e) for e in exts]
    assert set(image) == set(enumerate_jsp(k, S))
    for e, w in zip(exts, image):
        assert descents(w) == descent_count(e)
        assert phi_inverse(w) == e


def test_psi_example():
    assert psi(parse_word("1 1 1'")) == (1, 3, 2)
    assert psi(parse_word("1' 1 1")) == (3, 1, 2)
    w = parse_word("2' 1 2 2 3 3 3' 1 1'")
    ext = psi(w)
    assert ext == (6, 1, 4, 7, 9, 3, 2, 5, 8)
    assert psi_inverse(ext) == w
    assert descent_count(ext) == descents(w, LEGENDRE) + 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_psi_bijection(k):
    words_k = list(enumerate_jsp(k))
    image = [psi(w) for w in words_k]
    assert set(image) == set(linear_extensions(build_P_legendre(k)))
    for w, e in zip(words_k, image):
        assert descent_count(e) == descents(w, LEGENDRE) + 1
        assert psi_inverse(e) == w


def test_errors():
    with pytest.raises(NotAnExtension):
        phi((1, 3, 2))
    with pytest.raises(NotAStirlingWord):
        phi_inverse(parse_word("2 1 2 1"))
    with pytest.raises(NotAStirlingWord):
        psi(parse_word("1 1"))
    with pytest.raises(NotAnExtension):
        psi_inverse((2, 1, 3))
    with pytest.raises(TooLarge):
        enumerate_jsp(7)
    with pytest.raises(TooLarge):
        a_table_enum(6)
    with pytest.raises(ValueError):
        list(enumerate_jsp(2, {3}))
