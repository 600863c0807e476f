"""Jacobi-Stirling and Legendre-Stirling permutations and their bijections.

Words are tuples of integer letter codes: value v unbarred is ``2v`` and
barred (v̄) is ``2v - 1``.  Integer order on codes is then exactly the
Jacobi order 1̄ < 1 < 2̄ < 2 < ...; the Legendre order compares
``(code + 1) // 2``, i.e. the value alone.

A slot of a word w_1..w_m is a gap j in 0..m, between w_j and w_{j+1},
with sentinels w_0 = w_{m+1} = 0.  It is a descent slot when
w_j > w_{j+1}, so the final slot is always a descent slot.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations as _all_orders
from math import comb
from typing import Dict, Iterable, Iterator, NamedTuple, Sequence, Tuple

from .posets import (NotAnExtension, TooLarge, build_P_legendre, build_R,
                     descent_count)

Word = Tuple[int, ...]

JACOBI = "jacobi"
LEGENDRE = "legendre"


class NotAStirlingWord(ValueError):
    pass


class Letter(NamedTuple):
    value: int
    barred: bool = False

    @property
    def code(self) -> int:
        return 2 * self.value - self.barred

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls((code + 1) // 2, code % 2 == 1)

    def __str__(self):
        return f"{self.value}'" if self.barred else str(self.value)


def bar(v: int) -> int:
    return 2 * v - 1


def unbar(v: int) -> int:
    return 2 * v


def format_word(w: Sequence[int]) -> str:
    """Space separated, barred letters with a trailing apostrophe."""
    return " ".join(str(Letter.from_code(c)) for c in w)


def parse_word(text: str) -> Word:
    out = []
    for tok in text.split():
        if tok.endswith("'"):
            out.append(bar(int(tok[:-1])))
        else:
            out.append(unbar(int(tok)))
    return tuple(out)


def _key(order: str):
    if order == JACOBI:
        return lambda c: c
    if order == LEGENDRE:
        return lambda c: (c + 1) >> 1
    raise ValueError(f"unknown order {order!r}")


def descents(w: Sequence[int], order: str = JACOBI) -> int:
    if order == JACOBI:
        return descent_count(w)
    key = _key(order)
    return sum(1 for a, b in zip(w, w[1:]) if key(a) > key(b))


def is_stirling(w: Sequence[int]) -> bool:
    """Every letter strictly between two equal letters is larger (Jacobi order)."""
    last = {}
    for j, c in enumerate(w):
        if c in last and any(x <= c for x in w[last[c] + 1:j]):
            return False
        last[c] = j
    return True


# ---------------------------------------------------------------------
# Slots
# ---------------------------------------------------------------------

def slot_is_descent(w: Sequence, j: int) -> bool:
    left = w[j - 1] if j > 0 else 0
    right = w[j] if j < len(w) else 0
    return left > right


def _slot_flags(w: Sequence) -> list:
    padded = [0, *w, 0]
    return [a > b for a, b in zip(padded, padded[1:])]


def slot_signature(w: Sequence, j: int) -> Tuple[bool, int]:
    """(is_descent, ordinal among slots of that kind), ordinals from 0."""
    flags = _slot_flags(w)
    kind = flags[j]
    return kind, flags[:j].count(kind)


def slot_from_signature(w: Sequence, kind: bool, ordinal: int) -> int:
    seen = -1
    for s, f in enumerate(_slot_flags(w)):
        if f == kind:
            seen += 1
            if seen == ordinal:
                return s
    raise ValueError("no such slot")


def slot_counts(w: Sequence) -> Tuple[int, int]:
    """(descent slots, non-descent slots) under the sentinel convention."""
    d = sum(1 for s in range(len(w) + 1) if slot_is_descent(w, s))
    return d, len(w) + 1 - d


def _insert(w: Sequence, j: int, letters: Sequence) -> tuple:
    return tuple(w[:j]) + tuple(letters) + tuple(w[j:])


# ---------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------

def jsp_multiset(k: int, S: Iterable[int] = ()) -> Dict[int, int]:
    """Letter multiplicities of M_{k,S}; S lists the values whose bar is removed."""
    S = set(S)
    if not S <= set(range(1, k + 1)):
        raise ValueError(f"{sorted(S)} is not a set of barred values of M_{k}")
    mult = {}
    for v in range(1, k + 1):
        if v not in S:
            mult[bar(v)] = 1
        mult[unbar(v)] = 2
    return mult


def enumerate_stirling(multiplicities: Dict[int, int]) -> Iterator[Word]:
    """All words over the multiset in which equal letters enclose only larger ones.

    Letters are inserted in increasing order, each as a contiguous block of
    all its copies, trying slots left to right.
    """
    letters = sorted(multiplicities)

    def grow(w: Word, idx: int):
        if idx == len(letters):
            yield w
            return
        block = (letters[idx],) * multiplicities[letters[idx]]
        for j in range(len(w) + 1):
            yield from grow(_insert(w, j, block), idx + 1)

    return grow((), 0)


def enumerate_jsp(k: int, S: Iterable[int] = ()) -> Iterator[Word]:
    if k > 6:
        raise TooLarge("k > 6 is outside the enumeration guard")
    return enumerate_stirling(jsp_multiset(k, S))


def brute_force_jsp(k: int, S: Iterable[int] = ()) -> set:
    """Oracle: all distinct orderings of M_{k,S} with the Stirling property."""
    mult = jsp_multiset(k, S)
    letters = [c for c, m in sorted(mult.items()) for _ in range(m)]
    if len(letters) > 10:
        raise TooLarge("brute-force oracle limited to 10 letters")
    return {w for w in set(_all_orders(letters)) if is_stirling(w)}


def _subsets(k: int, i: int):
    return [frozenset(c) for c in combinations(range(1, k + 1), i)]


def a_table_enum(k_max: int) -> Dict[Tuple[int, int, int], int]:
    """(k, i, j) -> number of words in JSP_{k,i} with j - 1 Jacobi descents."""
    if k_max > 5:
        raise TooLarge("k_max > 5 is outside the enumeration guard")
    table = {(0, 0, 0): 1}
    for k in range(1, k_max + 1):
        for i in range(k + 1):
            hist = Counter()
            for S in _subsets(k, i):
                hist.update(descent_count(w) + 1 for w in enumerate_jsp(k, S))
            for j, n in hist.items():
                table[k, i, j] = n
    return table


def b_table_enum(k_max: int) -> Dict[Tuple[int, int], int]:
    """(k, j) -> number of Legendre-Stirling permutations with j - 1 descents."""
    if k_max > 4:
        raise TooLarge("k_max > 4 is outside the enumeration guard")
    table = {(0, 0): 1}
    for k in range(1, k_max + 1):
        hist = Counter(descents(w, LEGENDRE) + 1 for w in enumerate_jsp(k))
        for j, n in hist.items():
            table[k, j] = n
    return table


def js_to_ls_transform(a: Dict[Tuple[int, int, int], int], k: int) -> Dict[int, int]:
    """b_{k,j} = sum_i sum_l (-1)^l C(i, l) a_{k,i,j-l}, zero entries dropped."""
    if k == 0:
        return {0: a.get((0, 0, 0), 0)}
    out = {}
    for j in range(0, 2 * k + 2):
        total = 0
        for i in range(k + 1):
            for l in range(i + 1):
                total += (-1) ** l * comb(i, l) * a.get((k, i, j - l), 0)
        if total:
            out[j] = total
    return out


# ---------------------------------------------------------------------
# Legendre-Stirling words via the u ū pattern map
# ---------------------------------------------------------------------

def has_bar_pattern(w: Sequence[int]) -> bool:
    """True when some u is immediately followed by ū."""
    return any(a % 2 == 0 and b == a - 1 for a, b in zip(w, w[1:]))


def restore_bars(w: Sequence[int], k: int) -> Word:
    """Insert each missing ū right after the second copy of u."""
    present = set(w)
    out, seen = [], Counter()
    for c in w:
        out.append(c)
        seen[c] += 1
        if c % 2 == 0 and seen[c] == 2 and c - 1 not in present:
            out.append(c - 1)
    return tuple(out)


def strip_bars(w: Sequence[int]) -> Word:
    """Delete every ū that directly follows a u."""
    out = []
    for c in w:
        if c % 2 == 1 and out and out[-1] == c + 1:
            continue
        out.append(c)
    return tuple(out)


# ---------------------------------------------------------------------
# phi: linear extensions of R_{k,S} -> JSP_{k,S}
# ---------------------------------------------------------------------

def _r_shape(labels: Iterable[int]) -> Tuple[int, frozenset]:
    labels = set(labels)
    top = max(labels, default=0)
    if top % 3:
        raise NotAnExtension("largest label must be 3k")
    k = top // 3
    S = frozenset(m for m in range(1, k + 1) if 3 * m - 2 not in labels)
    return k, S


def phi(ext: Sequence[int]) -> Word:
    """Descent-preserving bijection from L(R_{k,S}) onto JSP_{k,S}."""
    ext = tuple(ext)
    k, S = _r_shape(ext)
    if k == 0 or not build_R(k, S).is_extension(ext):
        raise NotAnExtension(f"{ext} is not a linear extension of R_{k},{sorted(S)}")
    return _phi_rec(ext, k, S)


def _phi_rec(ext: tuple, k: int, S: frozenset) -> Word:
    if k == 0:
        return ()
    prev = tuple(x for x in ext if x <= 3 * k - 3)
    word = _phi_cached(prev, k - 1, S - {k})
    base = prev
    if k not in S:
        with_a = [x for x in ext if x <= 3 * k - 2]
        sig = slot_signature(base, with_a.index(3 * k - 2))
        word = _insert(word, slot_from_signature(word, *sig), (2 * k - 1,))
        base = with_a
    with_b = [x for x in ext if x < 3 * k]
    sig = slot_signature(base, with_b.index(3 * k - 1))
    return _insert(word, slot_from_signature(word, *sig), (2 * k, 2 * k))


_phi_cached = lru_cache(maxsize=1 << 16)(_phi_rec)


def _check_stirling(w: Sequence[int]) -> Tuple[int, frozenset]:
    counts = Counter(w)
    k = max(((c + 1) >> 1 for c in w), default=0)
    S = frozenset(v for v in range(1, k + 1) if counts[bar(v)] == 0)
    if counts != Counter(jsp_multiset(k, S)) or not is_stirling(w):
        raise NotAStirlingWord(f"{format_word(w)} is not a Jacobi-Stirling permutation")
    return k, S


def phi_inverse(w: Sequence[int]) -> Tuple[int, ...]:
    w = tuple(w)
    k, S = _check_stirling(w)
    if k == 0:
        raise NotAStirlingWord("empty word")
    return _phi_inv_rec(w, k)


def _phi_inv_rec(w: Word, k: int) -> Tuple[int, ...]:
    if k == 0:
        return ()
    kbar, kk = 2 * k - 1, 2 * k
    base = tuple(c for c in w if c < kbar)
    ext = _phi_inv_cached(base, k - 1)
    if kbar in w:
        with_bar = [c for c in w if c <= kbar]
        sig = slot_signature(base, with_bar.index(kbar))
        ext = _insert(ext, slot_from_signature(ext, *sig), (3 * k - 2,))
        base = with_bar
    sig = slot_signature(base, w.index(kk))
    ext = _insert(ext, slot_from_signature(ext, *sig), (3 * k - 1,))
    return ext + (3 * k,)


_phi_inv_cached = lru_cache(maxsize=1 << 16)(_phi_inv_rec)


# ---------------------------------------------------------------------
# psi: Legendre-Stirling permutations of M_k -> L(P_k)
# ---------------------------------------------------------------------

def _leg_descent_slot(w: Sequence[int], j: int) -> bool:
    left = (w[j - 1] + 1) >> 1 if j > 0 else 0
    right = (w[j] + 1) >> 1 if j < len(w) else 0
    return left > right


def _word_slot_classes(w: Sequence[int], m: int):
    """Slots of a word containing m̄ (but not mm), split by the effect of inserting mm.

    Returns (descent slots, the slot just before m̄, other non-descent slots),
    each list left to right.  Inserting mm into the first two classes keeps
    the Legendre descent count; the third adds one.
    """
    special = list(w).index(bar(m))
    desc, other = [], []
    for s in range(len(w) + 1):
        if _leg_descent_slot(w, s):
            desc.append(s)
        elif s != special:
            other.append(s)
    return desc, special, other


def _ext_slot_classes(e: Sequence[int], m: int):
    """Slots of ψ_2 = (..3m..3m-1) matching the classes of _word_slot_classes.

    The slot after 3m-1 is forbidden.  Inserting 3m-2 right after 3m adds a
    descent unless 3m-1 follows, while the slot just before 3m-1 adds none,
    so when the two differ they trade places (keeping list positions).
    """
    top, hi = 3 * m - 1, 3 * m
    n = len(e)
    before_hi = list(e).index(hi)
    after_hi = before_hi + 1
    before_top = n - 1
    desc, other = [], []
    for s in range(n):
        if slot_is_descent(e, s):
            desc.append(s)
        elif s != before_hi:
            other.append(s)
    if after_hi != before_top:
        desc[desc.index(after_hi)] = before_top
        other[other.index(before_top)] = after_hi
    return desc, before_hi, other


def _leg_signature(w, j):
    kind = _leg_descent_slot(w, j)
    return kind, sum(1 for s in range(j) if _leg_descent_slot(w, s) == kind)


def _leg_from_signature(w, kind, ordinal):
    seen = 0
    for s in range(len(w) + 1):
        if _leg_descent_slot(w, s) == kind:
            if seen == ordinal:
                return s
            seen += 1
    raise ValueError("no such slot")


def _ext_signature(e, j):
    # slots 0..len(e)-1 only: the slot after the final 3m-1 is excluded
    kind = slot_is_descent(e, j)
    return kind, sum(1 for s in range(j) if slot_is_descent(e, s) == kind)


def _ext_from_signature(e, kind, ordinal):
    seen = 0
    for s in range(len(e)):
        if slot_is_descent(e, s) == kind:
            if seen == ordinal:
                return s
            seen += 1
    raise ValueError("no such slot")


def _classify(j, classes):
    desc, special, other = classes
    if j == special:
        return ("special", 0)
    if j in desc:
        return ("desc", desc.index(j))
    return ("other", other.index(j))


def _pick(tag, classes):
    desc, special, other = classes
    kind, ordinal = tag
    if kind == "special":
        return special
    return (desc if kind == "desc" else other)[ordinal]


def _check_legendre(w: Sequence[int]) -> int:
    k, S = _check_stirling(w)
    if S or k == 0:
        raise NotAStirlingWord("a Legendre-Stirling permutation uses the full M_k")
    return k


def psi(w: Sequence[int]) -> Tuple[int, ...]:
    """Bijection LSP_k -> L(P_k) with des psi(w) = des_legendre(w) + 1."""
    w = tuple(w)
    k = _check_legendre(w)
    ext: Tuple[int, ...] = ()
    for m in range(1, k + 1):
        base = [c for c in w if c < bar(m)]
        with_bar = [c for c in w if c <= bar(m)]
        full = [c for c in w if c <= unbar(m)]
        e1 = ext + (3 * m - 1,)
        sig = _leg_signature(base, with_bar.index(bar(m)))
        e2 = _insert(e1, _ext_from_signature(e1, *sig), (3 * m,))
        tag = _classify(full.index(unbar(m)), _word_slot_classes(with_bar, m))
        ext = _insert(e2, _pick(tag, _ext_slot_classes(e2, m)), (3 * m - 2,))
    return ext


def psi_inverse(ext: Sequence[int]) -> Word:
    ext = tuple(ext)
    if not ext or len(ext) % 3 or not build_P_legendre(len(ext) // 3).is_extension(ext):
        raise NotAnExtension(f"{ext} is not a linear extension of a Legendre-Stirling poset")
    k = len(ext) // 3
    w: Word = ()
    for m in range(1, k + 1):
        em = [x for x in ext if x <= 3 * m]
        e2 = [x for x in em if x != 3 * m - 2]
        e1 = [x for x in e2 if x != 3 * m]
        sig = _ext_signature(e1, e2.index(3 * m))
        base = w
        with_bar = _insert(base, _leg_from_signature(base, *sig), (bar(m),))
        tag = _classify(em.index(3 * m - 2), _ext_slot_classes(e2, m))
        w = _insert(with_bar, _pick(tag, _word_slot_classes(with_bar, m)),
                    (unbar(m), unbar(m)))
    return w
