"""Labeled posets, linear extensions and order polynomials.

Elements are identified with their labels (distinct positive integers) and
the order is given by cover pairs ``(lower, upper)``.  Descents of a linear
extension are always taken in the natural order of the labels.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from math import factorial
from typing import FrozenSet, Iterable, Iterator, Tuple

from .exactpoly import Poly

MAX_EXTENSION_SIZE = 18
MAX_BRUTE_SIZE = 10
MAX_BRUTE_N = 8


class TooLarge(ValueError):
    pass


class InvalidSubset(ValueError):
    pass


class NotAnExtension(ValueError):
    pass


@dataclass(frozen=True)
class LabeledPoset:
    labels: FrozenSet[int]
    covers: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        if any(l <= 0 for l in self.labels):
            raise ValueError("labels must be positive integers")
        for a, b in self.covers:
            if a not in self.labels or b not in self.labels or a == b:
                raise ValueError(f"bad cover pair {(a, b)}")
        if len(self.topological_order) != len(self.labels):
            raise ValueError("cover relation has a cycle")

    @classmethod
    def from_pairs(cls, labels: Iterable[int], covers: Iterable[Tuple[int, int]]) -> "LabeledPoset":
        return cls(frozenset(labels), frozenset(covers))

    def __len__(self):
        return len(self.labels)

    @cached_property
    def _down(self):
        below = {x: set() for x in self.labels}
        for a, b in self.covers:
            below[b].add(a)
        return below

    @cached_property
    def topological_order(self) -> Tuple[int, ...]:
        indeg = Counter(b for _, b in self.covers)
        above = {x: [] for x in self.labels}
        for a, b in self.covers:
            above[a].append(b)
        ready = sorted(x for x in self.labels if indeg[x] == 0)
        out = []
        while ready:
            x = ready.pop()
            out.append(x)
            for y in above[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    ready.append(y)
        return tuple(out)

    @cached_property
    def strictly_below(self) -> dict:
        """Transitive closure: label -> set of labels strictly below it."""
        out = {}
        for x in self.topological_order:
            s = set()
            for a in self._down[x]:
                s.add(a)
                s |= out[a]
            out[x] = frozenset(s)
        return out

    def less(self, a: int, b: int) -> bool:
        return a in self.strictly_below[b]

    def restrict(self, keep: Iterable[int]) -> "LabeledPoset":
        """Induced subposet on ``keep`` (covers recomputed from the closure)."""
        keep = frozenset(keep)
        rel = {(a, b) for b in keep for a in self.strictly_below[b] if a in keep}
        covers = {(a, b) for a, b in rel
                  if not any((a, c) in rel and (c, b) in rel for c in keep)}
        return LabeledPoset(keep, frozenset(covers))

    def is_extension(self, word: Tuple[int, ...]) -> bool:
        if sorted(word) != sorted(self.labels):
            return False
        pos = {x: j for j, x in enumerate(word)}
        return all(pos[a] < pos[b] for a, b in self.covers)


def descent_count(word) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def linear_extensions(P: LabeledPoset) -> Iterator[Tuple[int, ...]]:
    """Yield every linear extension once, in lexicographic order."""
    if len(P) > MAX_EXTENSION_SIZE:
        raise TooLarge(f"{len(P)} elements exceeds the guard of {MAX_EXTENSION_SIZE}")
    labels = sorted(P.labels)
    index = {x: j for j, x in enumerate(labels)}
    n = len(labels)
    above = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in P.covers:
        above[index[a]].append(index[b])
        indeg[index[b]] += 1
    word = []

    def extend():
        if len(word) == n:
            yield tuple(labels[j] for j in word)
            return
        for j in range(n):
            if indeg[j] == 0:
                indeg[j] = -1
                for b in above[j]:
                    indeg[b] -= 1
                word.append(j)
                yield from extend()
                word.pop()
                for b in above[j]:
                    indeg[b] += 1
                indeg[j] = 0

    return extend()


def descent_polynomial(P: LabeledPoset) -> Poly:
    """Sum over linear extensions of t^(des + 1)."""
    hist = Counter(descent_count(w) for w in linear_extensions(P))
    top = max(hist, default=-1)
    return Poly([0] + [hist.get(d, 0) for d in range(top + 1)], "t")


def order_polynomial_value(P: LabeledPoset, n: int) -> int:
    """Count (P, omega)-partitions with parts in [n] by direct enumeration."""
    if len(P) > MAX_BRUTE_SIZE or n > MAX_BRUTE_N:
        raise TooLarge("brute-force order polynomial outside its guard")
    if n <= 0:
        return 0 if len(P) else 1
    order = P.topological_order
    down = {b: [] for b in P.labels}
    for a, b in P.covers:
        down[b].append(a)
    f = {}

    def count(pos: int) -> int:
        if pos == len(order):
            return 1
        x = order[pos]
        lo = max((f[a] + (a > x) for a in down[x]), default=1)
        total = 0
        for v in range(lo, n + 1):
            f[x] = v
            total += count(pos + 1)
        return total

    return count(0)


def order_polynomial_values(P: LabeledPoset, n_max: int) -> list:
    """[Omega_P(0), ..., Omega_P(n_max)] by peeling off the top value.

    The elements sent to the largest part n form an up-set of the
    remaining down-set that contains no cover (a, b) with a > b.
    Independent of linear extensions; used for longer series checks.
    """
    if len(P) > 16:
        raise TooLarge("order polynomial DP outside its guard")
    labels = sorted(P.labels)
    idx = {x: j for j, x in enumerate(labels)}
    full = (1 << len(labels)) - 1
    covers = [(idx[a], idx[b], a > b) for a, b in P.covers]

    def admissible_tops(rest):
        # nonempty subsets U of rest, closed upward within rest, with no strict cover inside
        sub = rest
        while sub:
            ok = True
            for a, b, strict in covers:
                ina, inb = (sub >> a) & 1, (sub >> b) & 1
                if ina and not inb and (rest >> b) & 1:
                    ok = False
                    break
                if ina and inb and strict:
                    ok = False
                    break
            if ok:
                yield sub
            sub = (sub - 1) & rest

    @lru_cache(maxsize=None)
    def omega(rest: int, n: int) -> int:
        if rest == 0:
            return 1
        if n == 0:
            return 0
        total = omega(rest, n - 1)
        for top in admissible_tops(rest):
            total += omega(rest & ~top, n - 1)
        return total

    return [omega(full, n) for n in range(n_max + 1)]


# ---------------------------------------------------------------------
# The Jacobi-Stirling and Legendre-Stirling posets
# ---------------------------------------------------------------------

def build_R(k: int, S: Iterable[int] = ()) -> LabeledPoset:
    """Spine 3 < 6 < ... < 3k; each 3m covers 3m-2 (unless m in S) and 3m-1."""
    return _build_R(k, frozenset(S))


@lru_cache(maxsize=None)
def _build_R(k: int, S: frozenset) -> LabeledPoset:
    if k < 1:
        raise ValueError("k must be at least 1")
    if not S <= set(range(1, k + 1)):
        raise InvalidSubset(f"{sorted(S)} is not a subset of [1..{k}]")
    labels, covers = set(), set()
    for m in range(1, k + 1):
        top = 3 * m
        labels |= {top, top - 1}
        covers.add((top - 1, top))
        if m not in S:
            labels.add(top - 2)
            covers.add((top - 2, top))
        if m > 1:
            covers.add((top - 3, top))
    return LabeledPoset(frozenset(labels), frozenset(covers))


@lru_cache(maxsize=None)
def build_P_legendre(k: int) -> LabeledPoset:
    """Spine 2 < 5 < ... < 3k-1; each 3m-1 covers 3m-2 and 3m."""
    if k < 1:
        raise ValueError("k must be at least 1")
    labels, covers = set(range(1, 3 * k + 1)), set()
    for m in range(1, k + 1):
        top = 3 * m - 1
        covers |= {(top - 1, top), (top + 1, top)}
        if m > 1:
            covers.add((top - 3, top))
    return LabeledPoset(frozenset(labels), frozenset(covers))


def A_S_at_one(k: int, S: Iterable[int]) -> int:
    S = sorted(set(S))
    i = len(S)
    denom = 1
    for j in range(1, k + 1):
        denom *= 3 * j - sum(1 for s in S if s <= j)
    value = Fraction(factorial(3 * k - i), denom)
    assert value.denominator == 1
    return value.numerator


def count_linext_level(k: int, i: int) -> int:
    """|L(R_{k,i})| in closed form."""
    if not 0 <= i <= k:
        raise ValueError("need 0 <= i <= k")
    value = Fraction(factorial(3 * k - i),
                     3 ** (k - i) * 2 ** i * factorial(i) * factorial(k - i))
    return value.numerator


def partition_count(k: int, i: int) -> int:
    """Partitions of [3k-i] into k-i blocks of size 3 and i blocks of size 2."""
    return factorial(3 * k - i) // (6 ** (k - i) * factorial(k - i) * 2 ** i * factorial(i))


def count_linext_level_via_partitions(k: int, i: int) -> int:
    return 2 ** (k - i) * partition_count(k, i)


def subsets(k: int, i: int):
    return [frozenset(c) for c in combinations(range(1, k + 1), i)]
