"""Named verification suites over all modules, plus the four A_{k,i} routes."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .diagonal import (descent_table_gf, descent_table_rec, diagonal_second,
                       first_kind_gf_check, leading_coefficient)
from .exactpoly import (Poly, is_real_rooted, is_unimodal, pochhammer,
                        series_over_power)
from .jsnumbers import build_triangle, verify_defining_identity
from .permutations import (LEGENDRE, a_table_enum, b_table_enum, descents,
                           enumerate_jsp, enumerate_stirling, has_bar_pattern,
                           js_to_ls_transform, jsp_multiset, phi, phi_inverse,
                           psi, psi_inverse, restore_bars, strip_bars)
from .posets import (A_S_at_one, TooLarge, build_P_legendre, build_R,
                     count_linext_level, count_linext_level_via_partitions,
                     descent_count, descent_polynomial, linear_extensions,
                     order_polynomial_values, subsets, LabeledPoset)

SUITES = ("identities", "diagonal", "posets", "bijections", "egge")
METHODS = ("gf", "rec", "enum", "posets")


@dataclass
class VerifyReport:
    suite: str
    cases: int = 0
    failures: List[Tuple[str, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, case_id: str, expected, actual) -> bool:
        self.cases += 1
        if expected != actual:
            self.failures.append((case_id, str(expected), str(actual)))
            return False
        return True

    def merge(self, other: "VerifyReport") -> None:
        self.cases += other.cases
        self.failures.extend(other.failures)

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases": self.cases,
                "failures": [{"case": c, "expected": e, "actual": a}
                             for c, e, a in sorted(self.failures)]}

    def render(self) -> str:
        lines = [f"suite {self.suite}: {self.cases} cases, {len(self.failures)} failures"]
        for c, e, a in sorted(self.failures):
            lines.append(f"  FAIL {c}: expected {e}, got {a}")
        return "\n".join(lines)


# ---------------------------------------------------------------------
# A_{k,i}(t) by each of the four routes
# ---------------------------------------------------------------------

def _hist_poly(hist: Dict[int, int]) -> Poly:
    top = max(hist, default=0)
    return Poly([hist.get(j, 0) for j in range(top + 1)], "t")


def descent_table(k_max: int, method: str) -> Dict[Tuple[int, int], Poly]:
    if method == "gf":
        return dict(descent_table_gf(k_max).A)
    if method == "rec":
        return dict(descent_table_rec(k_max).A)
    if method == "enum":
        if k_max > 4:
            raise TooLarge("enumeration limited to k_max <= 4")
        a = a_table_enum(k_max)
        out = {}
        for k in range(k_max + 1):
            for i in range(k + 1):
                out[k, i] = _hist_poly({j: n for (kk, ii, j), n in a.items()
                                        if (kk, ii) == (k, i)})
        return out
    if method == "posets":
        if k_max > 4:
            raise TooLarge("poset enumeration limited to k_max <= 4")
        out = {(0, 0): Poly.const(1)}
        for k in range(1, k_max + 1):
            for i in range(k + 1):
                out[k, i] = sum((descent_polynomial(build_R(k, S)) for S in subsets(k, i)),
                                Poly((), "t"))
        return out
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------

def suite_identities(n_max: int = 10) -> VerifyReport:
    r = VerifyReport("identities")
    for kind in ("second", "first"):
        for n in range(n_max + 1):
            r.check(f"defining-identity/{kind}/n={n}", True, verify_defining_identity(kind, n))
    tri = build_triangle("second", 12)
    for n in range(1, 13):
        for k in range(1, n + 1):
            S = lambda a, b: tri.entry(a, b).leading if b <= a else 0
            T = lambda a, b: tri.entry(a, b).coeff(0) if b <= a else 0
            r.check(f"stirling-recurrence/{n},{k}", S(n - 1, k - 1) + k * S(n - 1, k), S(n, k))
            r.check(f"central-recurrence/{n},{k}", T(n - 1, k - 1) + k * k * T(n - 1, k), T(n, k))
    a = Fraction(2, 3)
    for k in range(1, 21):
        lhs = sum(pochhammer(a, s) / Fraction(_fact(s)) for s in range(k))
        r.check(f"pochhammer/k={k}", pochhammer(a + 1, k - 1) / Fraction(_fact(k - 1)), lhs)
    return r


def _fact(n):
    out = 1
    for m in range(2, n + 1):
        out *= m
    return out


def suite_diagonal(k_max: int = 6, table_k: int = 8, first_k: int = 5) -> VerifyReport:
    r = VerifyReport("diagonal")
    for k in range(k_max + 1):
        d = diagonal_second(k)
        for i, p in enumerate(d.coeffs_by_i):
            r.check(f"degree/{k},{i}", 3 * k - i, p.degree)
            r.check(f"leading/{k},{i}", leading_coefficient(k, i), p.leading)
            if k >= 1:
                r.check(f"roots/{k},{i}", [0] * (k + 1), [p(-m) for m in range(k + 1)])
    gf, rec = descent_table_gf(table_k), descent_table_rec(table_k)
    for k in range(table_k + 1):
        for i in range(k + 1):
            A = gf[k, i]
            r.check(f"gf-vs-rec/{k},{i}", str(rec[k, i]), str(A))
            if k >= 1:
                coeffs = [A.coeff(j) for j in range(2 * k - i + 2)]
                r.check(f"positivity/{k},{i}", True,
                        coeffs[0] == 0 and coeffs[-1] == 0 and all(c > 0 for c in coeffs[1:-1]))
            r.check(f"row-sum/{k},{i}", count_linext_level(k, i), A(1))
    for k in range(first_k + 1):
        for i in range(k + 1):
            r.check(f"first-kind-reversal/{k},{i}", True, first_kind_gf_check(k, i))
    return r


def random_poset(rng: random.Random, size: int, density: float = 0.35) -> LabeledPoset:
    """Random labeled poset: a random DAG on a random permutation of labels 1..size."""
    labels = list(range(1, size + 1))
    rng.shuffle(labels)
    covers = {(labels[a], labels[b]) for a in range(size) for b in range(a + 1, size)
              if rng.random() < density}
    return LabeledPoset.from_pairs(labels, covers)


def stanley_identity_holds(P: LabeledPoset, order: int = 10) -> bool:
    """sum_{n>=1} Omega_P(n) t^n versus descent_polynomial(P)/(1-t)^(|P|+1), to t^order."""
    omega = order_polynomial_values(P, order)
    series = series_over_power(descent_polynomial(P), len(P) + 1, order + 1)
    return series[1:] == omega[1:] and series[0] == 0


def bundled_posets(max_size: int = 7):
    out = [("vee3", LabeledPoset.from_pairs({1, 2, 3}, {(2, 1), (2, 3)}))]
    for k in range(1, 4):
        for i in range(k + 1):
            for S in subsets(k, i):
                P = build_R(k, S)
                if len(P) <= max_size:
                    out.append((f"R_{k},{sorted(S)}", P))
        if 3 * k <= max_size:
            out.append((f"P_{k}", build_P_legendre(k)))
    return out


def suite_posets(k_max: int = 4, formula_k: int = 8, random_count: int = 200,
                 seed: int = 20120101) -> VerifyReport:
    r = VerifyReport("posets")
    gf = descent_table_gf(max(k_max, 1))
    for k in range(1, k_max + 1):
        for i in range(k + 1):
            total = Poly((), "t")
            for S in subsets(k, i):
                A_S = descent_polynomial(build_R(k, S))
                r.check(f"A_S-at-one/{k},{sorted(S)}", A_S_at_one(k, S), A_S(1))
                total = total + A_S
            r.check(f"sum-over-S/{k},{i}", str(gf[k, i]), str(total))
            r.check(f"partition-count/{k},{i}", count_linext_level(k, i),
                    count_linext_level_via_partitions(k, i))
    for k in range(1, formula_k + 1):
        for i in range(k + 1):
            r.check(f"level-sum/{k},{i}", count_linext_level(k, i),
                    sum(A_S_at_one(k, S) for S in subsets(k, i)))
            r.check(f"partitions/{k},{i}", count_linext_level(k, i),
                    count_linext_level_via_partitions(k, i))
    ls = build_triangle("second", 10)
    for k in range(1, 4):
        omega = order_polynomial_values(build_P_legendre(k), 5)
        for n in range(1, 6):
            r.check(f"omega-P/{k},n={n}", ls.entry(n - 1 + k, n - 1)(1), omega[n])
    for name, P in bundled_posets():
        r.check(f"stanley/{name}", True, stanley_identity_holds(P))
    rng = random.Random(seed)
    for t in range(random_count):
        P = random_poset(rng, rng.randint(1, 7))
        r.check(f"stanley/random-{t}", True, stanley_identity_holds(P))
    return r


def suite_bijections(phi_k: int = 4, psi_k: int = 3) -> VerifyReport:
    r = VerifyReport("bijections")
    for k in range(1, phi_k + 1):
        for i in range(k + 1):
            for S in subsets(k, i):
                images, bad = set(), 0
                for e in linear_extensions(build_R(k, S)):
                    w = phi(e)
                    images.add(w)
                    if descent_count(w) != descent_count(e) or phi_inverse(w) != e:
                        bad += 1
                r.check(f"phi/{k},{sorted(S)}/des-and-roundtrip", 0, bad)
                target = set(enumerate_jsp(k, S))
                r.check(f"phi/{k},{sorted(S)}/onto", len(target), len(images))
                r.check(f"phi/{k},{sorted(S)}/image", True, images == target)
                r.check(f"phi/{k},{sorted(S)}/inverse-side", 0,
                        sum(1 for w in target if phi(phi_inverse(w)) != w))
    for k in range(1, psi_k + 1):
        images, bad = set(), 0
        for w in enumerate_jsp(k):
            e = psi(w)
            images.add(e)
            if descent_count(e) != descents(w, LEGENDRE) + 1 or psi_inverse(e) != w:
                bad += 1
        r.check(f"psi/{k}/des-and-roundtrip", 0, bad)
        r.check(f"psi/{k}/image", True, images == set(linear_extensions(build_P_legendre(k))))
        r.check(f"psi/{k}/inverse-side", 0,
                sum(1 for e in images if psi(psi_inverse(e)) != e))
    return r


def suite_egge(k_max: int = 3) -> VerifyReport:
    r = VerifyReport("egge")
    b = b_table_enum(k_max)
    a = a_table_enum(k_max)
    for k in range(1, k_max + 1):
        enum = {j: n for (kk, j), n in b.items() if kk == k}
        r.check(f"transform/{k}", enum, js_to_ls_transform(a, k))
        shifted = descent_polynomial(build_P_legendre(k)).shift_down(1)
        r.check(f"poset-P/{k}", _hist_poly(enum), shifted)
        pattern_free = {}
        roundtrip_bad = 0
        for i in range(k + 1):
            for S in subsets(k, i):
                for w in enumerate_jsp(k, S):
                    if has_bar_pattern(w):
                        continue
                    j = descent_count(w) + 1
                    pattern_free[j] = pattern_free.get(j, 0) + 1
                    full = restore_bars(w, k)
                    if strip_bars(full) != w or descents(full, LEGENDRE) != descent_count(w):
                        roundtrip_bad += 1
        r.check(f"pattern-free/{k}", enum, pattern_free)
        r.check(f"pattern-roundtrip/{k}", 0, roundtrip_bad)
        lsp = set(enumerate_stirling(jsp_multiset(k)))
        r.check(f"pattern-onto/{k}", lsp, {restore_bars(w, k) for i in range(k + 1)
                                           for S in subsets(k, i)
                                           for w in enumerate_jsp(k, S)
                                           if not has_bar_pattern(w)})
    return r


def run_suite(name: str, k_max: int | None = None) -> VerifyReport:
    if name == "all":
        report = VerifyReport("all")
        for s in SUITES:
            report.merge(run_suite(s, k_max))
        return report
    if name == "identities":
        return suite_identities() if k_max is None else suite_identities(min(k_max, 12))
    if name == "diagonal":
        return suite_diagonal() if k_max is None else suite_diagonal(k_max, k_max, min(k_max, 5))
    if name == "posets":
        return suite_posets() if k_max is None else suite_posets(min(k_max, 4), k_max)
    if name == "bijections":
        return suite_bijections() if k_max is None else suite_bijections(k_max, min(k_max, 3))
    if name == "egge":
        return suite_egge() if k_max is None else suite_egge(min(k_max, 4))
    raise ValueError(f"unknown suite {name!r}")


def conjecture(k_max: int = 9) -> Tuple[VerifyReport, list]:
    """Real-rootedness and unimodality of every A_{k,i}, 0 <= i <= k <= k_max."""
    report = VerifyReport("conjecture")
    rows = []
    table = descent_table_rec(k_max)
    for k in range(k_max + 1):
        for i in range(k + 1):
            A = table[k, i]
            rr = is_real_rooted(A)
            uni = is_unimodal([A.coeff(j) for j in range(1, max(2 * k - i, 1) + 1)] if k else [1])
            report.check(f"real-rooted/{k},{i}", True, rr)
            report.check(f"unimodal/{k},{i}", True, uni)
            rows.append({"k": k, "i": i, "real_rooted": rr, "unimodal": uni})
    return report, rows
