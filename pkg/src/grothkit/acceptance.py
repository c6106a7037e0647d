"""
The reproduction harness: eleven acceptance criteria, each a function returning
a :class:`CriterionResult`.  ``quick=True`` shrinks every sweep to n <= 4 while
still touching every criterion.

Used by ``groth-kit verify`` and by ``tests/test_acceptance.py``.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import analysis, bpd, groth, zeroone
from .perm import Permutation, avoids_zero_one_patterns, enumerate_sn
from .poly import (
    Polynomial,
    VarSpace,
    divided_difference,
    evaluate_all_ones,
    homogeneous_component,
    isobaric_divided_difference,
)

log = logging.getLogger(__name__)

__all__ = ["CriterionResult", "CRITERIA", "run_all", "format_line", "display_1342"]


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float
    limit: float | None = None

    @property
    def passed(self) -> bool:
        return self.ok and (self.limit is None or self.seconds < self.limit)


def format_line(r: CriterionResult) -> str:
    status = "PASS" if r.passed else "FAIL"
    bound = f" (limit {r.limit:g}s)" if r.limit else ""
    return f"[{status}] {r.number:2d}. {r.title}: {r.detail} [{r.seconds:.2f}s{bound}]"


def _perms(n_max: int):
    for n in range(1, n_max + 1):
        yield from enumerate_sn(n)


def display_1342() -> Polynomial:
    """G_1342(x;y) assembled from its three pipe dreams, written out factor by factor."""
    s = VarSpace(4, 4)
    x, y = s.x, s.y

    def b(i, j):
        return x(i) + y(j) - x(i) * y(j)

    def u(p, q):
        return 1 - x(p) - y(q) + x(p) * y(q)

    return b(2, 2) * b(3, 2) + b(1, 1) * u(2, 2) * b(3, 2) + b(1, 1) * b(2, 1) * u(3, 2)


def _timed(number, title, limit, body) -> CriterionResult:
    t0 = time.perf_counter()
    try:
        ok, detail = body()
    except Exception as exc:  # a crash is a failure, reported with its type
        log.exception("criterion %d crashed", number)
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CriterionResult(number, title, ok, detail, time.perf_counter() - t0, limit)


def criterion_1(quick=False):
    def body():
        w = Permutation.parse("1342")
        target = display_1342()
        via_bpd = groth.grothendieck_bpd(w, groth.DOUBLE)
        via_dd = groth.grothendieck_dd(w, groth.DOUBLE)
        return via_bpd == target and via_dd == target, f"{len(target)} terms, both engines match"

    return _timed(1, "G_1342(x;y) display", 1.0, body)


def criterion_2(quick=False):
    def body():
        count = len(bpd.enumerate_bpds(Permutation.parse("1342")))
        perms = list(enumerate_sn(4 if not quick else 3))
        if not quick:
            perms += random.Random(1342).sample(list(enumerate_sn(5)), 20)
        bad = [w for w in perms if bpd.enumerate_bpds(w) != bpd.enumerate_bpds_bruteforce(w)]
        return count == 3 and not bad, f"|BPD(1342)|={count}, {len(perms)} closures vs brute force, {len(bad)} mismatches"

    return _timed(2, "BPD enumeration", 60.0, body)


def criterion_3(quick=False):
    def body():
        n = 4 if quick else 6
        perms = list(_perms(n))
        bad = [w for w in perms if not zeroone.classify_groth(w, strict=False).agree]
        return not bad, f"{len(perms)} perms in S1..S{n}, {len(bad)} disagreements"

    return _timed(3, "six-pattern theorem", 120.0, body)


def criterion_4(quick=False):
    def body():
        n = 4 if quick else 6
        perms = list(_perms(n))
        bad = [w for w in perms if not zeroone.classify_schubert(w, strict=False).agree]
        return not bad, f"{len(perms)} perms in S1..S{n}, {len(bad)} disagreements"

    return _timed(4, "twelve-pattern theorem", None, body)


def criterion_5(quick=False):
    def body():
        w = Permutation.parse("58326147")
        rep = zeroone.factorize(w)
        s = VarSpace(8)
        x = s.x
        F = x(1) ** 2 + x(1) * x(2) + x(2) ** 2 + x(1) * x(2) ** 2 + x(1) ** 2 * x(2)
        G = (
            x(3) + x(4) + x(5)
            + x(3) * x(4) + x(4) * x(5) + x(3) * x(5)
            + x(3) * x(4) * x(5)
        )
        polys = [f.poly for f in rep.factors]
        mono = Polynomial.monomial(s, rep.lam)
        ok = (
            rep.lam == (4, 4, 2, 1, 1, 0, 0, 0)
            and polys == [F, G]
            and mono * F * G == groth.g_tilde(w)
        )
        return ok, f"lambda={rep.lam[:5]}, factors {[str(f) for f in rep.factors]}"

    return _timed(5, "factorization of 58326147", None, body)


def criterion_6(quick=False):
    def body():
        n_single, n_double = (4, 4) if quick else (6, 5)
        single = double = 0
        for w in _perms(n_single):
            if not avoids_zero_one_patterns(w):
                continue
            rep = zeroone.factorize(w)
            windows = [set(f.structure.x_window) for f in rep.factors]
            assert all(a.isdisjoint(b) for i, a in enumerate(windows) for b in windows[i + 1:])
            assert rep.product_verified
            single += 1
            if w.n <= n_double:
                assert zeroone.factorize_double_schubert(w).product_verified
                double += 1
        return True, f"{single} single (S1..S{n_single}), {double} double (S1..S{n_double}) verified"

    return _timed(6, "factorization sweep", None, body)


def criterion_7(quick=False):
    def body():
        n_eng, n_low = (4, 4) if quick else (5, 6)
        bad_eng = [
            (w, v)
            for w in _perms(n_eng)
            for v in (groth.SINGLE, groth.DOUBLE)
            if groth.grothendieck_bpd(w, v) != groth.grothendieck_dd(w, v)
        ]
        bad_low = [
            w
            for w in _perms(n_low)
            if homogeneous_component(groth.grothendieck_dd(w), w.length()) != groth.schubert_dd(w)
        ]
        return not bad_eng and not bad_low, (
            f"engines S1..S{n_eng}: {len(bad_eng)} mismatches; lowest component S1..S{n_low}: {len(bad_low)} mismatches"
        )

    return _timed(7, "engine cross-validation", None, body)


def criterion_8(quick=False):
    def body():
        n = 3 if quick else 4
        checked, failed = 0, []
        for w in _perms(n):
            if avoids_zero_one_patterns(w):
                checked += 1
                if not analysis.check_lorentzian_theorem(w):
                    failed.append(str(w))
        return not failed, f"{checked} zero-one perms in S1..S{n}, failures {failed}"

    return _timed(8, "Lorentzian normalization", 600.0, body)


def criterion_9(quick=False):
    def body():
        n_zo, n_report = (4, 4) if quick else (6, 5)
        zero_one, failed, reported = 0, [], []
        for w in _perms(n_zo):
            zo = avoids_zero_one_patterns(w)
            if not zo and w.n > n_report:
                continue
            verdicts = analysis.conjecture_checks(w)
            bad = [v.check for v in verdicts if not v]
            if zo:
                zero_one += 1
                if bad:
                    failed.append((str(w), bad))
            elif bad:
                reported.append((str(w), bad))
                log.warning("report mode: %s fails %s", w, bad)
        return not failed, (
            f"{zero_one} zero-one perms pass; report mode over S1..S{n_report}: {len(reported)} failures"
        )

    return _timed(9, "support and coefficient conjectures", None, body)


def criterion_10(quick=False):
    def body():
        top = 4 if quick else 10
        for k in range(1, top + 1):
            if evaluate_all_ones(zeroone.factor_F(k, 1)) != 2 * k + 1:
                return False, f"factor_F({k}) at all-ones"
            if evaluate_all_ones(zeroone.factor_G(k, 1)) != 2 ** (k + 1) - 1:
                return False, f"factor_G({k}) at all-ones"
        return True, f"k, l = 1..{top}"

    return _timed(10, "factor identities at all-ones", None, body)


def random_polynomial(rng: random.Random, space: VarSpace, terms: int = 4, max_exp: int = 3) -> Polynomial:
    out = {}
    for _ in range(terms):
        alpha = tuple(rng.randint(0, max_exp) for _ in range(space.nvars))
        out[alpha] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Polynomial(space, out)


def operator_relations(f: Polynomial) -> list[str]:
    """Names of the operator identities that fail on f (4 x-variables needed)."""
    d, pi = divided_difference, isobaric_divided_difference
    failures = []
    for op, name in ((d, "partial"), (pi, "pi")):
        if op(op(f, 1), 1) != (Polynomial.zero(f.space) if op is d else op(f, 1)):
            failures.append(f"{name} square")
        if op(op(op(f, 1), 2), 1) != op(op(op(f, 2), 1), 2):
            failures.append(f"{name} braid")
        if op(op(f, 1), 3) != op(op(f, 3), 1):
            failures.append(f"{name} commute")
    return failures


def criterion_11(quick=False):
    def body():
        rng = random.Random(11)
        space = VarSpace(4)
        samples = 100 if not quick else 25
        bad = [f for f in (random_polynomial(rng, space) for _ in range(samples)) if operator_relations(f)]
        return not bad, f"{samples} random polynomials, {len(bad)} failing"

    return _timed(11, "operator algebra", None, body)


CRITERIA = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
]


def run_all(quick: bool = False, echo=None) -> list[CriterionResult]:
    results = []
    for crit in CRITERIA:
        r = crit(quick)
        results.append(r)
        if echo:
            echo(format_line(r))
    return results
