"""Seeded property suites behind ``binwaring selftest``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .apolarity import apolar_generators
from .decomposition import verify_decomposition
from .realroots import (
    gap_certificate,
    has_distinct_real_factors,
    real_rooted_with_zero_coefficient,
    sturm_count_distinct,
)
from .sampling import case_rng, random_form, random_gap_polynomial, random_monomial_perp_element
from .waring import (
    complex_rank,
    monomial_complex_rank,
    monomial_real_rank,
    real_lower_bound_certificate,
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def monomial_pairs(max_degree: int):
    for d in range(2, max_degree + 1):
        for a in range(1, d // 2 + 1):
            yield a, d - a


def zerocoeff_suite(trials: int, seed: int) -> SuiteResult:
    bad = 0
    for d in range(3, 11):
        for k in range(trials):
            p = random_gap_polynomial(case_rng(seed, "gap", d, k), d)
            if gap_certificate(p) is None or sturm_count_distinct(p) >= d:
                bad += 1
    return SuiteResult("zero-coefficient gap", bad == 0, f"{8 * trials} polynomials, {bad} with d distinct real roots")


def lower_bound_suite(trials: int, seed: int, max_degree: int = 12) -> SuiteResult:
    bad = checked = 0
    for a, b in monomial_pairs(max_degree):
        for r in range(1, a + b):
            cert = real_lower_bound_certificate(a, b, r)
            for k in range(trials):
                op = random_monomial_perp_element(case_rng(seed, "perp", a, b, r, k), a, b, r)
                checked += 1
                if not cert.admits(op) or has_distinct_real_factors(op):
                    bad += 1
    return SuiteResult("real lower bound", bad == 0, f"{checked} apolar elements, {bad} counterexamples")


def construction_suite(max_degree: int = 15) -> SuiteResult:
    bad = cases = 0
    for d in range(1, max_degree + 1):
        for i in range(d):
            p = real_rooted_with_zero_coefficient(d, i)
            cases += 1
            if p.coeff(i) != 0 or p.degree != d or sturm_count_distinct(p) != d:
                bad += 1
    return SuiteResult("totally real construction", bad == 0, f"{cases} (d, i) cases, {bad} failures")


def monomial_rank_suite(max_degree: int = 12) -> SuiteResult:
    bad = rows = 0
    for a, b in monomial_pairs(max_degree):
        rows += 1
        c = monomial_complex_rank(a, b)
        r = monomial_real_rank(a, b)
        if c.rank != b + 1 or r.rank != a + b:
            bad += 1
        if not (verify_decomposition(c.witness)[0] and verify_decomposition(r.witness)[0]):
            bad += 1
    return SuiteResult("monomial ranks", bad == 0, f"{rows} monomials, {bad} failures")


def generic_rank_suite(trials: int, seed: int) -> SuiteResult:
    worst = trials
    for d in range(2, 10):
        hits = 0
        for k in range(trials):
            form = random_form(case_rng(seed, "generic", d, k), d)
            if complex_rank(form).rank == math.ceil((d + 1) / 2):
                hits += 1
        worst = min(worst, hits)
    ok = worst * 100 >= 99 * trials
    return SuiteResult("generic complex rank", ok, f"worst degree: {worst}/{trials} generic")


def generator_suite(trials: int, seed: int) -> SuiteResult:
    bad = 0
    for d in range(1, 11):
        for k in range(trials):
            form = random_form(case_rng(seed, "gens", d, k), d)
            pair = apolar_generators(form)
            if pair.d1 + pair.d2 != d + 2:
                bad += 1
    return SuiteResult("apolar generator degrees", bad == 0, f"{10 * trials} forms, {bad} failures")


def run_all(trials: int, seed: int, report: Callable[[str], None] = print) -> bool:
    suites = [
        lambda: zerocoeff_suite(trials, seed),
        lambda: lower_bound_suite(trials, seed),
        construction_suite,
        monomial_rank_suite,
        lambda: generic_rank_suite(min(trials, 100), seed),
        lambda: generator_suite(min(trials, 100), seed),
    ]
    ok = True
    for suite in suites:
        result = suite()
        report(result.line())
        ok = ok and result.passed
    return ok

