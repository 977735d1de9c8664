"""Acceptance checks, one test per criterion.

Each test prints a PASS/FAIL line with its counts (visible with ``-s``); the
conftest hook repeats the verdicts in the terminal summary.
"""

import io
import json
import math
import time
from fractions import Fraction

import mpmath
import pytest
import sympy as sp

from binwaring import serialize
from binwaring.algebra import BinaryForm, ComplexScalar, UniPoly
from binwaring.apolarity import apolar_generators, apply, perp_component
from binwaring.cli import run
from binwaring.decomposition import REAL, verify_decomposition
from binwaring.realroots import gap_certificate, real_rooted_with_zero_coefficient, sturm_count_distinct
from binwaring.sampling import case_rng, random_form, random_gap_polynomial, random_rational
from binwaring.selftest import monomial_pairs
from binwaring.waring import (
    complex_rank,
    construct_real_apolar,
    monomial_complex_rank,
    monomial_real_decomposition,
    monomial_real_rank,
    real_lower_bound_certificate,
)

PAIRS = list(monomial_pairs(12))
SEED = 0
TOL = 1e-20


def report(number, ok, detail):
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def oracle_residual(dec, prec=160):
    """Max-norm residual from a direct binomial expansion, independent of the package."""
    d = dec.target.degree

    def num(x):
        if isinstance(x, ComplexScalar):
            return mpmath.mpc(x.re, x.im)
        return mpmath.mpf(x.numerator) / x.denominator

    with mpmath.workprec(prec):
        acc = [num(c) for c in dec.target.coeffs]
        for t in dec.terms:
            c0, c1, al = num(t.form.c0), num(t.form.c1), num(t.alpha)
            for j in range(d + 1):
                acc[j] -= al * math.comb(d, j) * c0 ** (d - j) * c1**j
        return max(abs(x) for x in acc)


def exact_oracle_residual(dec):
    x0, x1 = sp.symbols("x0 x1")
    d = dec.target.degree
    rat = lambda q: sp.Rational(q.numerator, q.denominator)
    target = sum(rat(c) * x0 ** (d - j) * x1**j for j, c in enumerate(dec.target.coeffs))
    total = sum(rat(t.alpha) * (rat(t.form.c0) * x0 + rat(t.form.c1) * x1) ** d for t in dec.terms)
    return sp.expand(total - target)


def distinct_real_factors_oracle(coeffs):
    """Is sum c_j y0^(r-j) y1^j a product of r distinct real linear forms?

    Trailing zeros in the y1^r direction are factors y0 (the root at infinity);
    at most one is allowed, and the rest must have distinct real roots.
    """
    r = len(coeffs) - 1
    m = 0
    while m <= r and coeffs[r - m] == 0:
        m += 1
    if m > r or m > 1:
        return False
    p = UniPoly(tuple(coeffs[: r - m + 1]))
    return p.degree == 0 or sturm_count_distinct(p) == r - m


@pytest.mark.criterion(1, "complex monomial rank b+1")
def test_criterion_1_complex_monomial_rank():
    bad, slowest = [], 0.0
    for a, b in PAIRS:
        start = time.perf_counter()
        res = monomial_complex_rank(a, b, 128)
        syl = complex_rank(BinaryForm.monomial(a, b), 128)
        elapsed = time.perf_counter() - start
        slowest = max(slowest, elapsed)
        dec = res.witness
        forms = {(t.form.c0, complex(t.form.c1)) for t in dec.terms}
        ok = (
            res.rank == b + 1
            and dec.rank == b + 1
            and len(forms) == b + 1
            and verify_decomposition(dec, TOL)[0]
            and oracle_residual(dec) <= TOL
            and syl.rank == b + 1
            and elapsed < 1.0
        )
        if not ok:
            bad.append((a, b))
    report(1, not bad, f"{len(PAIRS)} monomials, failures {bad}, slowest case {slowest:.3f}s")


@pytest.mark.criterion(2, "exact real monomial decomposition with a+b terms")
def test_criterion_2_real_monomial_decomposition():
    bad = []
    for a, b in PAIRS:
        dec = monomial_real_decomposition(a, b)
        forms = [(t.form.c0, t.form.c1) for t in dec.terms]
        ok = (
            dec.rank == a + b
            and dec.exact
            and dec.residual == 0
            and verify_decomposition(dec) == (True, 0)
            and all(isinstance(c, Fraction) for f in forms for c in f)
            and len(set(forms)) == a + b
            and dec.field == REAL
            and monomial_real_rank(a, b).rank == a + b
        )
        if ok and a + b <= 9:
            ok = exact_oracle_residual(dec) == 0
        if not ok:
            bad.append((a, b))
    report(2, not bad, f"{len(PAIRS)} monomials, failures {bad}")


@pytest.mark.criterion(3, "real lower bound certificates, 200 samples per (a, b, r)")
def test_criterion_3_real_lower_bound():
    counterexamples = checked = missing = 0
    for a, b in PAIRS:
        m = BinaryForm.monomial(a, b)
        for r in range(1, a + b):
            cert = real_lower_bound_certificate(a, b, r)
            basis = perp_component(m, r).basis  # catalecticant kernel
            if not (cert.r == r and cert.gap_end - cert.gap_start >= 1):
                missing += 1
            for k in range(200):
                rng = case_rng(SEED, "accept-perp", a, b, r, k)
                coeffs = [Fraction(0)] * (r + 1)
                for op in basis:
                    lam = random_rational(rng, 1000, nonzero=True)
                    coeffs = [c + lam * x for c, x in zip(coeffs, op.coeffs)]
                checked += 1
                if any(coeffs[r - p] != 0 for p in range(cert.gap_start, cert.gap_end + 1)):
                    counterexamples += 1
                elif distinct_real_factors_oracle(coeffs):
                    counterexamples += 1
    report(3, counterexamples == 0 and missing == 0, f"{checked} apolar elements, {counterexamples} counterexamples, {missing} bad certificates")


@pytest.mark.criterion(4, "totally real construction with a forced zero coefficient")
def test_criterion_4_construction():
    bad, cases = [], 0
    for d in range(2, 16):
        for a in range(1, d // 2 + 1):
            b = d - a
            op = construct_real_apolar(a, b)
            p = op.dehomogenize()
            cases += 1
            if not (op.coeffs[b] == 0 and apply(op, BinaryForm.monomial(a, b)).is_zero() and p.degree == d and sturm_count_distinct(p) == d):
                bad.append(("monomial", a, b))
    for d in range(1, 16):
        for i in range(d):
            p = real_rooted_with_zero_coefficient(d, i)
            cases += 1
            if not (p.degree == d and p.coeff(i) == 0 and sturm_count_distinct(p) == d):
                bad.append(("position", d, i))
            rng = case_rng(SEED, "accept-seeds", d, i)
            seeds = rng.sample(range(1, 200), d - 1)
            p = real_rooted_with_zero_coefficient(d, i, [Fraction(s, 7) for s in seeds])
            cases += 1
            if not (p.coeff(i) == 0 and sturm_count_distinct(p) == d):
                bad.append(("seeded", d, i))
    report(4, not bad, f"{cases} constructions, failures {bad}")


@pytest.mark.criterion(5, "consecutive zero coefficients force fewer than d real roots")
def test_criterion_5_zerocoeff():
    bad = total = 0
    x = sp.symbols("x")
    for d in range(3, 11):
        for k in range(1000):
            p = random_gap_polynomial(case_rng(SEED, "accept-gap", d, k), d)
            total += 1
            distinct = sturm_count_distinct(p)
            if gap_certificate(p) is None or distinct >= d:
                bad += 1
            elif k < 25:
                poly = sp.Poly([sp.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], x)
                if len(set(sp.real_roots(poly))) != distinct:
                    bad += 1
    report(5, bad == 0, f"{total} polynomials, {bad} with d distinct real roots or a Sturm/sympy mismatch")


@pytest.mark.criterion(6, "x0 x1^(d-1) has rank d; generic forms have rank ceil((d+1)/2)")
def test_criterion_6_fixtures():
    bad = [d for d in range(2, 13) if complex_rank(BinaryForm.monomial(1, d - 1)).rank != d]
    hits = {}
    for d in range(2, 10):
        target = math.ceil((d + 1) / 2)
        hits[d] = 0
        for k in range(100):
            res = complex_rank(random_form(case_rng(SEED, "accept-generic", d, k), d))
            if res.rank == target and verify_decomposition(res.witness, TOL)[0]:
                hits[d] += 1
    ok = not bad and all(h >= 99 for h in hits.values())
    report(6, ok, f"monomial failures {bad}, generic hits per degree {hits}")


@pytest.mark.criterion(7, "generator degrees, verified decompositions, byte-identical JSON")
def test_criterion_7_structural():
    bad_degrees = 0
    for d in range(1, 11):
        for k in range(100):
            pair = apolar_generators(random_form(case_rng(SEED, "accept-gens", d, k), d))
            if pair.d1 + pair.d2 != d + 2:
                bad_degrees += 1

    emitted = []
    for a, b in PAIRS:
        emitted.append(monomial_complex_rank(a, b).witness)
        emitted.append(monomial_real_rank(a, b).witness)
    for d in range(1, 8):
        for k in range(5):
            emitted.append(complex_rank(random_form(case_rng(SEED, "accept-emit", d, k), d, bound=50)).witness)
    unverified = sum(1 for dec in emitted if not verify_decomposition(dec, TOL)[0])

    texts = [serialize.dumps(serialize.decomposition_to_json(dec)) for dec in emitted]
    mismatched = sum(
        1 for t in texts if serialize.roundtrip(t, serialize.decomposition_from_json, serialize.decomposition_to_json) != t
    )
    for a, b in PAIRS:
        for r in range(1, a + b):
            t = serialize.dumps(serialize.certificate_to_json(real_lower_bound_certificate(a, b, r)))
            mismatched += serialize.roundtrip(t, serialize.certificate_from_json, serialize.certificate_to_json) != t
        t = serialize.dumps(serialize.rank_result_to_json(monomial_real_rank(a, b)))
        mismatched += serialize.roundtrip(t, serialize.rank_result_from_json, serialize.rank_result_to_json) != t

    # the command line re-verifies before printing
    cli_bad = 0
    for argv in (["decompose", "--monomial", "3", "5", "--field", "complex", "--json"], ["decompose", "--monomial", "3", "5", "--field", "real", "--json"]):
        out = io.StringIO()
        if run(argv, out, io.StringIO()) != 0:
            cli_bad += 1
            continue
        dec = serialize.decomposition_from_json(json.loads(out.getvalue()))
        cli_bad += not verify_decomposition(dec, TOL)[0]

    ok = bad_degrees == 0 and unverified == 0 and mismatched == 0 and cli_bad == 0
    report(
        7,
        ok,
        f"{bad_degrees} generator degree failures in 1000 forms, {unverified}/{len(emitted)} unverified decompositions, "
        f"{mismatched} JSON mismatches, {cli_bad} CLI failures",
    )
