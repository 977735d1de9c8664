import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from binwaring.algebra import BinaryForm, DiffOp, LinearForm
from binwaring.apolarity import apply, perp_component
from binwaring.decomposition import COMPLEX, REAL, WaringDecomposition, WaringTerm, verify_decomposition
from binwaring.errors import InputError
from binwaring.realroots import has_distinct_real_factors, is_totally_real_distinct, sturm_count_distinct
from binwaring.sampling import case_rng, random_form, random_monomial_perp_element, random_rational
from binwaring.selftest import monomial_pairs
from binwaring.waring import (
    complex_rank,
    construct_real_apolar,
    monomial_complex_decomposition,
    monomial_complex_rank,
    monomial_real_decomposition,
    monomial_real_rank,
    real_lower_bound_certificate,
    real_rank_bounds,
)

X0, X1 = sp.symbols("x0 x1")


def sympy_alphas(a, b, roots):
    """Solve sum alpha_i (x0 + t_i x1)^d = x0^a x1^b with sympy."""
    alphas = sp.symbols(f"al0:{len(roots)}")
    expr = sum(al * (X0 + sp.Rational(t.numerator, t.denominator) * X1) ** (a + b) for al, t in zip(alphas, roots))
    eqs = sp.Poly(sp.expand(expr - X0**a * X1**b), X0, X1).coeffs()
    sol = sp.solve(eqs, alphas, dict=True)
    assert len(sol) == 1
    return {t: Fraction(int(sp.numer(sol[0][al])), int(sp.denom(sol[0][al]))) for al, t in zip(alphas, roots)}


def test_complex_rank_examples():
    assert monomial_complex_rank(1, 2).rank == 3
    assert monomial_complex_rank(2, 3).rank == 4
    assert monomial_complex_rank(1, 1).rank == 2
    assert monomial_complex_rank(0, 5).rank == 1
    assert complex_rank(BinaryForm.monomial(1, 4)).rank == 5
    assert complex_rank(BinaryForm(3, (1, 0, 0, 1))).rank == 2
    with pytest.raises(InputError):
        monomial_complex_rank(0, 0)
    with pytest.raises(InputError):
        complex_rank(BinaryForm.zero(3))


def test_complex_monomial_decomposition_shape():
    dec = monomial_complex_decomposition(1, 1)
    assert dec.exact and dec.residual == 0
    assert {(t.form, t.alpha) for t in dec.terms} == {(LinearForm(1, 1), Fraction(1, 4)), (LinearForm(1, -1), Fraction(-1, 4))}
    dec = monomial_complex_decomposition(1, 2)
    assert dec.rank == 3 and not dec.exact
    ok, res = verify_decomposition(dec)
    assert ok and res < 1e-30


def test_real_rank_examples():
    assert monomial_real_rank(1, 2).rank == 3
    assert monomial_real_rank(2, 2).rank == 4
    assert monomial_real_rank(0, 5).rank == 1
    assert monomial_real_rank(5, 0).rank == 1


def test_real_decomposition_default_seeds_match_sympy():
    dec = monomial_real_decomposition(1, 2)
    got = {t.form.c1: t.alpha for t in dec.terms}
    assert got == {Fraction(1): Fraction(-1, 12), Fraction(2): Fraction(1, 15), Fraction(-3): Fraction(1, 60)}
    assert got == sympy_alphas(1, 2, [Fraction(1), Fraction(2), Fraction(-3)])
    assert verify_decomposition(dec) == (True, 0)


@pytest.mark.parametrize("a,b", [(1, 3), (2, 3), (2, 4), (3, 3)])
def test_real_decomposition_matches_sympy(a, b):
    dec = monomial_real_decomposition(a, b)
    roots = [t.form.c1 for t in dec.terms]
    assert all(t.form.c0 == 1 for t in dec.terms)
    assert {t.form.c1: t.alpha for t in dec.terms} == sympy_alphas(a, b, roots)


def test_construct_real_apolar_examples():
    assert construct_real_apolar(1, 2) == DiffOp(3, (6, -7, 0, 1))  # t^3 - 7t + 6 = (t - 1)(t - 2)(t + 3)
    op = construct_real_apolar(2, 2)
    assert op.dehomogenize().coeffs[0] == -11  # roots 1, 2, 3, -11/6
    assert construct_real_apolar(2, 2, [1, 2, 3]) == op
    assert construct_real_apolar(1, 1) == DiffOp(2, (-1, 0, 1))
    with pytest.raises(InputError):
        construct_real_apolar(3, 2)


@pytest.mark.parametrize("a,b", list(monomial_pairs(10)))
def test_construct_real_apolar_properties(a, b):
    op = construct_real_apolar(a, b)
    assert op.coeffs[b] == 0
    assert apply(op, BinaryForm.monomial(a, b)).is_zero()
    p = op.dehomogenize()
    assert p.degree == a + b and is_totally_real_distinct(p)


def test_certificate_examples():
    cert = real_lower_bound_certificate(2, 2, 3)
    assert (cert.gap_start, cert.gap_end, cert.reason) == (1, 2, "coefficient-gap")
    # general element c3 y0^3 + c0 y1^3
    general = perp_component(BinaryForm.monomial(2, 2), 3).basis
    assert all(cert.admits(op) for op in general)

    cert = real_lower_bound_certificate(1, 2, 2)
    assert cert.reason == "repeated-factor"
    assert perp_component(BinaryForm.monomial(1, 2), 2).basis == (DiffOp(2, (1, 0, 0)),)

    cert = real_lower_bound_certificate(1, 1, 1)
    assert cert.reason == "empty"
    assert perp_component(BinaryForm.monomial(1, 1), 1).basis == ()

    with pytest.raises(InputError):
        real_lower_bound_certificate(1, 2, 3)


def test_verify_decomposition_examples():
    dec = monomial_real_decomposition(1, 2)
    assert verify_decomposition(dec) == (True, 0)
    terms = list(dec.terms)
    first = terms[0]
    terms[0] = WaringTerm(first.alpha + Fraction(1, 1000), first.form, first.exponent)
    bad = WaringDecomposition.build(dec.target, REAL, terms)
    # oracle: the perturbation contributes (1/1000) (x0 + t x1)^3, whose largest coefficient is 3 |t| or |t|^3
    t = first.form.c1
    expected = max(abs(c) for c in sp.Poly(sp.expand(sp.Rational(1, 1000) * (X0 + t * X1) ** 3), X0, X1).coeffs())
    ok, res = verify_decomposition(bad)
    assert not ok
    assert res == Fraction(str(expected))

    zero = WaringDecomposition.build(BinaryForm.zero(3), REAL, [])
    assert verify_decomposition(zero) == (True, 0)


def test_verify_rejects_repeated_forms():
    form = LinearForm(1, 1)
    terms = [WaringTerm(Fraction(1), form, 2), WaringTerm(Fraction(1), form, 2)]
    dec = WaringDecomposition.build(BinaryForm(2, (2, 4, 2)), REAL, terms)
    assert verify_decomposition(dec)[0] is False


def test_real_rank_bounds():
    bounds = real_rank_bounds(BinaryForm(3, (1, 0, 0, 1)))
    assert (bounds.lower, bounds.upper) == (2, 2)
    # x0^3 - 3 x0 x1^2 = Re (x0 + i x1)^3 has complex rank 2 and real rank 3
    bounds = real_rank_bounds(BinaryForm(3, (1, 0, -3, 0)))
    assert bounds.lower == 2 and bounds.upper == 3
    assert verify_decomposition(bounds.witness)[0]


@pytest.mark.parametrize("a,b", [(1, 2), (2, 3), (1, 5), (3, 4)])
def test_transpose_symmetry(a, b):
    assert monomial_complex_rank(a, b).rank == monomial_complex_rank(b, a).rank
    assert monomial_real_rank(a, b).rank == monomial_real_rank(b, a).rank
    dec = monomial_real_decomposition(a, b)
    swapped = monomial_real_decomposition(b, a)
    assert set(swapped.terms) == set(dec.transpose().terms)
    assert verify_decomposition(swapped) == (True, 0)
    cdec = monomial_complex_decomposition(b, a)
    assert cdec.target == BinaryForm.monomial(b, a)
    assert verify_decomposition(cdec)[0]


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 7), st.integers(0, 10**6), st.fractions(min_value=-50, max_value=50, max_denominator=9).filter(bool))
def test_scaling_multiplies_alphas(d, seed, lam):
    form = random_form(case_rng(seed, "scale", d), d, bound=30)
    base = complex_rank(form)
    scaled = complex_rank(form.scale(lam))
    assert scaled.rank == base.rank
    if base.witness.exact and scaled.witness.exact:
        assert {(t.form, t.alpha * lam) for t in base.witness.terms} == {(t.form, t.alpha) for t in scaled.witness.terms}
    assert verify_decomposition(base.witness.scaled(lam))[0]


def random_invertible(rng):
    while True:
        m = [random_rational(rng, 20) for _ in range(4)]
        if m[0] * m[3] - m[1] * m[2] != 0:
            return m


def test_rank_invariant_under_substitution():
    for k in range(50):
        rng = case_rng(11, "subst", k)
        d = rng.randint(1, 8)
        form = random_form(rng, d, bound=30)
        moved = form.substitute(*random_invertible(rng))
        assert complex_rank(moved).rank == complex_rank(form).rank


def test_substitution_of_monomial_keeps_rank():
    for k in range(10):
        rng = case_rng(12, "subst-mono", k)
        a = rng.randint(1, 3)
        b = rng.randint(a, 5)
        moved = BinaryForm.monomial(a, b).substitute(*random_invertible(rng))
        assert complex_rank(moved).rank == b + 1


def test_certificate_sampling_small():
    for a, b in monomial_pairs(7):
        for r in range(1, a + b):
            cert = real_lower_bound_certificate(a, b, r)
            for k in range(20):
                op = random_monomial_perp_element(case_rng(5, "perp-unit", a, b, r, k), a, b, r)
                assert cert.admits(op)
                assert not has_distinct_real_factors(op)


def test_real_rank_dominates_complex_rank():
    for a, b in monomial_pairs(12):
        c = monomial_complex_rank(a, b).rank
        r = monomial_real_rank(a, b).rank
        assert (c, r) == (b + 1, a + b)
        assert r >= c
        assert (r == c) == (a == 1)


def test_generic_rank_small_sample():
    for d in range(2, 8):
        hits = sum(complex_rank(random_form(case_rng(2, "generic-unit", d, k), d)).rank == math.ceil((d + 1) / 2) for k in range(20))
        assert hits >= 19


def test_witness_sturm_and_distinctness():
    for a, b in monomial_pairs(8):
        dec = monomial_real_decomposition(a, b)
        roots = [t.form.c1 for t in dec.terms]
        assert len(set(roots)) == a + b
        assert sturm_count_distinct(construct_real_apolar(a, b).dehomogenize()) == a + b
        assert dec.field == REAL and monomial_complex_rank(a, b).witness.field == COMPLEX
