"""Differential action of k[y0, y1] on forms, apolar ideals, and reconstruction.

Forms and operators are both stored in the plain monomial basis, so the
factorial weights of differentiation appear in :func:`apply` and in the
catalecticant matrices rather than in the stored coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Iterator, Optional

import mpmath

from . import linalg
from .algebra import (
    DEFAULT_PRECISION,
    BinaryForm,
    ComplexScalar,
    DiffOp,
    LinearForm,
    UniPoly,
    _falling,
    expand_power,
    is_squarefree,
)
from .decomposition import COMPLEX, REAL, WaringDecomposition, WaringTerm, _check_field
from .errors import InputError, InvariantViolation
from .realroots import sturm_count_distinct

# extra bits carried through root finding and the coefficient solve
GUARD_BITS = 64


def apply(op: DiffOp, form: BinaryForm) -> BinaryForm:
    """``op`` applied to ``form`` by differentiation."""
    e, d = op.degree, form.degree
    if e > d:
        raise InputError(f"operator degree {e} exceeds form degree {d}")
    out = [Fraction(0)] * (d - e + 1)
    for j, o in enumerate(op.coeffs):
        if not o:
            continue
        # y0^(e-j) y1^j sends x0^(d-k) x1^k to x0^(d-k-e+j) x1^(k-j)
        for k in range(j, j + d - e + 1):
            f = form.coeffs[k]
            if f:
                out[k - j] += o * f * _falling(d - k, e - j) * _falling(k, j)
    return BinaryForm(d - e, tuple(out))


def annihilates(op: DiffOp, form: BinaryForm) -> bool:
    if op.degree > form.degree:
        return True
    return apply(op, form).is_zero()


def catalecticant(form: BinaryForm, r: int) -> list[list[Fraction]]:
    """Matrix of ``op -> apply(op, form)`` on degree-``r`` operators.

    Column ``j`` is the image of ``y0^(r-j) y1^j``; row ``m`` is the
    coefficient of ``x0^(d-r-m) x1^m``.
    """
    d = form.degree
    if not 0 <= r <= d:
        raise InputError(f"catalecticant degree {r} outside 0..{d}")
    return [
        [form.coeffs[m + j] * _falling(d - m - j, r - j) * _falling(m + j, j) for j in range(r + 1)]
        for m in range(d - r + 1)
    ]


@dataclass(frozen=True)
class PerpComponent:
    """Basis of the degree-``degree`` piece of the apolar ideal."""

    degree: int
    basis: tuple[DiffOp, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class ApolarPair:
    """Generators ``g1, g2`` of the apolar ideal, ``d1 <= d2``."""

    g1: DiffOp
    g2: DiffOp
    d1: int
    d2: int


def _require_form(form: BinaryForm):
    if form.is_zero():
        raise InputError("the zero form has no Waring rank")


def perp_component(form: BinaryForm, r: int) -> PerpComponent:
    """Kernel of the degree-``r`` catalecticant of ``form``, exactly."""
    _require_form(form)
    d = form.degree
    if not 0 <= r <= d + 1:
        raise InputError(f"degree {r} outside 0..{d + 1}")
    if r == d + 1:
        vectors = linalg.nullspace([], r + 1)
    else:
        vectors = linalg.nullspace(catalecticant(form, r), r + 1)
    return PerpComponent(r, tuple(DiffOp(r, tuple(v)) for v in vectors))


def monomial_perp(a: int, b: int) -> ApolarPair:
    """Generators ``(y0^(a+1), y1^(b+1))`` of the apolar ideal of ``x0^a x1^b``."""
    if a < 0 or b < 0 or a + b == 0:
        raise InputError("need a + b >= 1 and non-negative exponents")
    if a > b:
        raise InputError("monomial_perp expects a <= b; transpose the monomial first")
    return ApolarPair(DiffOp.monomial(a + 1, 0), DiffOp.monomial(0, b + 1), a + 1, b + 1)


def first_perp_degree(form: BinaryForm) -> PerpComponent:
    """Lowest-degree nonzero piece of the apolar ideal."""
    _require_form(form)
    for r in range(form.degree + 2):
        comp = perp_component(form, r)
        if comp.dim:
            return comp
    raise InvariantViolation("apolar ideal has no element of degree <= d + 1")


def multiples(op: DiffOp, r: int) -> list[DiffOp]:
    """Basis ``y0^(r-e-i) y1^i * op`` of the degree-``r`` multiples of ``op``."""
    k = r - op.degree
    return [DiffOp.monomial(k - i, i) * op for i in range(k + 1)] if k >= 0 else []


def apolar_generators(form: BinaryForm) -> ApolarPair:
    """The two generators of the apolar ideal of a nonzero binary form."""
    first = first_perp_degree(form)
    d1 = first.degree
    d2 = form.degree + 2 - d1
    if first.dim >= 2:
        if d1 != d2 or first.dim != 2:
            raise InvariantViolation(f"unexpected perp dimension {first.dim} in degree {d1}")
        return ApolarPair(first.basis[0].normalized(), first.basis[1].normalized(), d1, d2)
    g1 = first.basis[0].normalized()
    span = [m.coeffs for m in multiples(g1, d2)]
    reduced, pivots = linalg.rref(span)
    for cand in perp_component(form, d2).basis:
        if linalg.in_span(span, cand.coeffs):
            continue
        v = list(cand.coeffs)
        for row, p in zip(reduced, pivots):
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return ApolarPair(g1, DiffOp(d2, tuple(v)).normalized(), d1, d2)
    raise InvariantViolation(f"no second generator in degree {d2}")


def is_squarefree_form(op: BinaryForm) -> bool:
    """True iff ``op`` is a product of ``deg op`` pairwise independent linear forms over C."""
    if op.is_zero():
        return False
    f = op.dehomogenize()
    if f.degree < op.degree - 1:
        return False
    return is_squarefree(f)


def combination_sweep(basis) -> Iterator[DiffOp]:
    """Deterministic integer combinations ``sum(t^i * basis[i])`` for t = 0, 1, 2, ...

    Only finitely many ``t`` give a non-squarefree element when the span
    contains a squarefree one, so scanning ``t`` upward terminates.
    """
    for t in count():
        out = basis[0]
        for i, b in enumerate(basis[1:], start=1):
            out = out + b.scale(Fraction(t) ** i)
        yield out


def find_squarefree(basis, budget: int = 256) -> Optional[DiffOp]:
    """First squarefree element of the sweep over ``basis``, or None after ``budget`` tries."""
    if not basis:
        return None
    for n, op in enumerate(combination_sweep(list(basis))):
        if n >= budget:
            return None
        if is_squarefree_form(op):
            return op
    return None


# ---------------------------------------------------------------------------
# reconstruction


def _exact_roots(f: UniPoly, approx) -> Optional[list[Fraction]]:
    """Rational roots of squarefree ``f`` if it splits over Q, guided by ``approx``."""
    ints = f.integer_primitive()
    lead = abs(ints[-1])
    roots = set()
    for z in approx:
        if abs(z.imag) > 0.25 / lead:
            return None
        cand = Fraction(int(mpmath.nint(z.real * lead)), lead)
        if f(cand) != 0:
            return None
        roots.add(cand)
    if len(roots) != f.degree:
        return None
    return sorted(roots)


def _numeric_roots(f: UniPoly, prec: int) -> list:
    with mpmath.workprec(prec):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(f.coeffs)]
        if f.degree == 1:
            return [mpmath.mpc(-coeffs[1] / coeffs[0])]
        roots = mpmath.polyroots(coeffs, maxsteps=400, extraprec=prec)
        return [mpmath.mpc(z) for z in roots]


def decomposition_from_apolar(
    form: BinaryForm,
    op: DiffOp,
    field: str = COMPLEX,
    precision: int = DEFAULT_PRECISION,
) -> WaringDecomposition:
    """Waring decomposition of ``form`` read off a squarefree apolar operator.

    Each finite root ``t`` of ``op(1, t)`` gives the form ``x0 + t*x1``; a
    factor ``y0`` gives ``x1``.  The coefficients solve the linear system
    ``sum(alpha_i * L_i^d) = form``, exactly when every root is rational.
    """
    _check_field(field)
    _require_form(form)
    if op.is_zero():
        raise InputError("zero operator")
    r, d = op.degree, form.degree
    if r > d + 1:
        raise InputError(f"operator degree {r} exceeds d + 1 = {d + 1}")
    if not annihilates(op, form):
        raise InputError("operator does not annihilate the form")
    f = op.dehomogenize()
    if f.degree < r - 1:
        raise InputError("operator has a repeated factor y0")
    if not is_squarefree(f):
        raise InputError("operator is not squarefree")
    if field == REAL and sturm_count_distinct(f) != f.degree:
        raise InputError("operator has non-real roots")
    at_infinity = f.degree == r - 1

    wp = precision + GUARD_BITS
    approx = _numeric_roots(f, wp) if f.degree > 0 else []
    exact = _exact_roots(f, approx) if f.degree > 0 else []

    if exact is not None:
        forms = [LinearForm(1, t) for t in exact]
        if at_infinity:
            forms.append(LinearForm(0, 1))
        cols = [expand_power(L, d).coeffs for L in forms]
        matrix = [[col[j] for col in cols] for j in range(d + 1)]
        alphas = linalg.solve_consistent(matrix, form.coeffs)
        terms = [WaringTerm(a, L, d) for a, L in zip(alphas, forms) if a]
        return WaringDecomposition.build(form, field, terms)

    with mpmath.workprec(wp):
        if field == REAL:
            approx = [mpmath.mpc(z.real) for z in approx]
        points = list(approx)
        cols = [[mpmath.binomial(d, j) * z**j for j in range(d + 1)] for z in points]
        if at_infinity:
            cols.append([mpmath.mpc(int(j == d)) for j in range(d + 1)])
        matrix = [[col[j] for col in cols] for j in range(d + 1)]
        rhs = [mpmath.mpf(c.numerator) / c.denominator for c in form.coeffs]
        sol = linalg.solve_tall_numeric(matrix, rhs)
        res = max(abs(sum(m * x for m, x in zip(row, sol)) - y) for row, y in zip(matrix, rhs))
        scale = max(1, max(abs(c) for c in form.coeffs))
        if res > scale * mpmath.mpf(2) ** (-(precision // 2)):
            raise InvariantViolation(f"apolar linear system inconsistent (residual {mpmath.nstr(res, 5)})")
        forms = [LinearForm(1, ComplexScalar.from_value(z, precision)) for z in points]
        if at_infinity:
            forms.append(LinearForm(0, 1))
        alphas = [ComplexScalar.from_value(sol[i], precision) for i in range(len(forms))]
    terms = [WaringTerm(a, L, d) for a, L in zip(alphas, forms)]
    return WaringDecomposition.build(form, field, terms, precision)
