"""Waring ranks of binary forms and of monomials x0^a x1^b.

Complex rank of an arbitrary form follows Sylvester's algorithm on the two
generators of the apolar ideal.  For monomials the complex rank is ``b + 1``
(``a <= b``) and the real rank is ``a + b``; both come with explicit
decompositions, and the real case with coefficient-gap certificates ruling out
every shorter real expansion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import mpmath

from .algebra import (
    DEFAULT_PRECISION,
    BinaryForm,
    ComplexScalar,
    DiffOp,
    LinearForm,
    UniPoly,
    from_roots,
)
from .apolarity import (
    ApolarPair,
    apolar_generators,
    apply,
    decomposition_from_apolar,
    find_squarefree,
    first_perp_degree,
    is_squarefree_form,
    monomial_perp,
    perp_component,
)
from .decomposition import (
    COMPLEX,
    REAL,
    WaringDecomposition,
    WaringTerm,
    verify_decomposition,
)
from .errors import InputError, InvariantViolation
from .realroots import has_distinct_real_factors, zero_coefficient_roots

SWEEP_BUDGET = 256


@dataclass(frozen=True)
class LowerBoundCertificate:
    """No real expansion of ``x0^a x1^b`` with ``r`` terms exists.

    Every degree-``r`` element of the apolar ideal has zero coefficient at
    ``y0^p y1^(r-p)`` for ``gap_start <= p <= gap_end``.  Two consecutive zero
    coefficients rule out ``r`` distinct real roots.
    """

    a: int
    b: int
    r: int
    gap_start: int
    gap_end: int

    @property
    def reason(self) -> str:
        """``empty``, ``repeated-factor`` (gap reaches an end) or ``coefficient-gap``."""
        if self.gap_start == 0 and self.gap_end == self.r:
            return "empty"
        if self.gap_start == 0 or self.gap_end == self.r:
            return "repeated-factor"
        return "coefficient-gap"

    def forced_zero_indices(self) -> list[int]:
        """The gap as stored coefficient indices (index j multiplies y0^(r-j) y1^j)."""
        return sorted(self.r - p for p in range(self.gap_start, self.gap_end + 1))

    def admits(self, op: DiffOp) -> bool:
        """True if ``op`` has the forced zeros, i.e. the certificate applies to it."""
        return op.degree == self.r and all(op.coeffs[j] == 0 for j in self.forced_zero_indices())


@dataclass(frozen=True)
class RankResult:
    rank: int
    field: str
    witness: WaringDecomposition
    evidence: tuple = ()
    note: str = ""


@dataclass(frozen=True)
class RealRankBounds:
    """Real rank lies in ``[lower, upper]``; ``upper`` is None when unknown."""

    lower: int
    upper: Optional[int]
    witness: Optional[WaringDecomposition] = None


def _require_form(form: BinaryForm):
    if form.is_zero():
        raise InputError("the zero form has no Waring rank")


def _check_rank_witness(result: RankResult) -> RankResult:
    if result.witness.rank != result.rank:
        raise InvariantViolation(f"witness has {result.witness.rank} terms, rank is {result.rank}")
    return result


def complex_rank(form: BinaryForm, precision: int = DEFAULT_PRECISION) -> RankResult:
    """Complex Waring rank with a witness decomposition (Sylvester's algorithm)."""
    _require_form(form)
    first = first_perp_degree(form)
    gens = apolar_generators(form)
    d1, d2 = gens.d1, gens.d2
    if first.dim == 1 and is_squarefree_form(first.basis[0]):
        rank, op = d1, first.basis[0]
    elif first.dim == 1:
        rank = d2
        op = find_squarefree(perp_component(form, d2).basis, SWEEP_BUDGET)
    else:
        rank = d1
        op = find_squarefree(first.basis, SWEEP_BUDGET)
    if op is None:
        raise InvariantViolation(f"no squarefree apolar element of degree {rank} within budget")
    witness = decomposition_from_apolar(form, op, COMPLEX, precision)
    return _check_rank_witness(RankResult(rank, COMPLEX, witness, (gens,)))


def _power_of_variable(a: int, b: int, field: str) -> RankResult:
    target = BinaryForm.monomial(a, b)
    form = LinearForm(1, 0) if b == 0 else LinearForm(0, 1)
    witness = WaringDecomposition.build(target, field, [WaringTerm(Fraction(1), form, a + b)])
    return RankResult(1, field, witness, (), "power of a variable")


def _check_monomial(a: int, b: int):
    if a < 0 or b < 0:
        raise InputError("exponents must be non-negative")
    if a + b == 0:
        raise InputError("the constant monomial has degree 0")


def monomial_complex_decomposition(a: int, b: int, precision: int = DEFAULT_PRECISION) -> WaringDecomposition:
    """``x0^a x1^b`` as ``b + 1`` powers of ``x0 + zeta^k x1``, ``zeta = exp(2 pi i/(b+1))``.

    The coefficient of the k-th power is ``zeta^(-b k) / ((b+1) C(a+b, b))``.
    Terms where ``zeta^k`` is real are kept exact.
    """
    if not 0 < a <= b:
        if 0 < b < a:
            return monomial_complex_decomposition(b, a, precision).transpose()
        raise InputError("need 0 < a <= b")
    n, d = b + 1, a + b
    scale = Fraction(1, n * math.comb(d, b))
    terms = []
    wp = precision + 32
    with mpmath.workprec(wp):
        for k in range(n):
            if k == 0 or 2 * k == n:
                sign = 1 if k == 0 else -1
                terms.append(WaringTerm(scale * sign**b, LinearForm(1, sign), d))
                continue
            zeta_k = mpmath.expjpi(mpmath.mpf(2 * k) / n)
            alpha = mpmath.expjpi(mpmath.mpf(-2 * b * k) / n) * (mpmath.mpf(scale.numerator) / scale.denominator)
            terms.append(
                WaringTerm(
                    ComplexScalar.from_value(alpha, precision),
                    LinearForm(1, ComplexScalar.from_value(zeta_k, precision)),
                    d,
                )
            )
    exact = all(t.exact for t in terms)
    return WaringDecomposition.build(BinaryForm.monomial(a, b), COMPLEX, terms, None if exact else precision)


def monomial_complex_rank(a: int, b: int, precision: int = DEFAULT_PRECISION) -> RankResult:
    """Complex rank of ``x0^a x1^b``: ``max(a, b) + 1``, or 1 for a power of a variable.

    Shorter expansions are impossible because below degree ``b + 1`` the apolar
    ideal consists of multiples of ``y0^(a+1)``, which all have a repeated factor.
    """
    _check_monomial(a, b)
    if a == 0 or b == 0:
        return _power_of_variable(a, b, COMPLEX)
    lo, hi = min(a, b), max(a, b)
    witness = monomial_complex_decomposition(a, b, precision)
    note = "" if a <= b else "computed for the transposed monomial"
    return _check_rank_witness(RankResult(hi + 1, COMPLEX, witness, (monomial_perp(lo, hi),), note))


def construct_real_apolar(a: int, b: int, seed_roots: Optional[Sequence] = None) -> DiffOp:
    """A product of ``a + b`` distinct real linear forms annihilating ``x0^a x1^b``.

    Its dehomogenization has positive roots ``seed_roots`` (default 1..a+b-1)
    plus one negative root chosen so that the ``y0^a y1^b`` coefficient, the only
    monomial missing from the apolar ideal in degree ``a + b``, vanishes.
    """
    if not 0 < a <= b:
        raise InputError("need 0 < a <= b")
    d = a + b
    roots = zero_coefficient_roots(d, b, seed_roots)
    op = DiffOp.from_dehomogenized(from_roots(roots), d)
    if op.coeffs[b] != 0 or not apply(op, BinaryForm.monomial(a, b)).is_zero():
        raise InvariantViolation("constructed operator is not apolar to the monomial")
    return op


def monomial_real_decomposition(a: int, b: int, seed_roots: Optional[Sequence] = None) -> WaringDecomposition:
    """Exact expansion of ``x0^a x1^b`` with ``a + b`` real terms."""
    if not (a > 0 and b > 0):
        raise InputError("need a, b > 0")
    if a > b:
        return monomial_real_decomposition(b, a, seed_roots).transpose()
    op = construct_real_apolar(a, b, seed_roots)
    dec = decomposition_from_apolar(BinaryForm.monomial(a, b), op, REAL)
    if not dec.exact or dec.residual != 0 or dec.rank != a + b:
        raise InvariantViolation("real monomial decomposition is not exact")
    return dec


def real_lower_bound_certificate(a: int, b: int, r: int) -> LowerBoundCertificate:
    """Certificate that ``x0^a x1^b`` has no real expansion with ``r`` terms."""
    if not (a > 0 and b > 0):
        raise InputError("need a, b > 0")
    if r >= a + b:
        raise InputError(f"no certificate for r = {r} >= a + b = {a + b}: a decomposition exists")
    if r < 1:
        raise InputError("need r >= 1")
    cert = LowerBoundCertificate(a, b, r, max(0, r - b), min(r, a))
    if cert.gap_end - cert.gap_start < 1:
        raise InvariantViolation("certificate gap shorter than two coefficients")
    return cert


def monomial_real_rank(a: int, b: int) -> RankResult:
    """Real rank of ``x0^a x1^b``: ``a + b`` unless it is a power of a variable."""
    _check_monomial(a, b)
    if a == 0 or b == 0:
        return _power_of_variable(a, b, REAL)
    witness = monomial_real_decomposition(a, b)
    certs = tuple(real_lower_bound_certificate(a, b, r) for r in range(1, a + b))
    return _check_rank_witness(RankResult(a + b, REAL, witness, certs))


def monomial_perp_basis(a: int, b: int, r: int) -> list[int]:
    """Stored indices j (monomial y0^(r-j) y1^j) spanning degree ``r`` of the monomial's apolar ideal."""
    return [j for j in range(r + 1) if r - j >= a + 1 or j >= b + 1]


def real_apolar_top_degree(form: BinaryForm, seed_roots: Optional[Sequence] = None) -> Optional[DiffOp]:
    """A product of ``d`` distinct real linear forms apolar to ``form``, or None.

    Same idea as :func:`construct_real_apolar`: fix ``d - 1`` positive roots and
    solve the single linear apolarity condition in degree ``d`` for the last one.
    """
    _require_form(form)
    d = form.degree
    if d == 0:
        return None
    seeds = [Fraction(s) for s in (seed_roots if seed_roots is not None else range(1, d))]
    g = from_roots(seeds)

    def pairing(h: UniPoly) -> Fraction:
        return apply(DiffOp.from_dehomogenized(h, d), form).coeffs[0]

    lg = pairing(g)
    if lg == 0:
        op = DiffOp.from_dehomogenized(g, d)
    else:
        last = pairing(g * UniPoly.x()) / lg
        if last in seeds:
            return None
        op = DiffOp.from_dehomogenized(g * UniPoly((-last, 1)), d)
    return op if has_distinct_real_factors(op) else None


def real_rank_bounds(form: BinaryForm, precision: int = DEFAULT_PRECISION) -> RealRankBounds:
    """Interval for the real rank of a general binary form.

    The lower end is the complex rank.  If the complex witness is already real it
    is the real rank; otherwise the upper end is ``d`` when a totally real apolar
    element of degree ``d`` is found, and left open if not.
    """
    crank = complex_rank(form, precision)
    (op_pair,) = crank.evidence
    first = first_perp_degree(form)
    for candidate in _real_candidates(form, crank.rank, first, op_pair):
        if has_distinct_real_factors(candidate):
            witness = decomposition_from_apolar(form, candidate, REAL, precision)
            return RealRankBounds(crank.rank, crank.rank, witness)
    d = form.degree
    for shift in range(4):
        op = real_apolar_top_degree(form, [Fraction(k + shift) for k in range(1, d)])
        if op is not None:
            witness = decomposition_from_apolar(form, op, REAL, precision)
            return RealRankBounds(crank.rank, max(crank.rank, witness.rank), witness)
    return RealRankBounds(crank.rank, None)


def _real_candidates(form, rank, first, pair: ApolarPair):
    if rank == first.degree:
        yield from first.basis
    elif first.dim == 1 and rank == pair.d2:
        yield pair.g2


__all__ = [
    "LowerBoundCertificate",
    "RankResult",
    "RealRankBounds",
    "complex_rank",
    "construct_real_apolar",
    "monomial_complex_decomposition",
    "monomial_complex_rank",
    "monomial_real_decomposition",
    "monomial_real_rank",
    "real_lower_bound_certificate",
    "real_rank_bounds",
    "verify_decomposition",
]
