"""Waring decompositions as data, plus their verification."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import mpmath

from .algebra import (
    BinaryForm,
    ComplexScalar,
    LinearForm,
    Scalar,
    as_mpc,
    expand_power,
    expand_power_numeric,
)
from .errors import InputError

REAL = "real"
COMPLEX = "complex"
FIELDS = (REAL, COMPLEX)

DEFAULT_TOLERANCE = 1e-20

# guard bits for residual evaluation of numeric decompositions
_GUARD = 32


@dataclass(frozen=True)
class WaringTerm:
    """``alpha * form^exponent``."""

    alpha: Scalar
    form: LinearForm
    exponent: int

    def __post_init__(self):
        if not self.alpha:
            raise InputError("Waring term with zero coefficient")

    @property
    def exact(self) -> bool:
        return isinstance(self.alpha, Fraction) and self.form.is_rational

    def __str__(self) -> str:
        return f"({self.alpha})*({self.form})^{self.exponent}"


def _check_field(field: str):
    if field not in FIELDS:
        raise InputError(f"field must be 'real' or 'complex', got {field!r}")


@dataclass(frozen=True)
class WaringDecomposition:
    """``target == sum(alpha_i * L_i^d)`` exactly, or up to ``residual``."""

    target: BinaryForm
    field: str
    terms: tuple[WaringTerm, ...]
    exact: bool
    residual: Union[Fraction, mpmath.mpf]
    precision: Optional[int] = None

    @classmethod
    def build(cls, target: BinaryForm, field: str, terms, precision: Optional[int] = None):
        """Assemble a decomposition and compute its residual."""
        _check_field(field)
        terms = tuple(terms)
        for t in terms:
            if t.exponent != target.degree:
                raise InputError("term exponent differs from target degree")
        exact = all(t.exact for t in terms)
        if not exact and precision is None:
            precision = max(t.alpha.prec if isinstance(t.alpha, ComplexScalar) else t.form.c1.prec for t in terms if not t.exact)
        res = residual(target, terms, precision if not exact else None)
        return cls(target, field, terms, exact, res, None if exact else precision)

    @property
    def rank(self) -> int:
        return len(self.terms)

    def sign_pattern(self) -> Optional[tuple[int, ...]]:
        """Signs of the coefficients for exact real decompositions, else None."""
        if not self.exact:
            return None
        return tuple(1 if t.alpha > 0 else -1 for t in self.terms)

    def transpose(self) -> WaringDecomposition:
        """Decomposition of the target with x0 and x1 swapped.

        Swapping the coordinates of a form and renormalizing rescales it, which is
        absorbed into the coefficient as ``lam^d``.
        """
        terms = []
        for t in self.terms:
            form = t.form.transpose()
            lam = t.form.c1 if form.c0 else t.form.c0
            terms.append(WaringTerm(t.alpha * lam**t.exponent, form, t.exponent))
        return WaringDecomposition.build(self.target.transpose(), self.field, terms, self.precision)

    def scaled(self, lam) -> WaringDecomposition:
        terms = [WaringTerm(t.alpha * lam, t.form, t.exponent) for t in self.terms]
        return WaringDecomposition.build(self.target.scale(lam), self.field, terms, self.precision)

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms) if self.terms else "0"


def residual(target: BinaryForm, terms, precision: Optional[int] = None):
    """Max-norm of ``sum(alpha_i L_i^d) - target``; a Fraction when everything is exact."""
    d = target.degree
    if precision is None:
        acc = list(target.coeffs)
        for t in terms:
            p = expand_power(t.form, d)
            acc = [x - t.alpha * y for x, y in zip(acc, p.coeffs)]
        return max((abs(x) for x in acc), default=Fraction(0))
    wp = precision + _GUARD
    with mpmath.workprec(wp):
        acc = [as_mpc(c, wp) for c in target.coeffs]
        for t in terms:
            p = expand_power_numeric(t.form, d, wp)
            a = as_mpc(t.alpha, wp)
            acc = [x - a * y for x, y in zip(acc, p)]
        return max((abs(x) for x in acc), default=mpmath.mpf(0))


def forms_pairwise_distinct(terms, tol=0) -> bool:
    forms = [t.form for t in terms]
    for i in range(len(forms)):
        for j in range(i):
            f, g = forms[i], forms[j]
            if f.c0 != g.c0:
                continue
            if f.is_rational and g.is_rational:
                if f.c1 == g.c1:
                    return False
            elif abs(as_mpc(f.c1, 128) - as_mpc(g.c1, 128)) <= tol:
                return False
    return True


def verify_decomposition(dec: WaringDecomposition, tolerance: float = DEFAULT_TOLERANCE):
    """Re-expand ``dec`` and compare with its target.

    Returns ``(ok, residual)``.  Exact decompositions must match identically;
    numeric ones must be within ``tolerance`` in max-norm.  Forms must be
    pairwise distinct, and real decompositions must use real data.
    """
    exact = all(t.exact for t in dec.terms)
    if exact:
        res = residual(dec.target, dec.terms)
        ok = res == 0
    else:
        res = residual(dec.target, dec.terms, dec.precision or 128)
        ok = res <= tolerance
    ok = ok and forms_pairwise_distinct(dec.terms, tol=tolerance)
    if dec.field == REAL and not exact:
        ok = ok and all(
            t.form.is_real(tolerance) and (not isinstance(t.alpha, ComplexScalar) or abs(t.alpha.im) <= tolerance)
            for t in dec.terms
        )
    return ok, res
