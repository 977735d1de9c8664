"""Exact real-root counting: Descartes' rule, Sturm chains, coefficient gaps.

Nothing here approximates a root.  Sturm chains are built over the integers with
positive rescaling only, which keeps every sign (and hence every count) exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import (
    BinaryForm,
    UniPoly,
    _integer_derivative,
    _integer_prs,
    elementary_symmetric_all,
    from_roots,
    is_squarefree,
    to_rational,
)
from .errors import InputError, InvariantViolation


def _require_nonzero(p: UniPoly):
    if p.is_zero():
        raise InputError("zero polynomial")


@dataclass(frozen=True)
class SignVariationReport:
    variations: int
    zero_coefficient_indices: tuple[int, ...]


def sign_variations(p: UniPoly) -> SignVariationReport:
    """Sign changes in the coefficient sequence, skipping zeros."""
    _require_nonzero(p)
    signs = [c > 0 for c in reversed(p.coeffs) if c]
    changes = sum(1 for s, t in zip(signs, signs[1:]) if s != t)
    zeros = tuple(j for j, c in enumerate(p.coeffs) if c == 0)
    return SignVariationReport(changes, zeros)


def descartes_positive_bound(p: UniPoly) -> tuple[int, str]:
    """Descartes bound on positive roots (with multiplicity) and its parity."""
    v = sign_variations(p).variations
    return v, "even" if v % 2 == 0 else "odd"


def _variations(signs: Sequence[int]) -> int:
    s = [x for x in signs if x]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sturm_int_chain(p: UniPoly) -> list[list[int]]:
    a = p.integer_primitive()
    if len(a) <= 1:
        return [a]
    return _integer_prs(a, _integer_derivative(a))


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    """Sturm chain p, p', -rem, ... with each entry rescaled by a positive constant."""
    _require_nonzero(p)
    return [UniPoly(tuple(c)) for c in _sturm_int_chain(p)]


def sturm_count_distinct(p: UniPoly) -> int:
    """Number of distinct real roots of ``p``."""
    _require_nonzero(p)
    chain = _sturm_int_chain(p)
    at_pos = [_sign(q[-1]) for q in chain]
    at_neg = [_sign(q[-1]) * (-1) ** (len(q) - 1) for q in chain]
    return _variations(at_neg) - _variations(at_pos)


def is_totally_real_distinct(p: UniPoly) -> bool:
    """True iff ``p`` has ``deg p`` distinct real roots."""
    _require_nonzero(p)
    return is_squarefree(p) and sturm_count_distinct(p) == p.degree


@dataclass(frozen=True)
class GapCertificate:
    """Index ``i`` with ``c_i == c_(i-1) == 0``."""

    i: int


def gap_certificate(p: UniPoly, degree: Optional[int] = None) -> Optional[GapCertificate]:
    """Smallest ``1 <= i <= d`` with two consecutive zero coefficients.

    ``degree`` defaults to ``deg p``; pass the ambient degree to scan a
    dehomogenization whose top coefficients vanished.
    """
    _require_nonzero(p)
    d = p.degree if degree is None else degree
    if d < p.degree:
        raise InputError("ambient degree below polynomial degree")
    for i in range(1, d + 1):
        if p.coeff(i) == 0 and p.coeff(i - 1) == 0:
            return GapCertificate(i)
    return None


def extract_rational_roots(p: UniPoly) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicity, sorted by root."""
    from sympy import divisors

    _require_nonzero(p)
    found: dict[Fraction, int] = {}
    q = p
    zero_mult = 0
    while q.coeff(0) == 0 and q.degree > 0:
        q = UniPoly(q.coeffs[1:])
        zero_mult += 1
    if zero_mult:
        found[Fraction(0)] = zero_mult
    while q.degree > 0:
        ints = q.integer_primitive()
        hit = None
        for num in divisors(abs(ints[0])):
            for den in divisors(abs(ints[-1])):
                for r in (Fraction(num, den), Fraction(-num, den)):
                    if q(r) == 0:
                        hit = r
                        break
                if hit is not None:
                    break
            if hit is not None:
                break
        if hit is None:
            break
        lin = UniPoly((-hit, 1))
        while q.degree > 0 and q(hit) == 0:
            q = q // lin
            found[hit] = found.get(hit, 0) + 1
    return sorted(found.items())


def zero_coefficient_roots(d: int, i: int, seeds: Optional[Sequence] = None) -> list[Fraction]:
    """``d`` distinct real roots whose monic product has zero ``x^i`` coefficient.

    The first ``d - 1`` roots are the positive ``seeds`` (default 1..d-1); the
    last one solves the single linear condition E_(d-i) = 0 and is never positive.
    """
    if d < 1 or not 0 <= i < d:
        raise InputError(f"need 0 <= i < d, got d={d}, i={i}")
    if seeds is None:
        seeds = list(range(1, d))
    seeds = [to_rational(s) for s in seeds]
    if len(seeds) != d - 1:
        raise InputError(f"need {d - 1} seed roots, got {len(seeds)}")
    if len(set(seeds)) != len(seeds) or any(s <= 0 for s in seeds):
        raise InputError("seed roots must be distinct and positive")
    k = d - i
    e = elementary_symmetric_all(seeds)
    top = e[k] if k < len(e) else Fraction(0)
    if e[k - 1] == 0:
        raise InvariantViolation("elementary symmetric value of positive seeds vanished")
    last = -top / e[k - 1]
    return seeds + [last]


def real_rooted_with_zero_coefficient(d: int, i: int, seeds: Optional[Sequence] = None) -> UniPoly:
    """Degree ``d`` polynomial with ``d`` distinct real roots and ``c_i == 0``."""
    return from_roots(zero_coefficient_roots(d, i, seeds))


def has_distinct_real_factors(form: BinaryForm) -> bool:
    """True iff ``form`` is a product of ``deg`` pairwise independent real linear forms.

    A vanishing top coefficient is a factor of the first variable, i.e. a root
    at infinity of the dehomogenization; at most one is allowed.
    """
    if form.is_zero():
        return False
    f = form.dehomogenize()
    if f.degree < form.degree - 1:
        return False
    return is_totally_real_distinct(f)
