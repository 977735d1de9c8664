"""Deterministic random objects for property suites and experiments.

Every object is drawn from its own ``random.Random`` seeded by a string built
from the run seed and a case label, so reruns are bit-identical and cases can be
evaluated in any order.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import BinaryForm, DiffOp, UniPoly


def case_rng(seed: int, *keys) -> random.Random:
    return random.Random("binwaring:" + ":".join(str(k) for k in (seed, *keys)))


def random_rational(rng: random.Random, bound: int = 1000, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if q or not nonzero:
            return q


def random_form(rng: random.Random, d: int, bound: int = 1000) -> BinaryForm:
    """Form of degree ``d`` with independent random rational coefficients (never zero)."""
    while True:
        form = BinaryForm(d, tuple(random_rational(rng, bound) for _ in range(d + 1)))
        if not form.is_zero():
            return form


def random_monomial_perp_element(rng: random.Random, a: int, b: int, r: int, bound: int = 1000) -> DiffOp:
    """Random element of degree ``r`` of the apolar ideal of ``x0^a x1^b``.

    Coefficients are random on the monomials divisible by ``y0^(a+1)`` or
    ``y1^(b+1)`` and zero elsewhere; the result is the zero operator when that
    space is trivial.
    """
    coeffs = [
        random_rational(rng, bound, nonzero=True) if (r - j >= a + 1 or j >= b + 1) else Fraction(0)
        for j in range(r + 1)
    ]
    return DiffOp(r, tuple(coeffs))


def random_gap_polynomial(rng: random.Random, d: int, bound: int = 1000) -> UniPoly:
    """Degree ``d`` polynomial with ``c_i == c_(i-1) == 0`` for a random ``2 <= i <= d - 1``."""
    if d < 3:
        raise ValueError("an interior gap needs degree at least 3")
    i = rng.randint(2, d - 1)
    coeffs = [random_rational(rng, bound) for _ in range(d + 1)]
    coeffs[i] = coeffs[i - 1] = Fraction(0)
    coeffs[d] = random_rational(rng, bound, nonzero=True)
    return UniPoly(tuple(coeffs))
