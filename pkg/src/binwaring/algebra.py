"""Exact scalars, univariate polynomials and binary forms.

Rationals are :class:`fractions.Fraction`, which already keeps lowest terms with a
positive denominator.  Binary forms store plain monomial-basis coefficients: entry
``j`` of a degree ``d`` form is the coefficient of ``x0^(d-j) * x1^j``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

import mpmath

from .errors import InputError

Rational = Fraction

DEFAULT_PRECISION = 128


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction (never via float)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"malformed rational {value!r}") from exc
    raise InputError(f"cannot use {type(value).__name__} as an exact rational")


# ---------------------------------------------------------------------------
# integer polynomial kernels (ascending coefficient lists)


def _integer_primitive(coeffs: Sequence[Fraction]) -> list[int]:
    """Positive multiple of ``coeffs`` with coprime integer entries."""
    den = reduce(math.lcm, (c.denominator for c in coeffs), 1)
    ints = [int(c * den) for c in coeffs]
    g = reduce(math.gcd, ints, 0)
    return [c // g for c in ints] if g > 1 else ints


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _content_free(a: list[int]) -> list[int]:
    g = reduce(math.gcd, a, 0)
    return [c // g for c in a] if g > 1 else a


def _positive_prem(a: list[int], b: list[int]) -> list[int]:
    """Remainder of ``k * a`` by ``b`` for some positive integer ``k``.

    Signs are what a Sturm chain needs, so only positive scalings are allowed.
    The result is made primitive.
    """
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    sb = 1 if lb > 0 else -1
    abs_lb = abs(lb)
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [abs_lb * c for c in a]
        for i, c in enumerate(b):
            a[i + shift] -= sb * la * c
        _trim(a)
        a = _content_free(a)
    return a


def _integer_prs(a: list[int], b: list[int]) -> list[list[int]]:
    """Signed remainder sequence a, b, -rem(a, b), ... with positive rescaling."""
    chain = [a, b]
    while True:
        r = _positive_prem(chain[-2], chain[-1])
        if not r:
            return chain
        chain.append([-c for c in r])


def _integer_derivative(a: list[int]) -> list[int]:
    return _content_free(_trim([i * c for i, c in enumerate(a)][1:]))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial over Q; ``coeffs[j]`` multiplies ``x^j``."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [to_rational(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def x(cls) -> UniPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: UniPoly) -> UniPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(self.coeff(j) + other.coeff(j) for j in range(n)))

    def __neg__(self) -> UniPoly:
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other) -> UniPoly:
        if not isinstance(other, UniPoly):
            c = to_rational(other)
            return UniPoly(tuple(c * a for a in self.coeffs))
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            q = rem[k + other.degree] / lead
            quot[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return UniPoly(tuple(quot)), UniPoly(tuple(rem[: other.degree]))

    def __floordiv__(self, other: UniPoly) -> UniPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: UniPoly) -> UniPoly:
        return divmod(self, other)[1]

    def derivative(self) -> UniPoly:
        return UniPoly(tuple(j * c for j, c in enumerate(self.coeffs))[1:])

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        lead = self.leading
        return UniPoly(tuple(c / lead for c in self.coeffs))

    def integer_primitive(self) -> list[int]:
        """Coprime integer coefficients of a positive multiple of ``self``."""
        return _integer_primitive(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if c:
                mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
                parts.append(_signed_term(c, mono))
        return _join_terms(parts)


def _signed_term(c: Fraction, mono: str) -> tuple[str, str]:
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    if not mono:
        return sign, str(mag)
    if mag == 1:
        return sign, mono
    return sign, f"{mag}*{mono}"


def _join_terms(parts: list[tuple[str, str]]) -> str:
    out = ""
    for k, (sign, body) in enumerate(parts):
        if k == 0:
            out = body if sign == "+" else "-" + body
        else:
            out += f" {sign} {body}"
    return out


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd of two polynomials (zero only if both are zero)."""
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.degree < q.degree:
        p, q = q, p
    chain = _integer_prs(p.integer_primitive(), q.integer_primitive())
    return UniPoly(tuple(chain[-1])).monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors of ``p``."""
    if p.is_zero():
        raise InputError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return UniPoly((1,))
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


def is_squarefree(p: UniPoly) -> bool:
    if p.is_zero():
        raise InputError("squarefree test of the zero polynomial")
    if p.degree <= 1:
        return True
    return poly_gcd(p, p.derivative()).degree == 0


def from_roots(roots: Iterable) -> UniPoly:
    """Monic polynomial with the given root multiset."""
    out = [Fraction(1)]
    for r in roots:
        r = to_rational(r)
        nxt = [Fraction(0)] * (len(out) + 1)
        for j, c in enumerate(out):
            nxt[j + 1] += c
            nxt[j] -= r * c
        out = nxt
    return UniPoly(tuple(out))


def elementary_symmetric_all(values: Sequence) -> list[Fraction]:
    """``[E_0, ..., E_n]`` of ``values``."""
    e = [Fraction(1)]
    for v in values:
        v = to_rational(v)
        e = [Fraction(1)] + [e[k] + v * e[k - 1] for k in range(1, len(e))] + [v * e[-1]]
    return e


def elementary_symmetric(values: Sequence, i: int) -> Fraction:
    """Sum of all ``i``-fold products of ``values``."""
    if not 0 <= i <= len(values):
        raise InputError(f"index {i} outside 0..{len(values)}")
    return elementary_symmetric_all(values)[i]


# ---------------------------------------------------------------------------
# complex numerics


@dataclass(frozen=True)
class ComplexScalar:
    """Complex number with an mpmath-backed real and imaginary part.

    ``prec`` is the working precision in bits; arithmetic runs at the larger of
    the operands' precisions.
    """

    re: mpmath.mpf
    im: mpmath.mpf
    prec: int = DEFAULT_PRECISION

    @classmethod
    def from_value(cls, z, prec: int = DEFAULT_PRECISION) -> ComplexScalar:
        with mpmath.workprec(prec):
            if isinstance(z, Fraction):
                z = mpmath.mpf(z.numerator) / z.denominator
            z = mpmath.mpc(z)
            return cls(+z.real, +z.imag, prec)

    @property
    def value(self) -> mpmath.mpc:
        with mpmath.workprec(self.prec):
            return mpmath.mpc(self.re, self.im)

    def _binary(self, other, op) -> ComplexScalar:
        prec = self.prec
        if isinstance(other, ComplexScalar):
            prec = max(prec, other.prec)
            other = other.value
        elif isinstance(other, Fraction):
            with mpmath.workprec(prec):
                other = mpmath.mpf(other.numerator) / other.denominator
        with mpmath.workprec(prec):
            return ComplexScalar.from_value(op(self.value, other), prec)

    def __add__(self, other):
        return self._binary(other, lambda x, y: x + y)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return self._binary(other, lambda x, y: y - x)

    def __mul__(self, other):
        return self._binary(other, lambda x, y: x * y)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binary(other, lambda x, y: x / y)

    def __rtruediv__(self, other):
        return self._binary(other, lambda x, y: y / x)

    def __pow__(self, n: int):
        with mpmath.workprec(self.prec):
            return ComplexScalar.from_value(self.value**n, self.prec)

    def __neg__(self):
        return ComplexScalar(-self.re, -self.im, self.prec)

    def __abs__(self):
        with mpmath.workprec(self.prec):
            return abs(self.value)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        with mpmath.workprec(self.prec):
            return mpmath.nstr(self.value, 20)


Scalar = Union[Fraction, ComplexScalar]


def as_mpc(value, prec: int):
    """Lift a Fraction or ComplexScalar to an ``mpc`` at ``prec`` bits."""
    with mpmath.workprec(prec):
        if isinstance(value, ComplexScalar):
            return mpmath.mpc(value.re, value.im)
        value = to_rational(value)
        return mpmath.mpc(mpmath.mpf(value.numerator) / value.denominator)


# ---------------------------------------------------------------------------
# binary forms


def _falling(n: int, k: int) -> int:
    """n (n-1) ... (n-k+1)."""
    return math.perm(n, k) if 0 <= k <= n else 0


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form of degree ``degree`` in x0, x1.

    ``coeffs[j]`` is the coefficient of ``x0^(d-j) x1^j``.  The zero form is a
    legal value; rank operations reject it.
    """

    degree: int
    coeffs: tuple[Fraction, ...] = field(default=())

    _names = ("x0", "x1")

    def __post_init__(self):
        if self.degree < 0:
            raise InputError("negative degree")
        cs = tuple(to_rational(c) for c in self.coeffs) if self.coeffs else (Fraction(0),) * (self.degree + 1)
        if len(cs) != self.degree + 1:
            raise InputError(f"degree {self.degree} form needs {self.degree + 1} coefficients, got {len(cs)}")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def monomial(cls, a: int, b: int, coeff=1):
        """``coeff * v0^a * v1^b``."""
        if a < 0 or b < 0:
            raise InputError("negative exponent")
        cs = [0] * (a + b + 1)
        cs[b] = coeff
        return cls(a + b, tuple(cs))

    @classmethod
    def zero(cls, degree: int):
        return cls(degree)

    @classmethod
    def from_dehomogenized(cls, p: UniPoly, degree: int):
        """Homogenize ``p(t)`` so that ``t^j`` becomes ``v0^(d-j) v1^j``."""
        if p.degree > degree:
            raise InputError("polynomial degree exceeds form degree")
        return cls(degree, tuple(p.coeff(j) for j in range(degree + 1)))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def dehomogenize(self) -> UniPoly:
        """``F(1, t)``; the degree drops by the multiplicity of the factor v0."""
        return UniPoly(self.coeffs)

    def _same(self, other):
        if type(self) is not type(other) or self.degree != other.degree:
            raise InputError("forms of different type or degree")

    def __add__(self, other):
        self._same(other)
        return type(self)(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return type(self)(self.degree, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, lam):
        lam = to_rational(lam)
        return type(self)(self.degree, tuple(lam * c for c in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, BinaryForm):
            return self.scale(other)
        if type(self) is not type(other):
            raise InputError("cannot multiply a form by an operator")
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return type(self)(self.degree + other.degree, tuple(out))

    def __pow__(self, n: int):
        out = type(self)(0, (1,))
        for _ in range(n):
            out = out * self
        return out

    def transpose(self):
        """Swap the two variables."""
        return type(self)(self.degree, tuple(reversed(self.coeffs)))

    def substitute(self, m00, m01, m10, m11):
        """Linear change of variables v0 -> m00 v0 + m01 v1, v1 -> m10 v0 + m11 v1."""
        cls = type(self)
        l0 = cls(1, (m00, m01))
        l1 = cls(1, (m10, m11))
        d = self.degree
        out = cls.zero(d)
        for j, c in enumerate(self.coeffs):
            if c:
                out = out + (l0 ** (d - j) * l1**j).scale(c)
        return out

    def normalized(self):
        """Scale so the first nonzero coefficient is 1 (zero stays zero)."""
        for c in self.coeffs:
            if c:
                return self.scale(1 / c)
        return self

    def __str__(self) -> str:
        v0, v1 = self._names
        d = self.degree
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            factors = []
            if d - j:
                factors.append(v0 if d - j == 1 else f"{v0}^{d - j}")
            if j:
                factors.append(v1 if j == 1 else f"{v1}^{j}")
            parts.append(_signed_term(c, "*".join(factors)))
        return _join_terms(parts) if parts else "0"


class DiffOp(BinaryForm):
    """Element of k[y0, y1] acting on forms by y0 = d/dx0, y1 = d/dx1."""

    _names = ("y0", "y1")


@dataclass(frozen=True)
class LinearForm:
    """``c0*x0 + c1*x1``, normalized so the first nonzero coordinate is 1."""

    c0: Scalar
    c1: Scalar

    def __post_init__(self):
        c0, c1 = self.c0, self.c1
        if not isinstance(c0, ComplexScalar):
            c0 = to_rational(c0)
        if not isinstance(c1, ComplexScalar):
            c1 = to_rational(c1)
        if not c0 and not c1:
            raise InputError("the zero linear form")
        if c0:
            if c1 and c0 != 1:
                c1 = c1 / c0
            c0 = Fraction(1)
        else:
            c0, c1 = Fraction(0), Fraction(1)
        if isinstance(c1, ComplexScalar) and not c1:
            c1 = Fraction(0)
        object.__setattr__(self, "c0", c0)
        object.__setattr__(self, "c1", c1)

    @property
    def is_rational(self) -> bool:
        return not isinstance(self.c1, ComplexScalar)

    def is_real(self, tol=0) -> bool:
        if self.is_rational:
            return True
        return abs(self.c1.im) <= tol

    def transpose(self) -> LinearForm:
        return LinearForm(self.c1, self.c0)

    def __str__(self) -> str:
        if not self.c0:
            return "x1"
        if not self.c1:
            return "x0"
        if self.is_rational:
            c = self.c1
            return f"x0 {'-' if c < 0 else '+'} {'' if abs(c) == 1 else str(abs(c)) + '*'}x1"
        return f"x0 + ({self.c1})*x1"


def expand_power(form: LinearForm, d: int) -> BinaryForm:
    """Coefficients of ``form^d``: entry j is C(d, j) c0^(d-j) c1^j."""
    if d < 0:
        raise InputError("negative exponent")
    if not form.is_rational:
        raise InputError("expand_power needs a rational form; use expand_power_numeric")
    c0, c1 = form.c0, form.c1
    return BinaryForm(d, tuple(math.comb(d, j) * c0 ** (d - j) * c1**j for j in range(d + 1)))


def expand_power_numeric(form: LinearForm, d: int, prec: int) -> list:
    """``form^d`` as a list of ``mpc`` coefficients at ``prec`` bits."""
    with mpmath.workprec(prec):
        c0 = as_mpc(form.c0, prec)
        c1 = as_mpc(form.c1, prec)
        return [math.comb(d, j) * c0 ** (d - j) * c1**j for j in range(d + 1)]
