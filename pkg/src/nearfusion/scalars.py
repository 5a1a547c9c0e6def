"""Exact scalars: real quadratic fields, cyclotomic fields and rational angles.

``QuadraticValue`` holds ``a + b*sqrt(D)`` with ``D`` squarefree, ``CycloValue``
holds a polynomial in ``zeta_N`` reduced modulo the ``N``-th cyclotomic
polynomial, and ``RationalAngle`` is a root of unity ``exp(2*pi*i*t)`` stored
as ``t`` in ``[0, 1)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import Poly, QQ, cyclotomic_poly, symbols, totient
from sympy.functions.combinatorial.numbers import kronecker_symbol
from sympy.ntheory import factorint

_X = symbols("x")


class MixedFieldError(ValueError):
    """Arithmetic between quadratic values living in different fields."""


class ConductorMismatch(ValueError):
    """A quadratic irrationality does not lie in the requested cyclotomic field."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def squarefree_part(n: int) -> tuple[int, int]:
    """Write ``n = s**2 * m`` with ``m`` squarefree; return ``(s, m)``."""
    if n <= 0:
        raise ValueError("squarefree_part needs a positive integer")
    s, m = 1, 1
    for p, e in factorint(n).items():
        s *= p ** (e // 2)
        if e % 2:
            m *= p
    return s, m


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class QuadraticValue:
    """The real number ``a + b*sqrt(D)``.

    The constructor canonicalizes: square factors of ``D`` are pulled into
    ``b`` and a rational value always has ``b == 0`` and ``D == 1``.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    D: int = 1

    def __post_init__(self):
        a, b, D = _frac(self.a), _frac(self.b), int(self.D)
        if D < 1:
            raise ValueError(f"D must be a positive integer, got {D}")
        s, m = squarefree_part(D)
        b *= s
        if m == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            m = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "D", m)

    # construction helpers

    @classmethod
    def coerce(cls, x) -> QuadraticValue:
        if isinstance(x, QuadraticValue):
            return x
        return cls(_frac(x))

    @classmethod
    def sqrt(cls, n) -> QuadraticValue:
        """Exact square root of a nonnegative rational."""
        n = _frac(n)
        if n < 0:
            raise ValueError("sqrt of a negative rational is not real")
        if n == 0:
            return cls(0)
        # sqrt(p/q) = sqrt(p*q)/q
        return cls(0, Fraction(1, n.denominator), n.numerator * n.denominator)

    # predicates

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def is_algebraic_integer(self) -> bool:
        tr = 2 * self.a
        return tr.denominator == 1 and self.norm().denominator == 1

    def conductor(self) -> int:
        """Conductor of ``Q(sqrt(D))`` (1 for rationals)."""
        if self.D == 1:
            return 1
        return self.D if self.D % 4 == 1 else 4 * self.D

    # arithmetic

    def _field(self, other: QuadraticValue) -> int:
        if self.b == 0:
            return other.D
        if other.b == 0 or other.D == self.D:
            return self.D
        raise MixedFieldError(f"cannot combine Q(sqrt({self.D})) and Q(sqrt({other.D}))")

    def __add__(self, other):
        try:
            other = QuadraticValue.coerce(other)
        except TypeError:
            return NotImplemented
        D = self._field(other)
        return QuadraticValue(self.a + other.a, self.b + other.b, D)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticValue(-self.a, -self.b, self.D)

    def __sub__(self, other):
        try:
            other = QuadraticValue.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QuadraticValue.coerce(other)
        except TypeError:
            return NotImplemented
        D = self._field(other)
        a = self.a * other.a + D * self.b * other.b
        b = self.a * other.b + self.b * other.a
        return QuadraticValue(a, b, D)

    __rmul__ = __mul__

    def inverse(self) -> QuadraticValue:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        c = self.conjugate()
        return QuadraticValue(c.a / n, c.b / n, self.D)

    def __truediv__(self, other):
        try:
            other = QuadraticValue.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadraticValue.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out, base = QuadraticValue(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> QuadraticValue:
        return QuadraticValue(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        return self.a * self.a - self.D * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    # ordering, exact through sign analysis

    def sign(self) -> int:
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: |a| vs |b|sqrt(D)
        return sa * _sign(self.norm())

    def _cmp(self, other) -> int:
        return (self - QuadraticValue.coerce(other)).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, QuadraticValue):
            return NotImplemented
        return (self.a, self.b, self.D) == (other.a, other.b, other.D)

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.D)

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        rad = f"sqrt({self.D})" if self.b == 1 else f"{self.b}*sqrt({self.D})"
        if self.b == -1:
            rad = f"-sqrt({self.D})"
        if self.a == 0:
            return rad
        if rad.startswith("-"):
            return f"{self.a} - {rad[1:]}"
        return f"{self.a} + {rad}"

    def __repr__(self):
        return f"QuadraticValue({self})"

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "D": self.D}

    @classmethod
    def from_json(cls, data) -> QuadraticValue:
        if isinstance(data, (int, str)):
            return cls(_frac(data))
        return cls(Fraction(str(data["a"])), Fraction(str(data.get("b", "0"))), int(data.get("D", 1)))


def largest_root_quadratic(b: int, c: int) -> QuadraticValue:
    """Larger real root of ``x**2 - b*x - c``."""
    if c < 1 or b < 0:
        raise ValueError("largest_root_quadratic needs b >= 0 and c >= 1")
    disc = b * b + 4 * c
    s, m = squarefree_part(disc)
    return QuadraticValue(Fraction(b, 2), Fraction(s, 2), m)


def galois_conjugate(x: QuadraticValue) -> QuadraticValue:
    return x.conjugate()


def algebraic_norm(x: QuadraticValue) -> Fraction:
    """Signed norm ``a**2 - D*b**2``; use :func:`absolute_norm` for the magnitude."""
    return x.norm()


def absolute_norm(x: QuadraticValue) -> Fraction:
    return abs(x.norm())


# ---------------------------------------------------------------- cyclotomic


@lru_cache(maxsize=None)
def cyclotomic_coeffs(N: int) -> tuple[int, ...]:
    """Coefficients of the N-th cyclotomic polynomial, constant term first."""
    coeffs = cyclotomic_poly(N, _X, polys=True).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


@lru_cache(maxsize=None)
def euler_phi(N: int) -> int:
    return int(totient(N))


def _reduce(poly: list[Fraction], N: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_coeffs(N)
    deg = len(phi) - 1
    poly = list(poly)
    for top in range(len(poly) - 1, deg - 1, -1):
        c = poly[top]
        if c:
            shift = top - deg
            for i, p in enumerate(phi):
                poly[shift + i] -= c * p
    poly = poly[:deg] + [Fraction(0)] * max(0, deg - len(poly))
    return tuple(poly)


@dataclass(frozen=True, eq=False)
class CycloValue:
    """Element of ``Q(zeta_N)`` in the power basis ``1, zeta, ..., zeta**(phi(N)-1)``.

    Values with different conductors are lifted to the lcm before arithmetic
    or comparison, so ``zeta_4`` and ``zeta_8**2`` compare equal.
    """

    N: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(_frac(c) for c in self.coeffs)
        if len(coeffs) != euler_phi(self.N):
            coeffs = _reduce(list(coeffs), self.N)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, N: int) -> CycloValue:
        return cls(N, (Fraction(0),) * euler_phi(N))

    @classmethod
    def constant(cls, c, N: int = 1) -> CycloValue:
        return cls(N, (_frac(c),) + (Fraction(0),) * (euler_phi(N) - 1))

    @classmethod
    def zeta_power(cls, j: int, N: int) -> CycloValue:
        j %= N
        poly = [Fraction(0)] * (j + 1)
        poly[j] = Fraction(1)
        return cls(N, _reduce(poly, N))

    def lift(self, M: int) -> CycloValue:
        """Image in ``Q(zeta_M)`` for a multiple ``M`` of ``N``."""
        if M % self.N:
            raise ConductorMismatch(f"Q(zeta_{self.N}) is not contained in Q(zeta_{M})")
        if M == self.N:
            return self
        step = M // self.N
        poly = [Fraction(0)] * (step * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            poly[i * step] = c
        return CycloValue(M, _reduce(poly, M))

    def _align(self, other) -> tuple[CycloValue, CycloValue]:
        if not isinstance(other, CycloValue):
            other = CycloValue.constant(other, self.N)
        M = math.lcm(self.N, other.N)
        return self.lift(M), other.lift(M)

    def __add__(self, other):
        x, y = self._align(other)
        return CycloValue(x.N, tuple(p + q for p, q in zip(x.coeffs, y.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloValue(self.N, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        x, y = self._align(other)
        return x + (-y)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        x, y = self._align(other)
        prod = [Fraction(0)] * (len(x.coeffs) + len(y.coeffs) - 1)
        for i, p in enumerate(x.coeffs):
            if p:
                for j, q in enumerate(y.coeffs):
                    if q:
                        prod[i + j] += p * q
        return CycloValue(x.N, _reduce(prod, x.N))

    __rmul__ = __mul__

    def inverse(self) -> CycloValue:
        if not any(self.coeffs):
            raise ZeroDivisionError("inverse of zero")
        phi = Poly(list(reversed(cyclotomic_coeffs(self.N))), _X, domain=QQ)
        f = Poly(list(reversed(self.coeffs)), _X, domain=QQ)
        inv = f.invert(phi)
        coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(inv.all_coeffs())]
        return CycloValue(self.N, _reduce(coeffs, self.N))

    def __truediv__(self, other):
        x, y = self._align(other)
        return x * y.inverse()

    def __eq__(self, other):
        if isinstance(other, QuadraticValue):
            other = embed_quadratic(other, math.lcm(self.N, other.conductor()))
        elif isinstance(other, (int, Fraction)):
            other = CycloValue.constant(other, self.N)
        if not isinstance(other, CycloValue):
            return NotImplemented
        x, y = self._align(other)
        return x.coeffs == y.coeffs

    # equality crosses conductors, so no cheap canonical hash exists
    __hash__ = None

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.N)
        return sum((float(c) * z ** i for i, c in enumerate(self.coeffs)), 0j)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_quadratic(self, D: int = 1) -> QuadraticValue | None:
        """The element of ``Q(sqrt(D))`` equal to ``self``, or ``None``."""
        if self.is_rational():
            return QuadraticValue(self.coeffs[0])
        if D == 1:
            return None
        try:
            s = _sqrt_in_cyclotomic(D, math.lcm(self.N, QuadraticValue(0, 1, D).conductor()))
        except ConductorMismatch:
            return None
        v = self.lift(s.N)
        i = next(i for i in range(1, len(s.coeffs)) if s.coeffs[i])
        b = v.coeffs[i] / s.coeffs[i]
        a = v.coeffs[0] - b * s.coeffs[0]
        q = QuadraticValue(a, b, D)
        return q if embed_quadratic(q, s.N) == v else None

    def __str__(self):
        terms = [f"{c}*z^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) or "0"

    def __repr__(self):
        return f"CycloValue(N={self.N}: {self})"


def embed_quadratic(x: QuadraticValue, N: int) -> CycloValue:
    """Image of ``x`` in ``Q(zeta_N)`` sending ``sqrt(D)`` to its positive real embedding.

    ``sqrt(D)`` is built from the quadratic Gauss sum of the Kronecker character
    of the field discriminant ``f``; the sum squares to ``f`` exactly and its
    sign is fixed by real evaluation.
    """
    x = QuadraticValue.coerce(x)
    if x.b == 0:
        return CycloValue.constant(x.a, N)
    f = x.conductor()
    if N % f:
        raise ConductorMismatch(f"sqrt({x.D}) needs conductor {f}, which does not divide {N}")
    return CycloValue.constant(x.a, N) + _sqrt_in_cyclotomic(x.D, N) * CycloValue.constant(x.b, N)


@lru_cache(maxsize=None)
def _sqrt_in_cyclotomic(D: int, N: int) -> CycloValue:
    f = D if D % 4 == 1 else 4 * D
    gauss = CycloValue.zero(f)
    for a in range(1, f):
        chi = int(kronecker_symbol(f, a))
        if chi:
            gauss = gauss + CycloValue.zeta_power(a, f) * chi
    if gauss * gauss != CycloValue.constant(f, f):
        raise ArithmeticError(f"Gauss sum for discriminant {f} did not square to {f}")
    if complex(gauss).real < 0:
        gauss = -gauss
    root = gauss if f == D else gauss * CycloValue.constant(Fraction(1, 2), f)
    return root.lift(N)


# -------------------------------------------------------------------- angles


@dataclass(frozen=True)
class RationalAngle:
    """Root of unity ``exp(2*pi*i*t)`` with ``t`` reduced into ``[0, 1)``."""

    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t", _frac(self.t) % 1)

    def __add__(self, other):
        return RationalAngle(self.t + _angle(other).t)

    __radd__ = __add__

    def __neg__(self):
        return RationalAngle(-self.t)

    def __sub__(self, other):
        return RationalAngle(self.t - _angle(other).t)

    def __mul__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        return RationalAngle(self.t * n)

    __rmul__ = __mul__

    @property
    def order(self) -> int:
        return self.t.denominator

    @property
    def is_trivial(self) -> bool:
        return self.t == 0

    def to_cyclo(self, N: int | None = None) -> CycloValue:
        N = N or self.order
        if N % self.order:
            raise ConductorMismatch(f"exp(2 pi i {self.t}) is not in Q(zeta_{N})")
        return CycloValue.zeta_power(self.t.numerator * (N // self.order), N)

    def __complex__(self):
        return cmath.exp(2j * cmath.pi * float(self.t))

    def __str__(self):
        return str(self.t)

    def to_json(self) -> str:
        return str(self.t)

    @classmethod
    def from_json(cls, s) -> RationalAngle:
        return cls(Fraction(str(s)))


def _angle(x) -> RationalAngle:
    return x if isinstance(x, RationalAngle) else RationalAngle(_frac(x))
