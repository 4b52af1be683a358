"""Exact rational / univariate polynomial arithmetic and one-sided limits at t -> 0+.

Rationals are plain ``fractions.Fraction`` values (always normalized, positive
denominator).  Polynomials are immutable coefficient tuples in ascending degree
with trailing zeros stripped; the empty tuple is the zero polynomial.

Every combinatorial predicate downstream reduces to the sign of the lowest
degree term of some polynomial ("ruling sign"), which is why there is no
floating point anywhere in this module.  Signed infinities returned by
``limit_ratio`` follow the t -> 0+ convention.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]


class ZeroDenominator(ZeroDivisionError):
    pass


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def rational_to_str(value: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is one."""
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


class Poly:
    """Univariate polynomial in t over the rationals, coefficients ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def zero() -> "Poly":
        return _ZERO

    @staticmethod
    def constant(c: RationalLike) -> "Poly":
        return Poly((c,))

    @staticmethod
    def t(degree: int = 1, coeff: RationalLike = 1) -> "Poly":
        """The monomial coeff * t**degree."""
        return Poly((0,) * degree + (coeff,))

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[int, RationalLike]]) -> "Poly":
        """Build from (degree, coefficient) pairs, e.g. [(1, 2), (3, -1)] = 2t - t^3."""
        items = list(pairs)
        if not items:
            return _ZERO
        top = max(d for d, _ in items)
        cs = [Fraction(0)] * (top + 1)
        for d, c in items:
            cs[d] += as_rational(c)
        return Poly(cs)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] += c
        return Poly(cs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other: Union["Poly", RationalLike]) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> "Poly":
        f = as_rational(factor)
        if f == 0:
            return _ZERO
        return Poly([c * f for c in self.coeffs])

    def shift(self, degrees: int) -> "Poly":
        """Multiply by t**degrees."""
        if not self.coeffs:
            return _ZERO
        return Poly((Fraction(0),) * degrees + self.coeffs)

    def ruling(self) -> Optional[tuple[Fraction, int]]:
        """Lowest-degree nonzero term as (coefficient, degree); None for zero."""
        for d, c in enumerate(self.coeffs):
            if c:
                return (c, d)
        return None

    def ruling_sign(self) -> int:
        r = self.ruling()
        if r is None:
            return 0
        return 1 if r[0] > 0 else -1

    def lowdeg(self) -> Optional[int]:
        r = self.ruling()
        return None if r is None else r[1]

    def __call__(self, t: Union[Fraction, float, int]) -> Union[Fraction, float]:
        acc: Union[Fraction, float] = 0 if not isinstance(t, float) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * t + (float(c) if isinstance(t, float) else c)
        return acc

    def to_strings(self) -> list[str]:
        return [rational_to_str(c) for c in self.coeffs]

    @staticmethod
    def from_strings(items: Sequence[RationalLike]) -> "Poly":
        return Poly(items)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c:
                terms.append("%s*t^%d" % (rational_to_str(c), d))
        return "Poly(%s)" % " + ".join(terms)


_ZERO = Poly(())


class ExtendedRational:
    """A rational number or a signed infinity (one-sided limit values)."""

    __slots__ = ("value", "infinite_sign")

    def __init__(self, value: Optional[RationalLike] = None, infinite_sign: int = 0):
        if (value is None) == (infinite_sign == 0):
            raise ValueError("exactly one of value / infinite_sign must be set")
        object.__setattr__(self, "value", None if value is None else as_rational(value))
        object.__setattr__(self, "infinite_sign", infinite_sign)

    def __setattr__(self, name, value):
        raise AttributeError("ExtendedRational is immutable")

    @staticmethod
    def finite(value: RationalLike) -> "ExtendedRational":
        return ExtendedRational(value=value)

    @staticmethod
    def pos_inf() -> "ExtendedRational":
        return ExtendedRational(infinite_sign=1)

    @staticmethod
    def neg_inf() -> "ExtendedRational":
        return ExtendedRational(infinite_sign=-1)

    @property
    def is_finite(self) -> bool:
        return self.infinite_sign == 0

    def sign(self) -> int:
        if not self.is_finite:
            return self.infinite_sign
        if self.value > 0:
            return 1
        if self.value < 0:
            return -1
        return 0

    def __float__(self) -> float:
        if self.is_finite:
            return float(self.value)
        return float("inf") * self.infinite_sign

    def __eq__(self, other) -> bool:
        if isinstance(other, ExtendedRational):
            return (self.infinite_sign == other.infinite_sign
                    and self.value == other.value)
        if self.is_finite and isinstance(other, (int, Fraction)):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.infinite_sign))

    def __repr__(self) -> str:
        if self.is_finite:
            return "ExtendedRational(%s)" % rational_to_str(self.value)
        return "ExtendedRational(%s)" % ("+inf" if self.infinite_sign > 0 else "-inf")

    def to_str(self) -> str:
        if self.is_finite:
            return rational_to_str(self.value)
        return "inf" if self.infinite_sign > 0 else "-inf"


def ruling(p: Poly) -> Optional[tuple[Fraction, int]]:
    return p.ruling()


def ruling_sign(p: Poly) -> int:
    return p.ruling_sign()


def limit_ratio(num: Poly, den: Poly) -> ExtendedRational:
    """lim_{t -> 0+} num(t) / den(t).

    Decided from the lowest-degree terms: a higher-order numerator vanishes,
    equal orders leave the coefficient ratio, a lower-order numerator diverges
    with sign rs(num) * rs(den).
    """
    rd = den.ruling()
    if rd is None:
        raise ZeroDenominator("limit_ratio with zero denominator polynomial")
    rn = num.ruling()
    if rn is None:
        return ExtendedRational.finite(0)
    cn, dn = rn
    cd, dd = rd
    if dn > dd:
        return ExtendedRational.finite(0)
    if dn == dd:
        return ExtendedRational.finite(cn / cd)
    sign = (1 if cn > 0 else -1) * (1 if cd > 0 else -1)
    return ExtendedRational(infinite_sign=sign)


def series_compare(p: Poly, q: Poly) -> int:
    """Order by the first differing coefficient in ascending degree.

    This is the sign of p(t) - q(t) for all small enough positive t.
    """
    a, b = p.coeffs, q.coeffs
    for i in range(max(len(a), len(b))):
        ca = a[i] if i < len(a) else Fraction(0)
        cb = b[i] if i < len(b) else Fraction(0)
        if ca != cb:
            return -1 if ca < cb else 1
    return 0
