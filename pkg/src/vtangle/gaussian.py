"""Gaussian rationals Q(i) with a projective point at infinity.

Conductance values live here.  Arithmetic follows the projective rules:
invert(0) = inf, invert(inf) = 0, inf + finite = inf; the genuinely undefined
combinations inf + inf and 0 * inf raise IndeterminateError.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import IndeterminateError


class GaussRational:
    """An exact complex number p/q + (r/s)i, or the single point at infinity."""

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "_re", Fraction(re))
        object.__setattr__(self, "_im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    @classmethod
    def infinity(cls) -> "GaussRational":
        v = cls.__new__(cls)
        object.__setattr__(v, "_re", None)
        object.__setattr__(v, "_im", None)
        return v

    @property
    def is_infinite(self) -> bool:
        return self._re is None

    @property
    def re(self) -> Fraction:
        if self.is_infinite:
            raise IndeterminateError("the point at infinity has no real part")
        return self._re

    @property
    def im(self) -> Fraction:
        if self.is_infinite:
            raise IndeterminateError("the point at infinity has no imaginary part")
        return self._im

    def is_zero(self) -> bool:
        return not self.is_infinite and self._re == 0 and self._im == 0

    @property
    def is_real(self) -> bool:
        """Whether the value is real; infinity counts as real (classical value)."""
        return self.is_infinite or self._im == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaussRational):
            return NotImplemented
        return self._re == other._re and self._im == other._im

    def __hash__(self) -> int:
        return hash((self._re, self._im))

    def __add__(self, other: "GaussRational") -> "GaussRational":
        if not isinstance(other, GaussRational):
            return NotImplemented
        if self.is_infinite and other.is_infinite:
            raise IndeterminateError("inf + inf is undefined")
        if self.is_infinite or other.is_infinite:
            return INFINITY
        return GaussRational(self._re + other._re, self._im + other._im)

    def __neg__(self) -> "GaussRational":
        if self.is_infinite:
            return INFINITY
        return GaussRational(-self._re, -self._im)

    def __sub__(self, other: "GaussRational") -> "GaussRational":
        if not isinstance(other, GaussRational):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "GaussRational") -> "GaussRational":
        if not isinstance(other, GaussRational):
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            if (self.is_infinite and other.is_zero()) or (
                other.is_infinite and self.is_zero()
            ):
                raise IndeterminateError("0 * inf is undefined")
            return INFINITY
        a, b, c, d = self._re, self._im, other._re, other._im
        return GaussRational(a * c - b * d, a * d + b * c)

    def invert(self) -> "GaussRational":
        if self.is_infinite:
            return GaussRational(0, 0)
        if self.is_zero():
            return INFINITY
        n = self._re * self._re + self._im * self._im
        return GaussRational(self._re / n, -self._im / n)

    def __truediv__(self, other: "GaussRational") -> "GaussRational":
        if not isinstance(other, GaussRational):
            return NotImplemented
        return self * other.invert()

    def mul_i(self) -> "GaussRational":
        """Multiply by i (infinity is fixed)."""
        if self.is_infinite:
            return INFINITY
        return GaussRational(-self._im, self._re)

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        re, im = self._re, self._im
        head = f"{re.numerator}/{re.denominator}"
        if im < 0:
            return f"{head} - {-im.numerator}/{im.denominator}*i"
        return f"{head} + {im.numerator}/{im.denominator}*i"

    def real_str(self) -> str:
        """Canonical text for a real value: n/d or inf."""
        if self.is_infinite:
            return "inf"
        if self._im != 0:
            raise IndeterminateError("value is not real")
        return f"{self._re.numerator}/{self._re.denominator}"

    def __repr__(self) -> str:
        if self.is_infinite:
            return "GaussRational.infinity()"
        return f"GaussRational({self._re!r}, {self._im!r})"


INFINITY = GaussRational.infinity()
G_ZERO = GaussRational(0, 0)
G_ONE = GaussRational(1, 0)
G_I = GaussRational(0, 1)
