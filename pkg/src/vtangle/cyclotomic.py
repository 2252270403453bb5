"""Exact arithmetic in Q(zeta_8), where the bracket is evaluated at A = zeta_8.

zeta_8 is a primitive 8th root of unity: zeta^4 = -1, zeta^2 = i.  Elements are
stored on the basis (1, zeta, zeta^2, zeta^3) with Fraction coordinates.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotGaussianError
from .gaussian import GaussRational
from .laurent import LaurentPoly


class Cyc8:
    """An element c0 + c1*zeta + c2*zeta^2 + c3*zeta^3 of Q(zeta_8)."""

    __slots__ = ("c0", "c1", "c2", "c3")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        object.__setattr__(self, "c0", Fraction(c0))
        object.__setattr__(self, "c1", Fraction(c1))
        object.__setattr__(self, "c2", Fraction(c2))
        object.__setattr__(self, "c3", Fraction(c3))

    def __setattr__(self, name, value):
        raise AttributeError("Cyc8 is immutable")

    def coords(self) -> tuple:
        return (self.c0, self.c1, self.c2, self.c3)

    def is_zero(self) -> bool:
        return not (self.c0 or self.c1 or self.c2 or self.c3)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cyc8):
            return NotImplemented
        return self.coords() == other.coords()

    def __hash__(self) -> int:
        return hash(self.coords())

    def __add__(self, other: "Cyc8") -> "Cyc8":
        if not isinstance(other, Cyc8):
            return NotImplemented
        return Cyc8(
            self.c0 + other.c0,
            self.c1 + other.c1,
            self.c2 + other.c2,
            self.c3 + other.c3,
        )

    def __neg__(self) -> "Cyc8":
        return Cyc8(-self.c0, -self.c1, -self.c2, -self.c3)

    def __sub__(self, other: "Cyc8") -> "Cyc8":
        if not isinstance(other, Cyc8):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Cyc8") -> "Cyc8":
        if not isinstance(other, Cyc8):
            return NotImplemented
        a = self.coords()
        b = other.coords()
        out = [Fraction(0)] * 4
        for i in range(4):
            if not a[i]:
                continue
            for j in range(4):
                if not b[j]:
                    continue
                e = i + j
                if e < 4:
                    out[e] += a[i] * b[j]
                else:
                    out[e - 4] -= a[i] * b[j]  # zeta^4 = -1
        return Cyc8(*out)

    def __pow__(self, n: int) -> "Cyc8":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.invert() ** (-n)
        out = C_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def galois(self, k: int) -> "Cyc8":
        """Apply the automorphism zeta -> zeta^k for odd k in {1,3,5,7}."""
        c0, c1, c2, c3 = self.coords()
        if k == 1:
            return self
        if k == 3:
            return Cyc8(c0, c3, -c2, c1)
        if k == 5:
            return Cyc8(c0, -c1, c2, -c3)
        if k == 7:
            return Cyc8(c0, -c3, -c2, -c1)
        raise ValueError("Galois automorphisms of Q(zeta_8) need odd k in 1..7")

    def invert(self) -> "Cyc8":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_8)")
        conj = self.galois(3) * self.galois(5) * self.galois(7)
        norm = self * conj
        # The field norm is rational; the zeta coordinates must cancel.
        assert not (norm.c1 or norm.c2 or norm.c3), "field norm must be rational"
        n = norm.c0
        return Cyc8(conj.c0 / n, conj.c1 / n, conj.c2 / n, conj.c3 / n)

    def __truediv__(self, other: "Cyc8") -> "Cyc8":
        if not isinstance(other, Cyc8):
            return NotImplemented
        return self * other.invert()

    def to_gauss(self) -> GaussRational:
        """Reinterpret as an element of Q(i); loud error if zeta coordinates remain."""
        if self.c1 or self.c3:
            raise NotGaussianError(self.c1, self.c3)
        return GaussRational(self.c0, self.c2)

    def __str__(self) -> str:
        return f"{self.c0} + {self.c1}*z + {self.c2}*z^2 + {self.c3}*z^3"

    def __repr__(self) -> str:
        return f"Cyc8({self.c0!r}, {self.c1!r}, {self.c2!r}, {self.c3!r})"


C_ZERO = Cyc8()
C_ONE = Cyc8(1)
ZETA = Cyc8(0, 1)
C_I = Cyc8(0, 0, 1)  # zeta^2 = i

# zeta^k for k = 0..7 as basis coordinate tuples.
_ZETA_POW = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (-1, 0, 0, 0),
    (0, -1, 0, 0),
    (0, 0, -1, 0),
    (0, 0, 0, -1),
)


def eval_at_zeta8(p: LaurentPoly) -> Cyc8:
    """Evaluate a Laurent polynomial in A at A = zeta_8."""
    out = [Fraction(0)] * 4
    for e, c in p.items():
        coords = _ZETA_POW[e % 8]
        for k in range(4):
            if coords[k]:
                out[k] += c * coords[k]
    return Cyc8(*out)
