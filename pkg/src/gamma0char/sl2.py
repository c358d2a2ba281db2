"""Integer matrices of determinant one and the invariants living on them.

``psi`` is the integer-valued four-case invariant, ``omega`` the {-12, 0, 12}
correction term making it additive, ``chi_t`` the twelve induced circle-valued
characters of SL2(Z), and ``sigma`` the level-lowering difference
homomorphisms on Gamma0(N).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .exact import CircleExponent


@dataclass(frozen=True)
class UniModular:
    """A 2x2 integer matrix with determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant is not 1: {self.entries()}")

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other: "UniModular") -> "UniModular":
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return UniModular(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inv(self) -> "UniModular":
        return UniModular(self.d, -self.b, -self.c, self.a)

    def __neg__(self) -> "UniModular":
        return UniModular(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, n: int) -> "UniModular":
        if n < 0:
            return self.inv() ** (-n)
        result = I
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        return f"({self.a},{self.b};{self.c},{self.d})"


T = UniModular(1, 1, 0, 1)
S = UniModular(0, -1, 1, 0)
I = UniModular(1, 0, 0, 1)
NEG_I = UniModular(-1, 0, 0, -1)


@dataclass(frozen=True)
class Gamma0Element:
    """An element of Gamma0(N): determinant-1 matrix with N dividing c."""

    matrix: UniModular
    level: int

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError(f"level must be positive, got {self.level}")
        if self.matrix.c % self.level != 0:
            raise ValueError(
                f"matrix {self.matrix} is not in Gamma0({self.level}): "
                f"{self.level} does not divide {self.matrix.c}"
            )

    def __mul__(self, other: "Gamma0Element") -> "Gamma0Element":
        if self.level != other.level:
            raise ValueError("level mismatch")
        return Gamma0Element(self.matrix * other.matrix, self.level)


def multiply(x: UniModular, y: UniModular) -> UniModular:
    return x * y


def invert(x: UniModular) -> UniModular:
    return x.inv()


def psi(m: UniModular) -> int:
    """Integer invariant of m, computed case by case from the c entry."""
    return kernels.psi4(m.a, m.b, m.c, m.d)


def omega(x: UniModular, y: UniModular) -> int:
    """Correction term in {-12, 0, 12} with psi(xy) = psi(x) + psi(y) + omega(x, y).

    Decided purely from the sign pattern of the three lower-left entries;
    never evaluated through psi itself.
    """
    c1, d1 = x.c, x.d
    c2 = y.c
    c3 = c1 * y.a + d1 * c2
    if c1 == 0 and c2 == 0 and d1 < 0 and y.d < 0:
        return 12
    if c1 >= 0 and c2 >= 0 and c3 < 0:
        return 12
    if c1 < 0 and c2 < 0 and c3 >= 0:
        return -12
    return 0


def chi_t(t: int, m: UniModular) -> CircleExponent:
    """The character of SL2(Z) with exponent t*psi(m)/12; t is taken mod 12."""
    return CircleExponent(Fraction(t * psi(m), 12))


def conjugate_by_level(m: UniModular, l: int) -> UniModular:
    """diag(1, l)^-1 * m * diag(1, l); requires l | c so the result is integral."""
    if l < 1 or m.c % l != 0:
        raise ValueError(f"{l} does not divide the lower-left entry of {m}")
    return UniModular(m.a, m.b * l, m.c // l, m.d)


def _sigma4(a: int, b: int, c: int, d: int, l: int) -> int:
    return kernels.psi4(a, b, c, d) - kernels.psi4(a, b * l, c // l, d)


def sigma(gamma: Gamma0Element, l: int) -> int:
    """The difference homomorphism at divisor l: psi(gamma) - psi(conjugate).

    Requires l | N for the element's level N.  Additive in gamma, vanishes on
    every finite-order element, and takes T to 1 - l.
    """
    if l < 1 or gamma.level % l != 0:
        raise ValueError(f"{l} does not divide the level {gamma.level}")
    m = gamma.matrix
    return _sigma4(m.a, m.b, m.c, m.d, l)
