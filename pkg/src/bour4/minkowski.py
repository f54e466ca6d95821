"""Linear algebra of Minkowski 4-space with signature (+, +, +, -).

Vectors, the indefinite inner product and causal classification, wedge
products into the 6-dimensional bivector space (signature (3, 3)), and the
pseudo-orthonormal null basis used by the parabolic rotation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "Vec4", "CausalClass", "Bivector6", "NullBasis",
    "inner4", "causal_character", "wedge", "inner6", "from_null_basis",
    "ETA1", "ETA2", "ETA3", "ETA4", "XI3", "XI4",
]


@dataclass(frozen=True, slots=True)
class Vec4:
    x1: float
    x2: float
    x3: float
    x4: float

    def components(self) -> tuple[float, float, float, float]:
        return (self.x1, self.x2, self.x3, self.x4)

    def __add__(self, other: "Vec4") -> "Vec4":
        return Vec4(self.x1 + other.x1, self.x2 + other.x2,
                    self.x3 + other.x3, self.x4 + other.x4)

    def __sub__(self, other: "Vec4") -> "Vec4":
        return Vec4(self.x1 - other.x1, self.x2 - other.x2,
                    self.x3 - other.x3, self.x4 - other.x4)

    def __mul__(self, s: float) -> "Vec4":
        return Vec4(self.x1 * s, self.x2 * s, self.x3 * s, self.x4 * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> "Vec4":
        return self * (1.0 / s)

    def __neg__(self) -> "Vec4":
        return Vec4(-self.x1, -self.x2, -self.x3, -self.x4)

    def euclidean_sq(self) -> float:
        return self.x1 ** 2 + self.x2 ** 2 + self.x3 ** 2 + self.x4 ** 2


class CausalClass(Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


def inner4(x: Vec4, y: Vec4) -> float:
    """Indefinite inner product x1*y1 + x2*y2 + x3*y3 - x4*y4."""
    return x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3 - x.x4 * y.x4


def causal_character(x: Vec4) -> CausalClass:
    """Spacelike / timelike / lightlike classification of a vector.

    The zero test uses tau = 1e-12 * (1 + |x|^2) so that large vectors stay
    classifiable in floating point.
    """
    q = inner4(x, x)
    tau = 1e-12 * (1.0 + x.euclidean_sq())
    if q > tau:
        return CausalClass.SPACELIKE
    if q < -tau:
        return CausalClass.TIMELIKE
    if x.euclidean_sq() == 0.0:
        return CausalClass.SPACELIKE
    return CausalClass.LIGHTLIKE


@dataclass(frozen=True, slots=True)
class Bivector6:
    """Element of the bivector space in the ordered basis
    (e12, e13, e14, e23, e24, e34); basis norms are (+1, +1, -1, +1, -1, -1).
    """

    c12: float
    c13: float
    c14: float
    c23: float
    c24: float
    c34: float

    def components(self) -> tuple[float, ...]:
        return (self.c12, self.c13, self.c14, self.c23, self.c24, self.c34)

    def __add__(self, other: "Bivector6") -> "Bivector6":
        return Bivector6(*(a + b for a, b in
                           zip(self.components(), other.components())))

    def __sub__(self, other: "Bivector6") -> "Bivector6":
        return Bivector6(*(a - b for a, b in
                           zip(self.components(), other.components())))

    def __mul__(self, s: float) -> "Bivector6":
        return Bivector6(*(a * s for a in self.components()))

    __rmul__ = __mul__

    def __neg__(self) -> "Bivector6":
        return self * -1.0


_SIGNS6 = (1.0, 1.0, -1.0, 1.0, -1.0, -1.0)


def wedge(x: Vec4, y: Vec4) -> Bivector6:
    """Wedge product, components c_ij = x_i y_j - x_j y_i for i < j."""
    return Bivector6(
        x.x1 * y.x2 - x.x2 * y.x1,
        x.x1 * y.x3 - x.x3 * y.x1,
        x.x1 * y.x4 - x.x4 * y.x1,
        x.x2 * y.x3 - x.x3 * y.x2,
        x.x2 * y.x4 - x.x4 * y.x2,
        x.x3 * y.x4 - x.x4 * y.x3,
    )


def inner6(a: Bivector6, b: Bivector6) -> float:
    """Induced inner product on bivectors; satisfies the Lagrange identity
    <x^y, z^w> = <x,z><y,w> - <x,w><y,z>.
    """
    return sum(s * p * q for s, p, q in
               zip(_SIGNS6, a.components(), b.components()))


ETA1 = Vec4(1.0, 0.0, 0.0, 0.0)
ETA2 = Vec4(0.0, 1.0, 0.0, 0.0)
ETA3 = Vec4(0.0, 0.0, 1.0, 0.0)
ETA4 = Vec4(0.0, 0.0, 0.0, 1.0)

_S = 1.0 / math.sqrt(2.0)
XI3 = Vec4(0.0, 0.0, -_S, _S)   # (eta4 - eta3)/sqrt(2), null
XI4 = Vec4(0.0, 0.0, _S, _S)    # (eta3 + eta4)/sqrt(2), null, <xi3, xi4> = -1


@dataclass(frozen=True, slots=True)
class NullBasis:
    """The lightlike pair completing (eta1, eta2) to a pseudo-orthonormal
    basis; <xi3, xi3> = <xi4, xi4> = 0 and <xi3, xi4> = -1 in this metric.
    """

    xi3: Vec4 = XI3
    xi4: Vec4 = XI4


def from_null_basis(a1: float, a2: float, a3: float, a4: float) -> Vec4:
    """Standard coordinates of a1*eta1 + a2*eta2 + a3*xi3 + a4*xi4."""
    return Vec4(a1, a2, (a4 - a3) * _S, (a3 + a4) * _S)
