"""Order-2 jet arithmetic.

A :class:`Jet2` carries a value together with exact first and second
derivatives with respect to a single scalar variable.  Pushing a jet through
arithmetic and the elementary functions below propagates derivatives to
machine precision, which is what the surface machinery needs for frames and
curvatures.  Every function in this module also accepts plain floats, so the
same code path evaluates values and jets.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["Jet2", "FUNCTIONS", "CONSTANTS"]


@dataclass(frozen=True, slots=True)
class Jet2:
    val: float
    d1: float = 0.0
    d2: float = 0.0

    @staticmethod
    def variable(u: float) -> "Jet2":
        return Jet2(float(u), 1.0, 0.0)

    @staticmethod
    def constant(c: float) -> "Jet2":
        return Jet2(float(c), 0.0, 0.0)

    def __add__(self, other):
        if isinstance(other, Jet2):
            return Jet2(self.val + other.val, self.d1 + other.d1, self.d2 + other.d2)
        return Jet2(self.val + other, self.d1, self.d2)

    __radd__ = __add__

    def __neg__(self):
        return Jet2(-self.val, -self.d1, -self.d2)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Jet2) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet2):
            return Jet2(
                self.val * other.val,
                self.val * other.d1 + self.d1 * other.val,
                self.val * other.d2 + 2.0 * self.d1 * other.d1 + self.d2 * other.val,
            )
        return Jet2(self.val * other, self.d1 * other, self.d2 * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet2):
            q = self.val / other.val
            q1 = (self.d1 - q * other.d1) / other.val
            q2 = (self.d2 - 2.0 * q1 * other.d1 - q * other.d2) / other.val
            return Jet2(q, q1, q2)
        return Jet2(self.val / other, self.d1 / other, self.d2 / other)

    def __rtruediv__(self, other):
        return Jet2.constant(other) / self

    def __pow__(self, n):
        if isinstance(n, Jet2):
            return exp(n * log(self))
        if n == 2:
            return self * self
        f = self.val ** n
        f1 = n * self.val ** (n - 1)
        f2 = n * (n - 1) * self.val ** (n - 2)
        return _chain(self, f, f1, f2)

    def __rpow__(self, base):
        return exp(self * math.log(base))


def _chain(g: Jet2, f: float, f1: float, f2: float) -> Jet2:
    """Compose outer derivatives (f, f', f'') evaluated at g.val with g."""
    return Jet2(f, f1 * g.d1, f2 * g.d1 * g.d1 + f1 * g.d2)


def _unary(math_fn, dfn):
    def apply(x):
        if isinstance(x, Jet2):
            f1, f2 = dfn(x.val)
            return _chain(x, math_fn(x.val), f1, f2)
        return math_fn(x)

    return apply


sin = _unary(math.sin, lambda v: (math.cos(v), -math.sin(v)))
cos = _unary(math.cos, lambda v: (-math.sin(v), -math.cos(v)))
tan = _unary(math.tan, lambda v: (1.0 + math.tan(v) ** 2,
                                  2.0 * math.tan(v) * (1.0 + math.tan(v) ** 2)))
sinh = _unary(math.sinh, lambda v: (math.cosh(v), math.sinh(v)))
cosh = _unary(math.cosh, lambda v: (math.sinh(v), math.cosh(v)))
tanh = _unary(math.tanh, lambda v: (1.0 - math.tanh(v) ** 2,
                                    -2.0 * math.tanh(v) * (1.0 - math.tanh(v) ** 2)))
asin = _unary(math.asin, lambda v: (1.0 / math.sqrt(1.0 - v * v),
                                    v / (1.0 - v * v) ** 1.5))
acos = _unary(math.acos, lambda v: (-1.0 / math.sqrt(1.0 - v * v),
                                    -v / (1.0 - v * v) ** 1.5))
atan = _unary(math.atan, lambda v: (1.0 / (1.0 + v * v),
                                    -2.0 * v / (1.0 + v * v) ** 2))
asinh = _unary(math.asinh, lambda v: (1.0 / math.sqrt(1.0 + v * v),
                                      -v / (1.0 + v * v) ** 1.5))
acosh = _unary(math.acosh, lambda v: (1.0 / math.sqrt(v * v - 1.0),
                                      -v / (v * v - 1.0) ** 1.5))
atanh = _unary(math.atanh, lambda v: (1.0 / (1.0 - v * v),
                                      2.0 * v / (1.0 - v * v) ** 2))
exp = _unary(math.exp, lambda v: (math.exp(v), math.exp(v)))
log = _unary(math.log, lambda v: (1.0 / v, -1.0 / (v * v)))
sqrt = _unary(math.sqrt, lambda v: (0.5 / math.sqrt(v), -0.25 / v ** 1.5))


def fabs(x):
    if isinstance(x, Jet2):
        s = -1.0 if x.val < 0.0 else 1.0
        return Jet2(abs(x.val), s * x.d1, s * x.d2)
    return abs(x)


# Name table used by the expression evaluator; "ln" is the grammar's log.
FUNCTIONS = {
    "sin": sin, "cos": cos, "tan": tan,
    "sinh": sinh, "cosh": cosh, "tanh": tanh,
    "asin": asin, "acos": acos, "atan": atan,
    "asinh": asinh, "acosh": acosh, "atanh": atanh,
    "sqrt": sqrt, "ln": log, "exp": exp, "abs": fabs,
}

CONSTANTS = {"pi": math.pi, "e": math.e}
