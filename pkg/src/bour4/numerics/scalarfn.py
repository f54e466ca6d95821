"""Scalar functions of one variable with optional exact derivative rules.

A :class:`ScalarFn` is the carrier for profile-curve components.  It wraps a
plain evaluation rule plus, when available, analytic first/second derivative
rules, either supplied directly or produced by evaluating a jet-aware rule on
:class:`~bour4.numerics.jets.Jet2` inputs.  Functions without analytic rules
fall back to Richardson-extrapolated central differences.
"""
from __future__ import annotations

import math
from typing import Callable, Optional, Tuple

from ..errors import DomainError
from .jets import Jet2

__all__ = ["ScalarFn", "derivative"]

_EPS = math.ulp(1.0)
_H1 = _EPS ** (1.0 / 3.0)   # optimal step scale, first derivative
_H2 = _EPS ** 0.25          # optimal step scale, second derivative

Interval = Tuple[float, float]
_FULL_LINE: Interval = (-math.inf, math.inf)


def _fd(f: Callable[[float], float], u: float, order: int,
        interval: Interval) -> float:
    """Central difference with one Richardson level; O(h^4) truncation."""
    scale = _H1 if order == 1 else _H2
    h = scale * (1.0 + abs(u))
    lo, hi = interval
    if u - 2.0 * h < lo or u + 2.0 * h > hi:
        raise DomainError(
            f"u={u} too close to the interval boundary {interval} for a "
            f"finite-difference step h={h:.3e}")
    if order == 1:
        def d(s):
            return (f(u + s) - f(u - s)) / (2.0 * s)
    else:
        def d(s):
            return (f(u + s) - 2.0 * f(u) + f(u - s)) / (s * s)
    coarse, fine = d(h), d(h / 2.0)
    return (4.0 * fine - coarse) / 3.0


class ScalarFn:
    """A real function on a declared interval, with derivative access.

    Exactly one of the following configurations backs an instance:

    * ``fn`` with optional analytic ``d1``/``d2`` callables;
    * a ``jet_rule`` mapping u to the full :class:`Jet2` of the function.
    """

    __slots__ = ("_fn", "_d1", "_d2", "_jet_rule", "interval")

    def __init__(self, fn: Optional[Callable[[float], float]] = None,
                 d1: Optional[Callable[[float], float]] = None,
                 d2: Optional[Callable[[float], float]] = None,
                 interval: Interval = _FULL_LINE,
                 jet_rule: Optional[Callable[[float], Jet2]] = None):
        if fn is None and jet_rule is None:
            raise ValueError("ScalarFn needs an evaluation rule")
        self._fn = fn
        self._d1 = d1
        self._d2 = d2
        self._jet_rule = jet_rule
        self.interval = (float(interval[0]), float(interval[1]))

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, c: float, interval: Interval = _FULL_LINE) -> "ScalarFn":
        c = float(c)
        return cls(lambda u: c, lambda u: 0.0, lambda u: 0.0, interval)

    @classmethod
    def identity(cls, interval: Interval = _FULL_LINE) -> "ScalarFn":
        return cls(lambda u: float(u), lambda u: 1.0, lambda u: 0.0, interval)

    @classmethod
    def from_callable(cls, fn, d1=None, d2=None,
                      interval: Interval = _FULL_LINE) -> "ScalarFn":
        return cls(fn, d1, d2, interval)

    @classmethod
    def from_jet_rule(cls, rule: Callable[[float], Jet2],
                      interval: Interval = _FULL_LINE) -> "ScalarFn":
        return cls(interval=interval, jet_rule=rule)

    # -- evaluation --------------------------------------------------------
    @property
    def has_analytic(self) -> bool:
        return self._jet_rule is not None or (self._d1 is not None
                                              and self._d2 is not None)

    def __call__(self, u: float) -> float:
        if self._fn is not None:
            return self._fn(u)
        return self._jet_rule(u).val

    def d1(self, u: float) -> float:
        if self._d1 is not None:
            return self._d1(u)
        if self._jet_rule is not None:
            return self._jet_rule(u).d1
        return _fd(self._fn, u, 1, self.interval)

    def d2(self, u: float) -> float:
        if self._d2 is not None:
            return self._d2(u)
        if self._jet_rule is not None:
            return self._jet_rule(u).d2
        return _fd(self._fn, u, 2, self.interval)

    def jet(self, u: float) -> Jet2:
        if self._jet_rule is not None:
            return self._jet_rule(u)
        return Jet2(self(u), self.d1(u), self.d2(u))

    # -- combinators -------------------------------------------------------
    def shifted(self, c: float) -> "ScalarFn":
        """This function plus an additive constant."""
        if c == 0.0:
            return self
        return ScalarFn(interval=self.interval,
                        jet_rule=lambda u: self.jet(u) + c)

    def negated(self) -> "ScalarFn":
        return ScalarFn(interval=self.interval,
                        jet_rule=lambda u: -self.jet(u))


def derivative(f, u: float, order: int = 1) -> float:
    """Derivative of ``f`` at ``u``.

    Returns the analytic rule when ``f`` carries one; otherwise a central
    difference with one Richardson extrapolation level.  ``order`` is 1 or 2.
    """
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    if isinstance(f, ScalarFn):
        if f.has_analytic:
            return f.d1(u) if order == 1 else f.d2(u)
        return _fd(f, u, order, f.interval)
    return _fd(f, u, order, _FULL_LINE)
