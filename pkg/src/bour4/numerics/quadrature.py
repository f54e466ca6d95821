"""Adaptive Gauss-Kronrod quadrature and cumulative antiderivatives."""
from __future__ import annotations

import math
from bisect import bisect_right
from typing import Callable

import numpy as np

from ..errors import ConvergenceError, DomainError
from .scalarfn import ScalarFn

__all__ = ["integrate", "cumulative", "CumulativeFn"]

# 15-point Kronrod nodes with 7-point Gauss weights embedded.
_GK15 = (
    (+0.991455371120813, 0.000000000000000, 0.022935322010529),
    (-0.991455371120813, 0.000000000000000, 0.022935322010529),
    (+0.949107912342759, 0.129484966168870, 0.063092092629979),
    (-0.949107912342759, 0.129484966168870, 0.063092092629979),
    (+0.864864423359769, 0.000000000000000, 0.104790010322250),
    (-0.864864423359769, 0.000000000000000, 0.104790010322250),
    (+0.741531185599394, 0.279705391489277, 0.140653259715525),
    (-0.741531185599394, 0.279705391489277, 0.140653259715525),
    (+0.586087235467691, 0.000000000000000, 0.169004726639267),
    (-0.586087235467691, 0.000000000000000, 0.169004726639267),
    (+0.405845151377397, 0.381830050505119, 0.190350578064785),
    (-0.405845151377397, 0.381830050505119, 0.190350578064785),
    (+0.207784955007898, 0.000000000000000, 0.204432940075298),
    (-0.207784955007898, 0.000000000000000, 0.204432940075298),
    (0.000000000000000, 0.417959183673469, 0.209482141084728),
)


def _panel(f: Callable[[float], float], a: float, b: float):
    """One Gauss-Kronrod pass over [a, b]: returns (integral, error estimate)."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    gauss = kronrod = 0.0
    for xi, wg, wk in _GK15:
        fx = f(mid + half * xi)
        if not math.isfinite(fx):
            raise ConvergenceError(f"integrand not finite near u={mid + half * xi}")
        gauss += wg * fx
        kronrod += wk * fx
    raw = abs(kronrod - gauss) * abs(half)
    err = min(raw, (200.0 * raw) ** 1.5) if raw > 0 else 0.0
    return kronrod * half, err


def integrate(f, a: float, b: float, tol: float = 1e-10,
              limit: int = 4096) -> float:
    """Adaptive quadrature of ``f`` over [a, b] to absolute tolerance ``tol``.

    Raises :class:`ConvergenceError` when the panel budget ``limit`` is
    exhausted, which normally indicates a singularity inside the interval.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if a == b:
        return 0.0
    sign = 1.0
    if b < a:
        a, b, sign = b, a, -1.0
    fn = f if callable(f) else f.__call__
    total, err0 = _panel(fn, a, b)
    stack = [(a, b, total, err0)]
    done_val = 0.0
    done_err = 0.0
    panels = 1
    while stack:
        lo, hi, val, err = stack.pop()
        if err <= tol * (hi - lo) / (b - a) or (hi - lo) < 1e-15 * (1.0 + abs(lo)):
            done_val += val
            done_err += err
            continue
        if panels >= limit:
            raise ConvergenceError(
                f"quadrature did not converge on [{a}, {b}] within {limit} panels "
                f"(pending panel [{lo}, {hi}] error {err:.3e})")
        mid = 0.5 * (lo + hi)
        stack.append((lo, mid) + _panel(fn, lo, mid))
        stack.append((mid, hi) + _panel(fn, mid, hi))
        panels += 1
    if done_err > max(tol, 1e3 * tol):
        raise ConvergenceError(
            f"quadrature error estimate {done_err:.3e} exceeds tolerance {tol:.1e}")
    return sign * done_val


class CumulativeFn(ScalarFn):
    """Antiderivative F of an integrand f with F(u0) = 0.

    Panel integrals are accumulated on a uniform grid and evaluated between
    nodes with cubic Hermite interpolation whose endpoint slopes are the exact
    integrand values, so F' reproduces f and F'' reproduces f'.
    """

    __slots__ = ("integrand", "u0", "tol", "nodes", "values", "slopes",
                 "interpolation_order")

    def __init__(self, integrand: ScalarFn, u0: float, interval,
                 tol: float = 1e-10, panels: int = 512,
                 max_panels: int = 8192):
        lo, hi = float(interval[0]), float(interval[1])
        if not lo < hi:
            raise DomainError(f"empty interval {interval}")
        if not lo <= u0 <= hi:
            raise DomainError(f"base point {u0} outside {interval}")
        fn = integrand if isinstance(integrand, ScalarFn) else ScalarFn(integrand)
        n = panels
        while True:
            nodes = np.linspace(lo, hi, n + 1)
            fvals = np.array([fn(float(t)) for t in nodes])
            if not np.all(np.isfinite(fvals)):
                raise ConvergenceError("integrand not finite on the grid")
            vals = np.empty(n + 1)
            vals[0] = 0.0
            errsum = 0.0
            for i in range(n):
                piece, err = _panel(fn, float(nodes[i]), float(nodes[i + 1]))
                vals[i + 1] = vals[i] + piece
                errsum += err
            if errsum <= tol or n >= max_panels:
                break
            n *= 2
        if errsum > tol:
            raise ConvergenceError(
                f"cumulative integral error {errsum:.3e} > tol {tol:.1e} at "
                f"{n} panels; integrand is likely singular on {interval}")
        super().__init__(fn=self._value, interval=(lo, hi))
        self.integrand = fn
        self.u0 = float(u0)
        self.tol = tol
        self.nodes = nodes
        self.values = vals
        self.slopes = fvals
        self.interpolation_order = 3
        self.values = vals - self._value(self.u0)

    def _value(self, u: float) -> float:
        nodes = self.nodes
        if u < nodes[0] - 1e-12 or u > nodes[-1] + 1e-12:
            raise DomainError(f"u={u} outside [{nodes[0]}, {nodes[-1]}]")
        i = min(max(bisect_right(nodes, u) - 1, 0), len(nodes) - 2)
        h = nodes[i + 1] - nodes[i]
        t = (u - nodes[i]) / h
        f0, f1 = self.values[i], self.values[i + 1]
        m0, m1 = self.slopes[i] * h, self.slopes[i + 1] * h
        t2, t3 = t * t, t * t * t
        return float(f0 * (2 * t3 - 3 * t2 + 1) + m0 * (t3 - 2 * t2 + t)
                     + f1 * (-2 * t3 + 3 * t2) + m1 * (t3 - t2))

    def d1(self, u: float) -> float:
        return self.integrand(u)

    def d2(self, u: float) -> float:
        return self.integrand.d1(u)

    def jet(self, u):
        from .jets import Jet2
        return Jet2(self._value(u), self.d1(u), self.d2(u))


def cumulative(f, u0: float, interval, tol: float = 1e-10,
               panels: int = 512) -> CumulativeFn:
    """Build the antiderivative of ``f`` anchored at ``u0``."""
    return CumulativeFn(f, u0, interval, tol=tol, panels=panels)
