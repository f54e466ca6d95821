"""Adaptive Runge-Kutta initial-value solver with dense output.

Thin wrapper over :func:`scipy.integrate.solve_ivp` (RK45); used as an
independent oracle for the Bernoulli equations behind the minimal families.
"""
from __future__ import annotations

from typing import Callable

import numpy as np
from scipy.integrate import solve_ivp

from ..errors import StiffnessError

__all__ = ["solve_ode", "OdeSolution"]


class OdeSolution:
    """Sampled solution with dense interpolation between accepted steps."""

    def __init__(self, ts: np.ndarray, ys: np.ndarray, dense):
        self.ts = ts
        self.ys = ys
        self._dense = dense

    def __call__(self, u: float) -> float:
        lo, hi = self.ts[0], self.ts[-1]
        if not (min(lo, hi) - 1e-12 <= u <= max(lo, hi) + 1e-12):
            raise ValueError(f"u={u} outside solved span [{lo}, {hi}]")
        return float(self._dense(u)[0])


def solve_ode(rhs: Callable[[float, float], float], y0: float, span,
              tol: float = 1e-10) -> OdeSolution:
    """Integrate y' = rhs(u, y), y(span[0]) = y0, over span."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    sol = solve_ivp(lambda t, y: [rhs(t, y[0])], tuple(span), [float(y0)],
                    method="RK45", rtol=tol, atol=tol * 1e-2,
                    dense_output=True)
    if not sol.success:
        raise StiffnessError(sol.message)
    return OdeSolution(sol.t, sol.y[0], sol.sol)
