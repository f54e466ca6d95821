"""Grid-based numerical verification of surface-pair properties: isometry
of first fundamental forms, Gauss-map comparison, minimality, frame
orthonormality, and Gauss-curvature invariance."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .bour import SurfacePair
from .errors import DegenerateFrameError, DomainError
from .minkowski import inner4, inner6

__all__ = ["Grid", "VerificationReport", "check_isometry",
           "compare_gauss_maps", "check_minimal", "check_frames",
           "check_curvature_match", "check_gauss_normalization"]


@dataclass(frozen=True)
class Grid:
    """Strictly increasing sample values in u and v."""

    u: np.ndarray
    v: np.ndarray

    @classmethod
    def uniform(cls, u_interval, v_interval, nu: int = 20,
                nv: int = 20) -> "Grid":
        if nu < 2 or nv < 2:
            raise DomainError("grid needs at least 2 samples per axis")
        return cls(np.linspace(*u_interval, nu), np.linspace(*v_interval, nv))

    @classmethod
    def for_surface(cls, surface, nu: int = 20, nv: int = 20) -> "Grid":
        return cls.uniform(surface.u_interval, surface.v_interval, nu, nv)

    def points(self):
        for u in self.u:
            for v in self.v:
                yield float(u), float(v)


@dataclass
class VerificationReport:
    check: str
    tol: float
    residuals: List[float] = field(default_factory=list)
    excluded_points: List[Tuple[float, float, str]] = field(default_factory=list)
    notes: str = ""

    @property
    def max_residual(self) -> float:
        return max(self.residuals) if self.residuals else math.nan

    @property
    def min_residual(self) -> float:
        return min(self.residuals) if self.residuals else math.nan

    @property
    def passed(self) -> bool:
        return bool(self.residuals) and self.max_residual <= self.tol

    def to_dict(self) -> dict:
        return {"check": self.check, "tol": self.tol,
                "max_residual": self.max_residual,
                "min_residual": self.min_residual,
                "pass": self.passed,
                "excluded_points": [list(p) for p in self.excluded_points]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __str__(self) -> str:
        state = "pass" if self.passed else "FAIL"
        return (f"[{state}] {self.check}: max residual {self.max_residual:.3e}"
                f" (tol {self.tol:.1e}, {len(self.residuals)} points,"
                f" {len(self.excluded_points)} excluded)")


def _run(check: str, tol: float, grid: Grid, fn,
         notes: str = "") -> VerificationReport:
    rep = VerificationReport(check=check, tol=tol, notes=notes)
    for u, v in grid.points():
        try:
            rep.residuals.append(fn(u, v))
        except DegenerateFrameError as exc:
            rep.excluded_points.append((u, v, str(exc)))
    return rep


def check_isometry(pair: SurfacePair, grid: Grid,
                   tol: float = 1e-6) -> VerificationReport:
    """Compare first fundamental forms of the helicoidal surface against the
    pullback of the partner's under the pair's coordinate change."""
    X, R, off = pair.helicoidal, pair.rotational, pair.change.offset

    def residual(u, v):
        fx = X.first_fundamental(u, v)
        k, t = pair.map_point(u, v)
        fr = R.first_fundamental(k, t)
        c = off.d1(u)
        g11 = fr.g11 + 2.0 * c * fr.g12 + c * c * fr.g22
        g12 = fr.g12 + c * fr.g22
        g22 = fr.g22
        return max(abs(fx.g11 - g11), abs(fx.g12 - g12), abs(fx.g22 - g22),
                   abs(fx.W - (g11 * g22 - g12 * g12)))

    return _run("isometry", tol, grid, residual)


def compare_gauss_maps(pair: SurfacePair, grid: Grid,
                       tol: float = 1e-6) -> VerificationReport:
    """Component-wise distance between the two Gauss maps at corresponding
    points.  The component-wise maximum is used because the induced
    pseudo-norm of a nonzero bivector can vanish; the min over the grid is
    reported to support never-equal verdicts."""
    X, R = pair.helicoidal, pair.rotational

    def residual(u, v):
        nu_x = X.gauss_map(u, v)
        nu_r = R.gauss_map(*pair.map_point(u, v))
        d = nu_x - nu_r
        return max(abs(c) for c in d.components())

    return _run("gauss_map", tol, grid, residual)


def check_minimal(surface, grid: Grid, tol: float = 1e-6) -> VerificationReport:
    """max(|H1|, |H2|) over the grid, computed by the generic route."""

    def residual(u, v):
        h1, h2 = surface.mean_curvature(u, v)
        return max(abs(h1), abs(h2))

    return _run("minimal", tol, grid, residual)


def check_frames(surface, grid: Grid, tol: float = 1e-9) -> VerificationReport:
    """Deviation of the ten frame pairings from their contracted values."""

    def residual(u, v):
        fr = surface.frame(u, v)
        e1, e2, n1, n2 = fr.e1, fr.e2, fr.N1, fr.N2
        eps = fr.epsilon
        return max(
            abs(inner4(e1, e1) - eps), abs(inner4(e2, e2) + eps),
            abs(inner4(e1, e2)),
            abs(inner4(n1, n1) - 1.0), abs(inner4(n2, n2) - 1.0),
            abs(inner4(n1, n2)),
            abs(inner4(e1, n1)), abs(inner4(e1, n2)),
            abs(inner4(e2, n1)), abs(inner4(e2, n2)))

    return _run("frames", tol, grid, residual)


def check_curvature_match(pair: SurfacePair, grid: Grid,
                          tol: float = 1e-4) -> VerificationReport:
    """|K_X(u, v) - K_R(mapped point)|; Gauss curvature is an isometry
    invariant, so this is an independent oracle for the construction."""
    X, R = pair.helicoidal, pair.rotational

    def residual(u, v):
        return abs(X.gauss_curvature(u, v)
                   - R.gauss_curvature(*pair.map_point(u, v)))

    return _run("curvature_match", tol, grid, residual)


def check_gauss_normalization(surface, grid: Grid,
                              tol: float = 1e-9) -> VerificationReport:
    """|<nu, nu> + 1| over the grid; the Gauss map of a timelike surface is
    a unit-timelike bivector."""

    def residual(u, v):
        nu = surface.gauss_map(u, v)
        return abs(inner6(nu, nu) + 1.0)

    return _run("gauss_normalization", tol, grid, residual)
