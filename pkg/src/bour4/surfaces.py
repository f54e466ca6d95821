"""Helicoidal and rotational surfaces: evaluation, fundamental forms,
adapted frames, mean and Gauss curvature, Gauss maps, fiber classification.

Both surface families share four coordinate templates (elliptic, two
hyperbolic, parabolic): a helicoidal surface is a template with pitch
``lam > 0``, and a rotational surface is the same template with ``lam = 0``.
Every curvature quantity is available through two routes: the generic one
built from partial derivatives and the adapted frame, and per-template
closed forms, kept separate so they can cross-check each other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np

from .errors import DegenerateFrameError, DomainError
from .minkowski import Bivector6, Vec4, from_null_basis, inner4, wedge
from .numerics import Jet2, ScalarFn

__all__ = [
    "ProfileCurve", "HelicoidalSurface", "RotationalSurface",
    "Forms1", "Forms2", "FrameField", "CurvatureData",
    "FiberKind", "FiberClass", "classify_fiber",
    "HELICOIDAL_KINDS", "ROTATIONAL_KINDS",
]

_SQRT2 = math.sqrt(2.0)

HELICOIDAL_KINDS = {"I": "elliptic", "IIa": "hyp_a", "IIb": "hyp_b",
                    "III": "parabolic"}
ROTATIONAL_KINDS = {"EllipticR1": "elliptic", "HyperbolicR2a": "hyp_a",
                    "HyperbolicR2b": "hyp_b", "ParabolicR3": "parabolic"}
_TEMPLATE_SLOTS = {"elliptic": ("x", "z", "w"), "hyp_a": ("x", "y", "w"),
                   "hyp_b": ("x", "y", "z"), "parabolic": ("x", "z", "w")}
_RADIUS_SLOT = {"elliptic": "x", "hyp_a": "w", "hyp_b": "z", "parabolic": "w"}
# slot whose nonvanishing the constructor enforces, per helicoidal kind
_NONZERO_SLOT = {"I": "x", "IIa": "w", "IIb": "z", "III": "w"}


@dataclass(frozen=True)
class Forms1:
    """First fundamental form coefficients; W is derived, never stored."""

    g11: float
    g12: float
    g22: float

    @property
    def W(self) -> float:
        return self.g11 * self.g22 - self.g12 ** 2


@dataclass(frozen=True)
class Forms2:
    """Second fundamental form coefficients for the two normals."""

    b1_11: float
    b1_12: float
    b1_22: float
    b2_11: float
    b2_12: float
    b2_22: float


@dataclass(frozen=True)
class FrameField:
    e1: Vec4
    e2: Vec4
    N1: Vec4
    N2: Vec4
    epsilon: float


@dataclass(frozen=True)
class CurvatureData:
    H1: float
    H2: float
    K: float


class FiberKind(Enum):
    EUCLIDEAN_CIRCLE = "euclidean_circle"
    SPACELIKE_HYPERBOLA = "spacelike_hyperbola"
    TIMELIKE_HYPERBOLA = "timelike_hyperbola"
    SPACELIKE_PARABOLA = "spacelike_parabola"


_FIBER_OF_KIND = {
    "EllipticR1": FiberKind.EUCLIDEAN_CIRCLE,
    "HyperbolicR2a": FiberKind.SPACELIKE_HYPERBOLA,
    "HyperbolicR2b": FiberKind.TIMELIKE_HYPERBOLA,
    "ParabolicR3": FiberKind.SPACELIKE_PARABOLA,
}


@dataclass(frozen=True)
class FiberClass:
    kind: FiberKind
    radius: float


@dataclass(frozen=True)
class ProfileCurve:
    """Four component functions of u on a shared interval; unused components
    default to the zero function."""

    x: ScalarFn
    y: ScalarFn
    z: ScalarFn
    w: ScalarFn
    interval: Tuple[float, float]

    @classmethod
    def make(cls, interval, x: Optional[ScalarFn] = None,
             y: Optional[ScalarFn] = None, z: Optional[ScalarFn] = None,
             w: Optional[ScalarFn] = None) -> "ProfileCurve":
        zero = ScalarFn.constant(0.0, interval)
        return cls(x or zero, y or zero, z or zero, w or zero,
                   (float(interval[0]), float(interval[1])))

    def component(self, name: str) -> ScalarFn:
        return getattr(self, name)


class _SurfaceBase:
    """Shared template machinery; not part of the public API."""

    def __init__(self, template: str, fns: Dict[str, ScalarFn], lam: float,
                 u_interval, v_interval, validate: bool = True,
                 samples: int = 64):
        self.template = template
        self.fns = fns
        self.lam = float(lam)
        self.u_interval = (float(u_interval[0]), float(u_interval[1]))
        self.v_interval = (float(v_interval[0]), float(v_interval[1]))
        if not self.u_interval[0] < self.u_interval[1]:
            raise DomainError(f"empty u interval {u_interval}")
        if not self.v_interval[0] < self.v_interval[1]:
            raise DomainError(f"empty v interval {v_interval}")
        if validate:
            self._validate(samples)

    # -- validation --------------------------------------------------------
    def _validate(self, samples: int):
        us = np.linspace(*self.u_interval, samples)
        vs = np.linspace(*self.v_interval, samples)
        for u in us:
            u = float(u)
            jets = self._jets(u)
            speed = max(abs(j.d1) for j in jets.values())
            if speed <= 1e-9:
                raise DomainError(f"profile curve not regular at u={u}")
            f = self._forms1_closed(jets)
            if not f.W < 0.0:
                raise DomainError(
                    f"surface is not timelike: W={f.W:.6g} at u={u}")
        # W is v-independent for every template; spot-check the generic route
        # on a coarse grid to catch wiring mistakes, not new sign changes.
        # Clamp to moderate |v|: at huge fiber parameters the generic route
        # cancels catastrophically while the closed form stays exact.
        lo, hi = self.v_interval
        c = 0.0 if lo <= 0.0 <= hi else (lo if abs(lo) < abs(hi) else hi)
        wlo, whi = max(lo, c - 4.0), min(hi, c + 4.0)
        if not wlo < whi:
            wlo, whi = lo, hi
        for u in us[:: max(1, samples // 8)]:
            for v in np.linspace(wlo, whi, 8):
                if not self.first_fundamental(float(u), float(v)).W < 0.0:
                    raise DomainError(f"W >= 0 at (u, v)=({u}, {v})")

    # -- low level ----------------------------------------------------------
    def _jets(self, u: float) -> Dict[str, Jet2]:
        return {name: self.fns[name].jet(u)
                for name in _TEMPLATE_SLOTS[self.template]}

    def _check_domain(self, u: float, v: float):
        (u0, u1), (v0, v1) = self.u_interval, self.v_interval
        su = 1e-9 * (1.0 + abs(u0) + abs(u1))
        sv = 1e-9 * (1.0 + abs(v0) + abs(v1))
        if not (u0 - su <= u <= u1 + su) or not (v0 - sv <= v <= v1 + sv):
            raise DomainError(f"(u, v)=({u}, {v}) outside declared domain "
                              f"{self.u_interval} x {self.v_interval}")

    def partials(self, u: float, v: float):
        """Position and partial derivatives (X, Xu, Xv, Xuu, Xuv, Xvv)."""
        self._check_domain(u, v)
        j = self._jets(u)
        lam = self.lam
        t = self.template
        if t == "elliptic":
            x, z, w = j["x"], j["z"], j["w"]
            cv, sv = math.cos(v), math.sin(v)
            return (
                Vec4(x.val * cv, x.val * sv, z.val, w.val + lam * v),
                Vec4(x.d1 * cv, x.d1 * sv, z.d1, w.d1),
                Vec4(-x.val * sv, x.val * cv, 0.0, lam),
                Vec4(x.d2 * cv, x.d2 * sv, z.d2, w.d2),
                Vec4(-x.d1 * sv, x.d1 * cv, 0.0, 0.0),
                Vec4(-x.val * cv, -x.val * sv, 0.0, 0.0),
            )
        if t == "hyp_a":
            x, y, w = j["x"], j["y"], j["w"]
            ch, sh = math.cosh(v), math.sinh(v)
            return (
                Vec4(x.val + lam * v, y.val, w.val * sh, w.val * ch),
                Vec4(x.d1, y.d1, w.d1 * sh, w.d1 * ch),
                Vec4(lam, 0.0, w.val * ch, w.val * sh),
                Vec4(x.d2, y.d2, w.d2 * sh, w.d2 * ch),
                Vec4(0.0, 0.0, w.d1 * ch, w.d1 * sh),
                Vec4(0.0, 0.0, w.val * sh, w.val * ch),
            )
        if t == "hyp_b":
            x, y, z = j["x"], j["y"], j["z"]
            ch, sh = math.cosh(v), math.sinh(v)
            return (
                Vec4(x.val + lam * v, y.val, z.val * ch, z.val * sh),
                Vec4(x.d1, y.d1, z.d1 * ch, z.d1 * sh),
                Vec4(lam, 0.0, z.val * sh, z.val * ch),
                Vec4(x.d2, y.d2, z.d2 * ch, z.d2 * sh),
                Vec4(0.0, 0.0, z.d1 * sh, z.d1 * ch),
                Vec4(0.0, 0.0, z.val * ch, z.val * sh),
            )
        x, z, w = j["x"], j["z"], j["w"]
        return (
            from_null_basis(x.val, _SQRT2 * v * w.val,
                            z.val + v * v * w.val + lam * v, w.val),
            from_null_basis(x.d1, _SQRT2 * v * w.d1,
                            z.d1 + v * v * w.d1, w.d1),
            from_null_basis(0.0, _SQRT2 * w.val, 2.0 * v * w.val + lam, 0.0),
            from_null_basis(x.d2, _SQRT2 * v * w.d2,
                            z.d2 + v * v * w.d2, w.d2),
            from_null_basis(0.0, _SQRT2 * w.d1, 2.0 * v * w.d1, 0.0),
            from_null_basis(0.0, 0.0, 2.0 * w.val, 0.0),
        )

    # -- first fundamental form ---------------------------------------------
    def eval(self, u: float, v: float) -> Vec4:
        return self.partials(u, v)[0]

    def first_fundamental(self, u: float, v: float) -> Forms1:
        _, Xu, Xv, *_ = self.partials(u, v)
        return Forms1(inner4(Xu, Xu), inner4(Xu, Xv), inner4(Xv, Xv))

    def _forms1_closed(self, j: Dict[str, Jet2]) -> Forms1:
        lam = self.lam
        t = self.template
        if t == "elliptic":
            x, z, w = j["x"], j["z"], j["w"]
            return Forms1(x.d1 ** 2 + z.d1 ** 2 - w.d1 ** 2, -lam * w.d1,
                          x.val ** 2 - lam ** 2)
        if t == "hyp_a":
            x, y, w = j["x"], j["y"], j["w"]
            return Forms1(x.d1 ** 2 + y.d1 ** 2 - w.d1 ** 2, lam * x.d1,
                          lam ** 2 + w.val ** 2)
        if t == "hyp_b":
            x, y, z = j["x"], j["y"], j["z"]
            return Forms1(x.d1 ** 2 + y.d1 ** 2 + z.d1 ** 2, lam * x.d1,
                          lam ** 2 - z.val ** 2)
        x, z, w = j["x"], j["z"], j["w"]
        return Forms1(x.d1 ** 2 - 2.0 * w.d1 * z.d1, -lam * w.d1,
                      2.0 * w.val ** 2)

    def first_fundamental_closed(self, u: float, v: float = 0.0) -> Forms1:
        self._check_domain(u, v)
        return self._forms1_closed(self._jets(u))

    # -- adapted frame -------------------------------------------------------
    def frame(self, u: float, v: float) -> FrameField:
        j = self._jets(u)
        f = self._forms1_closed(j)
        W = f.W
        if not W < 0.0:
            raise DomainError(f"W={W:.6g} >= 0 at (u, v)=({u}, {v})")
        if abs(f.g11) < 1e-12 * (1.0 + abs(f.g22)):
            raise DegenerateFrameError(
                f"g11={f.g11:.3e} vanishes at u={u}; epsilon undefined")
        eps = 1.0 if f.g11 > 0 else -1.0
        _, Xu, Xv, *_ = self.partials(u, v)
        e1 = Xu / math.sqrt(eps * f.g11)
        e2 = (f.g11 * Xv - f.g12 * Xu) / math.sqrt(-eps * W * f.g11)
        N1, N2 = self._normals(j, v, W)
        return FrameField(e1, e2, N1, N2, eps)

    def _normals(self, j: Dict[str, Jet2], v: float, W: float):
        lam = self.lam
        t = self.template
        mW = -W
        if t == "elliptic":
            x, z, w = j["x"], j["z"], j["w"]
            q2 = x.d1 ** 2 + z.d1 ** 2
            if q2 < 1e-24:
                raise DegenerateFrameError("x'^2 + z'^2 vanishes")
            q = math.sqrt(q2)
            cv, sv = math.cos(v), math.sin(v)
            N1 = Vec4(z.d1 * cv / q, z.d1 * sv / q, -x.d1 / q, 0.0)
            d = math.sqrt(mW * q2)
            N2 = Vec4((x.val * x.d1 * w.d1 * cv - lam * q2 * sv) / d,
                      (x.val * x.d1 * w.d1 * sv + lam * q2 * cv) / d,
                      x.val * z.d1 * w.d1 / d,
                      x.val * q2 / d)
            return N1, N2
        if t == "hyp_a":
            x, y, w = j["x"], j["y"], j["w"]
            q2 = w.d1 ** 2 - y.d1 ** 2
            if q2 < 1e-24:
                raise DegenerateFrameError("w'^2 - y'^2 not positive")
            q = math.sqrt(q2)
            ch, sh = math.cosh(v), math.sinh(v)
            N1 = Vec4(0.0, w.d1 / q, y.d1 * sh / q, y.d1 * ch / q)
            d = math.sqrt(mW * q2)
            N2 = Vec4(-w.val * q2 / d,
                      -w.val * x.d1 * y.d1 / d,
                      (lam * q2 * ch - x.d1 * w.val * w.d1 * sh) / d,
                      (lam * q2 * sh - x.d1 * w.val * w.d1 * ch) / d)
            return N1, N2
        if t == "hyp_b":
            x, y, z = j["x"], j["y"], j["z"]
            q2 = y.d1 ** 2 + z.d1 ** 2
            if q2 < 1e-24:
                raise DegenerateFrameError("y'^2 + z'^2 vanishes")
            q = math.sqrt(q2)
            ch, sh = math.cosh(v), math.sinh(v)
            N1 = Vec4(0.0, -z.d1 / q, y.d1 * ch / q, y.d1 * sh / q)
            d = math.sqrt(mW * q2)
            N2 = Vec4(-z.val * q2 / d,
                      z.val * x.d1 * y.d1 / d,
                      (x.d1 * z.val * z.d1 * ch - lam * q2 * sh) / d,
                      (x.d1 * z.val * z.d1 * sh - lam * q2 * ch) / d)
            return N1, N2
        x, z, w = j["x"], j["z"], j["w"]
        if abs(w.d1) < 1e-12:
            raise DegenerateFrameError("w' vanishes on a parabolic template")
        N1 = from_null_basis(1.0, 0.0, x.d1 / w.d1, 0.0)
        d = w.d1 * math.sqrt(mW)
        N2 = from_null_basis(
            _SQRT2 * x.d1 * w.val * w.d1 / d,
            (lam * w.d1 ** 2 + 2.0 * v * w.val * w.d1 ** 2) / d,
            _SQRT2 * (lam * v * w.d1 ** 2 + v * v * w.val * w.d1 ** 2
                      + w.val * x.d1 ** 2 - w.val * w.d1 * z.d1) / d,
            _SQRT2 * w.val * w.d1 ** 2 / d)
        return N1, N2

    # -- second fundamental form ---------------------------------------------
    def second_fundamental(self, u: float, v: float) -> Forms2:
        fr = self.frame(u, v)
        _, _, _, Xuu, Xuv, Xvv = self.partials(u, v)
        return Forms2(inner4(Xuu, fr.N1), inner4(Xuv, fr.N1),
                      inner4(Xvv, fr.N1), inner4(Xuu, fr.N2),
                      inner4(Xuv, fr.N2), inner4(Xvv, fr.N2))

    def second_fundamental_closed(self, u: float, v: float) -> Forms2:
        self._check_domain(u, v)
        j = self._jets(u)
        f = self._forms1_closed(j)
        W = f.W
        if not W < 0.0:
            raise DomainError(f"W={W:.6g} >= 0 at u={u}")
        lam = self.lam
        mW = -W
        t = self.template
        if t == "elliptic":
            x, z, w = j["x"], j["z"], j["w"]
            q2 = x.d1 ** 2 + z.d1 ** 2
            if q2 < 1e-24:
                raise DegenerateFrameError("x'^2 + z'^2 vanishes")
            q = math.sqrt(q2)
            d = math.sqrt(mW * q2)
            return Forms2(
                (x.d2 * z.d1 - x.d1 * z.d2) / q, 0.0,
                -x.val * z.d1 / q,
                x.val * (w.d1 * (x.d1 * x.d2 + z.d1 * z.d2) - w.d2 * q2) / d,
                lam * x.d1 * q / math.sqrt(mW),
                -x.val ** 2 * x.d1 * w.d1 / d)
        if t == "hyp_a":
            x, y, w = j["x"], j["y"], j["w"]
            q2 = w.d1 ** 2 - y.d1 ** 2
            if q2 < 1e-24:
                raise DegenerateFrameError("w'^2 - y'^2 not positive")
            q = math.sqrt(q2)
            d = math.sqrt(mW * q2)
            return Forms2(
                (y.d2 * w.d1 - y.d1 * w.d2) / q, 0.0,
                -w.val * y.d1 / q,
                w.val * (x.d1 * (w.d1 * w.d2 - y.d1 * y.d2) - x.d2 * q2) / d,
                lam * w.d1 * q / math.sqrt(mW),
                x.d1 * w.val ** 2 * w.d1 / d)
        if t == "hyp_b":
            x, y, z = j["x"], j["y"], j["z"]
            q2 = y.d1 ** 2 + z.d1 ** 2
            if q2 < 1e-24:
                raise DegenerateFrameError("y'^2 + z'^2 vanishes")
            q = math.sqrt(q2)
            d = math.sqrt(mW * q2)
            return Forms2(
                (y.d1 * z.d2 - y.d2 * z.d1) / q, 0.0,
                z.val * y.d1 / q,
                z.val * (x.d1 * (y.d1 * y.d2 + z.d1 * z.d2) - x.d2 * q2) / d,
                lam * z.d1 * q / math.sqrt(mW),
                x.d1 * z.val ** 2 * z.d1 / d)
        x, z, w = j["x"], j["z"], j["w"]
        if abs(w.d1) < 1e-12:
            raise DegenerateFrameError("w' vanishes on a parabolic template")
        rW = math.sqrt(mW)
        return Forms2(
            (x.d2 * w.d1 - x.d1 * w.d2) / w.d1, 0.0, 0.0,
            _SQRT2 * w.val * (x.d1 * x.d2 * w.d1 - x.d1 ** 2 * w.d2
                              + w.d1 * (z.d1 * w.d2 - w.d1 * z.d2))
            / (w.d1 * rW),
            _SQRT2 * lam * w.d1 ** 2 / rW,
            -2.0 * _SQRT2 * w.val ** 2 * w.d1 / rW)

    # -- curvature -------------------------------------------------------------
    def mean_curvature(self, u: float, v: float) -> Tuple[float, float]:
        f = self.first_fundamental(u, v)
        b = self.second_fundamental(u, v)
        W = f.W
        h1 = (b.b1_11 * f.g22 - 2.0 * b.b1_12 * f.g12 + b.b1_22 * f.g11) / (2.0 * W)
        h2 = (b.b2_11 * f.g22 - 2.0 * b.b2_12 * f.g12 + b.b2_22 * f.g11) / (2.0 * W)
        return h1, h2

    def mean_curvature_closed(self, u: float, v: float = 0.0) -> Tuple[float, float]:
        """Per-template closed forms for (H1, H2).

        The H2 denominators are written as 2*W*sqrt(-W*q2), keeping the sign
        of W explicit; folding W into the radicand would silently flip the
        sign of H2 on a timelike surface.
        """
        self._check_domain(u, v)
        j = self._jets(u)
        f = self._forms1_closed(j)
        W = f.W
        if not W < 0.0:
            raise DomainError(f"W={W:.6g} >= 0 at u={u}")
        lam = self.lam
        t = self.template
        if t == "elliptic":
            x, z, w = j["x"], j["z"], j["w"]
            q2 = x.d1 ** 2 + z.d1 ** 2
            h1 = ((x.val ** 2 - lam ** 2) * (x.d2 * z.d1 - x.d1 * z.d2)
                  - x.val * z.d1 * (q2 - w.d1 ** 2)) / (2.0 * W * math.sqrt(q2))
            h2 = (x.d1 * w.d1 * (2.0 * lam ** 2 - x.val ** 2) * q2
                  + x.val ** 2 * x.d1 * w.d1 ** 3
                  - x.val * (x.val ** 2 - lam ** 2)
                  * (x.d1 * (x.d1 * w.d2 - x.d2 * w.d1)
                     + z.d1 * (z.d1 * w.d2 - w.d1 * z.d2))) \
                / (2.0 * W * math.sqrt(-W * q2))
            return h1, h2
        if t == "hyp_a":
            x, y, w = j["x"], j["y"], j["w"]
            q2 = w.d1 ** 2 - y.d1 ** 2
            h1 = ((lam ** 2 + w.val ** 2) * (y.d2 * w.d1 - y.d1 * w.d2)
                  - w.val * y.d1 * (x.d1 ** 2 + y.d1 ** 2 - w.d1 ** 2)) \
                / (2.0 * W * math.sqrt(q2))
            h2 = (x.d1 * w.d1 * (2.0 * lam ** 2 + w.val ** 2) * (-q2)
                  + x.d1 ** 3 * w.val ** 2 * w.d1
                  + w.val * (lam ** 2 + w.val ** 2)
                  * (x.d2 * (-q2) + x.d1 * (w.d1 * w.d2 - y.d1 * y.d2))) \
                / (2.0 * W * math.sqrt(-W * q2))
            return h1, h2
        if t == "hyp_b":
            x, y, z = j["x"], j["y"], j["z"]
            q2 = y.d1 ** 2 + z.d1 ** 2
            h1 = ((lam ** 2 - z.val ** 2) * (y.d1 * z.d2 - z.d1 * y.d2)
                  + z.val * y.d1 * (x.d1 ** 2 + q2)) / (2.0 * W * math.sqrt(q2))
            h2 = (x.d1 * z.d1 * ((z.val ** 2 - 2.0 * lam ** 2) * q2
                                 + z.val ** 2 * (x.d1 ** 2 - z.val * z.d2))
                  + lam ** 2 * z.val * (x.d1 * (z.d1 * z.d2 + y.d1 * y.d2)
                                        - x.d2 * q2)
                  + z.val ** 3 * (x.d2 * q2 - x.d1 * y.d1 * y.d2)) \
                / (2.0 * W * math.sqrt(-W * q2))
            return h1, h2
        x, z, w = j["x"], j["z"], j["w"]
        h1 = w.val ** 2 * (x.d2 * w.d1 - x.d1 * w.d2) / (w.d1 * W)
        h2 = -_SQRT2 * (lam ** 2 * w.d1 ** 4
                        + 2.0 * w.val ** 2 * w.d1 ** 3 * z.d1
                        - w.val ** 3 * x.d1 ** 2 * w.d2
                        + w.val ** 3 * w.d1 * (z.d1 * w.d2 + x.d1 * x.d2)
                        - w.val ** 2 * w.d1 ** 2 * (x.d1 ** 2 + w.val * z.d2)) \
            / (w.d1 * (-W) ** 1.5)
        return h1, h2

    def gauss_curvature(self, u: float, v: float) -> float:
        f = self.first_fundamental(u, v)
        b = self.second_fundamental(u, v)
        k1 = b.b1_11 * b.b1_22 - b.b1_12 ** 2
        k2 = b.b2_11 * b.b2_22 - b.b2_12 ** 2
        return (k1 + k2) / f.W

    # -- Gauss map ---------------------------------------------------------------
    def gauss_map(self, u: float, v: float) -> Bivector6:
        f = self.first_fundamental(u, v)
        W = f.W
        if not W < 0.0:
            raise DomainError(f"W={W:.6g} >= 0 at (u, v)=({u}, {v})")
        eps = 1.0 if f.g11 > 0 else -1.0
        _, Xu, Xv, *_ = self.partials(u, v)
        return (eps / math.sqrt(-W)) * wedge(Xu, Xv)

    def gauss_map_closed(self, u: float, v: float) -> Bivector6:
        self._check_domain(u, v)
        j = self._jets(u)
        f = self._forms1_closed(j)
        W = f.W
        if not W < 0.0:
            raise DomainError(f"W={W:.6g} >= 0 at u={u}")
        lam = self.lam
        fac = (1.0 if f.g11 > 0 else -1.0) / math.sqrt(-W)
        t = self.template
        if t == "elliptic":
            x, z, w = j["x"], j["z"], j["w"]
            cv, sv = math.cos(v), math.sin(v)
            return fac * Bivector6(
                x.val * x.d1,
                x.val * z.d1 * sv,
                lam * x.d1 * cv + x.val * w.d1 * sv,
                -x.val * z.d1 * cv,
                lam * x.d1 * sv - x.val * w.d1 * cv,
                lam * z.d1)
        if t == "hyp_a":
            x, y, w = j["x"], j["y"], j["w"]
            ch, sh = math.cosh(v), math.sinh(v)
            return fac * Bivector6(
                -lam * y.d1,
                x.d1 * w.val * ch - lam * w.d1 * sh,
                x.d1 * w.val * sh - lam * w.d1 * ch,
                y.d1 * w.val * ch,
                y.d1 * w.val * sh,
                -w.val * w.d1)
        if t == "hyp_b":
            x, y, z = j["x"], j["y"], j["z"]
            ch, sh = math.cosh(v), math.sinh(v)
            return fac * Bivector6(
                -lam * y.d1,
                x.d1 * z.val * sh - lam * z.d1 * ch,
                x.d1 * z.val * ch - lam * z.d1 * sh,
                y.d1 * z.val * sh,
                y.d1 * z.val * ch,
                z.val * z.d1)
        x, z, w = j["x"], j["z"], j["w"]
        # coefficients on the mixed basis, then rewritten on eta_i ^ eta_j:
        # e1^xi3 = (e14 - e13)/s2, e2^xi3 = (e24 - e23)/s2,
        # e2^xi4 = (e23 + e24)/s2, xi3^xi4 = -e34.
        t12 = _SQRT2 * x.d1 * w.val
        t13 = x.d1 * (lam + 2.0 * v * w.val)
        t23 = _SQRT2 * (v * v * w.val * w.d1 - w.val * z.d1 + lam * v * w.d1)
        t24 = -_SQRT2 * w.val * w.d1
        t34 = -w.d1 * (lam + 2.0 * v * w.val)
        return fac * Bivector6(
            t12,
            -t13 / _SQRT2,
            t13 / _SQRT2,
            (-t23 + t24) / _SQRT2,
            (t23 + t24) / _SQRT2,
            -t34)


class HelicoidalSurface(_SurfaceBase):
    """Orbit of a profile curve under a rotation-plus-translation motion;
    kinds I / IIa / IIb / III select the elliptic, two hyperbolic, and
    parabolic motions.  Requires pitch lam > 0 and W < 0 on the domain."""

    def __init__(self, kind: str, profile: ProfileCurve, lam: float,
                 v_interval=None, validate: bool = True, samples: int = 64):
        if kind not in HELICOIDAL_KINDS:
            raise DomainError(f"unknown helicoidal kind {kind!r}")
        if not lam > 0.0:
            raise DomainError("pitch lam must be strictly positive")
        self.kind = kind
        self.profile = profile
        template = HELICOIDAL_KINDS[kind]
        fns = {name: profile.component(name)
               for name in _TEMPLATE_SLOTS[template]}
        if v_interval is None:
            v_interval = (0.0, 2.0 * math.pi) if kind == "I" else (-3.0, 3.0)
        super().__init__(template, fns, lam, profile.interval, v_interval,
                         validate=False)
        if validate:
            self._validate_kind(samples)
            self._validate(samples)

    def _validate_kind(self, samples: int):
        us = np.linspace(*self.u_interval, samples)
        slot = _NONZERO_SLOT[self.kind]
        fn = self.fns[slot]
        for u in us:
            if abs(fn(float(u))) <= 1e-9:
                raise DomainError(
                    f"kind {self.kind} needs {slot}(u) != 0; fails at u={u}")
        if self.kind == "III":
            for u in us:
                if abs(self.fns["w"].d1(float(u))) <= 1e-9:
                    raise DomainError(f"kind III needs w'(u) != 0; fails at u={u}")


class RotationalSurface(_SurfaceBase):
    """Rotational surface (pitch zero) of one of the four fiber kinds.

    Profile components live in the same letter slots as the matching
    helicoidal kind; the designated radius slot must stay nonzero (and
    positive except on the parabolic template, where only w != 0 is needed).
    """

    def __init__(self, kind: str, fns: Dict[str, ScalarFn], u_interval,
                 v_interval=(-3.0, 3.0), validate: bool = True,
                 samples: int = 64):
        if kind not in ROTATIONAL_KINDS:
            raise DomainError(f"unknown rotational kind {kind!r}")
        self.kind = kind
        template = ROTATIONAL_KINDS[kind]
        missing = [s for s in _TEMPLATE_SLOTS[template] if s not in fns]
        if missing:
            raise DomainError(f"kind {kind} needs profile slots {missing}")
        super().__init__(template, dict(fns), 0.0, u_interval, v_interval,
                         validate=False)
        if validate:
            self._validate_radius(samples)
            self._validate(samples)

    @property
    def radius_fn(self) -> ScalarFn:
        return self.fns[_RADIUS_SLOT[self.template]]

    def _validate_radius(self, samples: int):
        us = np.linspace(*self.u_interval, samples)
        parabolic = self.template == "parabolic"
        for u in us:
            r = self.radius_fn(float(u))
            ok = abs(r) > 1e-12 if parabolic else r > 1e-12
            if not ok:
                raise DomainError(
                    f"radius function must stay {'nonzero' if parabolic else 'positive'};"
                    f" value {r:.3e} at u={u}")


def classify_fiber(surface: RotationalSurface, u0: float) -> FiberClass:
    """Classify the fiber curve u = u0 of a rotational surface."""
    lo, hi = surface.u_interval
    if not lo - 1e-12 <= u0 <= hi + 1e-12:
        raise DomainError(f"u0={u0} outside [{lo}, {hi}]")
    return FiberClass(_FIBER_OF_KIND[surface.kind],
                      abs(surface.radius_fn(float(u0))))
