"""The Bour correspondence for timelike helicoidal surfaces.

For every admissible branch this module builds the isometric rotational
partner of a helicoidal surface: the coordinate change (u, v) -> (u, v +
offset(u)) that diagonalizes the induced metric, the pair of auxiliary
profile functions (a, b) tied together by one branch constraint equation,
and the partner parametrized through cumulative integrals.  The closed-form
minimal families, on which the two surfaces share their Gauss map, are
constructed with exact profile functions and the phase constant that makes
the Gauss maps agree pointwise, not merely up to a fiber rotation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np

from .errors import (BranchDomainError, ConstraintError, DomainError)
from .minkowski import Vec4
from .numerics import CumulativeFn, Jet2, ScalarFn, cumulative
from .numerics import jets as jm
from .surfaces import HelicoidalSurface, ProfileCurve, RotationalSurface

__all__ = [
    "Branch", "BRANCH_NAMES", "BourFunctions", "CoordChange",
    "MinimalFamilyParams", "SurfacePair", "GaussMapVerdict",
    "reparametrize", "ab_constraint_residual", "constraint_rhs",
    "complete_bour_functions", "partner", "bernoulli_closed_form",
    "minimal_family", "canonical_parabolic_pair", "gauss_map_verdict",
    "partner_mean_curvature_closed",
]

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class Branch:
    name: str
    source_kind: str
    rot_kind: str
    relation: str          # "diff": a^2-b^2, "sum": a^2+b^2, "parab": a^2-2b


_BRANCHES = {
    "R1_1": Branch("R1_1", "I", "EllipticR1", "diff"),
    "R1_2": Branch("R1_2", "I", "HyperbolicR2a", "sum"),
    "R1_3": Branch("R1_3", "I", "HyperbolicR2b", "sum"),
    "R2a_1": Branch("R2a_1", "IIa", "EllipticR1", "diff"),
    "R2a_2": Branch("R2a_2", "IIa", "HyperbolicR2a", "sum"),
    "R2b_1": Branch("R2b_1", "IIb", "EllipticR1", "diff"),
    "R2b_2": Branch("R2b_2", "IIb", "HyperbolicR2a", "sum"),
    "R2b_3": Branch("R2b_3", "IIb", "HyperbolicR2b", "sum"),
    "R3": Branch("R3", "III", "ParabolicR3", "parab"),
}
BRANCH_NAMES = tuple(_BRANCHES)


def branch(name: str) -> Branch:
    if isinstance(name, Branch):
        return name
    try:
        return _BRANCHES[name]
    except KeyError:
        raise DomainError(f"unknown branch {name!r}; one of {BRANCH_NAMES}") from None


@dataclass(frozen=True)
class BourFunctions:
    a: ScalarFn
    b: ScalarFn


@dataclass(frozen=True)
class CoordChange:
    """The parameter change (u, v) -> (u, v + offset(u)); unit Jacobian."""

    offset: ScalarFn

    def map_point(self, u: float, v: float) -> Tuple[float, float]:
        return u, v + self.offset(u)


class GaussMapVerdict(Enum):
    ALWAYS_EQUAL_ON_MINIMAL_FAMILY = "equal_on_minimal_family"
    ALWAYS_EQUAL = "always_equal"
    NEVER_EQUAL = "never_equal"


_VERDICTS = {
    ("I", "R1_1"): GaussMapVerdict.ALWAYS_EQUAL_ON_MINIMAL_FAMILY,
    ("I", "R1_2"): GaussMapVerdict.NEVER_EQUAL,
    ("I", "R1_3"): GaussMapVerdict.NEVER_EQUAL,
    ("IIa", "R2a_1"): GaussMapVerdict.NEVER_EQUAL,
    ("IIa", "R2a_2"): GaussMapVerdict.ALWAYS_EQUAL_ON_MINIMAL_FAMILY,
    ("IIb", "R2b_1"): GaussMapVerdict.NEVER_EQUAL,
    ("IIb", "R2b_2"): GaussMapVerdict.ALWAYS_EQUAL_ON_MINIMAL_FAMILY,
    ("IIb", "R2b_3"): GaussMapVerdict.ALWAYS_EQUAL_ON_MINIMAL_FAMILY,
    ("III", "R3"): GaussMapVerdict.ALWAYS_EQUAL,
}


def gauss_map_verdict(kind: str, br) -> GaussMapVerdict:
    b = branch(br)
    try:
        return _VERDICTS[(kind, b.name)]
    except KeyError:
        raise DomainError(f"branch {b.name} does not apply to kind {kind}") from None


@dataclass(frozen=True)
class MinimalFamilyParams:
    lam: float
    c3: float
    c1: float = 0.0
    c2: float = 0.0
    c4: float = 0.0
    sign: int = 1


@dataclass
class SurfacePair:
    helicoidal: HelicoidalSurface
    rotational: RotationalSurface
    change: CoordChange
    ab: BourFunctions
    branch: Branch
    orientation: float = 1.0

    def map_point(self, u: float, v: float) -> Tuple[float, float]:
        return self.change.map_point(u, v)

    def rotational_at(self, u: float, v: float) -> Vec4:
        """The partner point corresponding to the helicoidal point (u, v)."""
        return self.rotational.eval(*self.change.map_point(u, v))


# The sign of g11 on a rotational template is forced by W < 0 and the sign
# of g22: -1 wherever the fiber term is positive (circle, first hyperbolic,
# parabolic templates), +1 on the second hyperbolic template.
_ROT_MERIDIAN_SIGN = {"R1_1": -1.0, "R1_2": -1.0, "R1_3": 1.0,
                      "R2a_1": -1.0, "R2a_2": -1.0,
                      "R2b_1": -1.0, "R2b_2": -1.0, "R2b_3": 1.0,
                      "R3": -1.0}


def _meridian_sign(X: HelicoidalSurface, u: float) -> float:
    return math.copysign(1.0, X.first_fundamental_closed(u).g11)


def pair_orientation(X: HelicoidalSurface, br) -> float:
    """Product of the two surfaces' meridian signs at the domain midpoint.

    The Gauss maps of a matched pair agree exactly when this is +1 and flip
    sign as oriented planes when it is -1 (the epsilon normalizations of the
    two surfaces then disagree).
    """
    bb = branch(br)
    mid = 0.5 * (X.u_interval[0] + X.u_interval[1])
    return _meridian_sign(X, mid) * _ROT_MERIDIAN_SIGN[bb.name]


# ---------------------------------------------------------------------------
# branch data: sign quantities, constraint right-hand sides, integrands
# ---------------------------------------------------------------------------

def _djet(j: Jet2) -> Jet2:
    """Treat the derivative of a profile as a value with one valid
    derivative; the second slot is unavailable (profiles carry order 2)."""
    return Jet2(j.d1, j.d2, 0.0)


def _rhs_jet(X: HelicoidalSurface, br: Branch, u: float) -> Jet2:
    """Constraint right-hand side as a jet (value and du-derivative valid)."""
    lam = X.lam
    j = X._jets(u)
    if br.source_kind == "I":
        x, xp = j["x"], _djet(j["x"])
        zp, wp = _djet(j["z"]), _djet(j["w"])
        if abs(x.val) < 1e-12 or abs(xp.val) < 1e-12:
            raise DomainError(f"x(u) x'(u) = 0 at u={u}: constraint undefined")
        den = x * x * xp * xp
        if br.name == "R1_1":
            num = x * x * (zp * zp - wp * wp) - lam ** 2 * (xp * xp + zp * zp)
        elif br.name == "R1_2":
            num = ((x * x - lam ** 2) * (xp * xp + zp * zp)
                   + x * x * (xp * xp - wp * wp))
        else:
            num = ((lam ** 2 - x * x) * (xp * xp + zp * zp)
                   - x * x * (xp * xp - wp * wp))
        return num / den
    if br.source_kind == "IIa":
        w, wp = j["w"], _djet(j["w"])
        xp, yp = _djet(j["x"]), _djet(j["y"])
        if abs(w.val) < 1e-12 or abs(wp.val) < 1e-12:
            raise DomainError(f"w(u) w'(u) = 0 at u={u}: constraint undefined")
        den = w * w * wp * wp
        if br.name == "R2a_1":
            num = (lam ** 2 * (yp * yp - wp * wp)
                   + w * w * (xp * xp + yp * yp - 2.0 * wp * wp))
        else:
            num = w * w * (xp * xp + yp * yp) + lam ** 2 * (yp * yp - wp * wp)
        return num / den
    if br.source_kind == "IIb":
        z, zp = j["z"], _djet(j["z"])
        xp, yp = _djet(j["x"]), _djet(j["y"])
        if abs(z.val) < 1e-12 or abs(zp.val) < 1e-12:
            raise DomainError(f"z(u) z'(u) = 0 at u={u}: constraint undefined")
        den = z * z * zp * zp
        if br.name == "R2b_1":
            num = (lam ** 2 * (yp * yp + zp * zp)
                   - z * z * (xp * xp + yp * yp + 2.0 * zp * zp))
        elif br.name == "R2b_2":
            num = lam ** 2 * (yp * yp + zp * zp) - z * z * (xp * xp + yp * yp)
        else:
            num = z * z * (xp * xp + yp * yp) - lam ** 2 * (yp * yp + zp * zp)
        return num / den
    w, wp = j["w"], _djet(j["w"])
    xp, zp = _djet(j["x"]), _djet(j["z"])
    if abs(w.val) < 1e-12 or abs(wp.val) < 1e-12:
        raise DomainError(f"w(u) w'(u) = 0 at u={u}: constraint undefined")
    return (xp * xp - 2.0 * wp * zp) / (wp * wp) - lam ** 2 / (2.0 * w * w)


def constraint_rhs(X: HelicoidalSurface, br, u: float) -> float:
    """Right-hand side of the branch constraint at u."""
    return _rhs_jet(X, branch(br), u).val


def ab_constraint_residual(X: HelicoidalSurface, br, ab: BourFunctions,
                           u: float) -> float:
    """LHS - RHS of the branch constraint equation at u."""
    b = branch(br)
    if b.source_kind != X.kind:
        raise DomainError(f"branch {b.name} does not apply to kind {X.kind}")
    rhs = constraint_rhs(X, b, u)
    av, bv = ab.a(u), ab.b(u)
    if b.relation == "diff":
        lhs = av * av - bv * bv
    elif b.relation == "sum":
        lhs = av * av + bv * bv
    else:
        lhs = av * av - 2.0 * bv
    return lhs - rhs


def _sign_quantity(X: HelicoidalSurface, br: Branch, u: float) -> float:
    """Quantity that must stay positive on the branch domain."""
    lam = X.lam
    if br.name in ("R1_1", "R1_2"):
        return X.fns["x"](u) ** 2 - lam ** 2
    if br.name == "R1_3":
        return lam ** 2 - X.fns["x"](u) ** 2
    if br.name in ("R2a_1", "R2a_2"):
        return lam ** 2 + X.fns["w"](u) ** 2
    if br.name in ("R2b_1", "R2b_2"):
        return lam ** 2 - X.fns["z"](u) ** 2
    if br.name == "R2b_3":
        return X.fns["z"](u) ** 2 - lam ** 2
    return X.fns["w"](u) ** 2


def complete_bour_functions(X: HelicoidalSurface, br, *,
                            a: Optional[ScalarFn] = None,
                            b: Optional[ScalarFn] = None) -> BourFunctions:
    """Supply one of (a, b) and solve the branch constraint for the other.

    The solved function takes the nonnegative square root where a root is
    involved; evaluation raises DomainError where no real solution exists.
    """
    br = branch(br)
    if (a is None) == (b is None):
        raise ValueError("provide exactly one of a, b")
    given, solve_for_b = (a, True) if a is not None else (b, False)

    def rule(u: float) -> Jet2:
        rhs = _rhs_jet(X, br, u)
        g = Jet2(given(u), given.d1(u), 0.0)
        if br.relation == "parab":
            if solve_for_b:
                return (g * g - rhs) * 0.5
            opnd = rhs + 2.0 * g
        elif br.relation == "diff":
            opnd = (g * g - rhs) if solve_for_b else (rhs + g * g)
        else:
            opnd = rhs - g * g
        if opnd.val < 0.0:
            raise DomainError(
                f"no real solution of the {br.name} constraint at u={u}")
        return jm.sqrt(opnd)

    solved = ScalarFn(fn=lambda u: rule(u).val, d1=lambda u: rule(u).d1,
                      interval=X.u_interval)
    return BourFunctions(a=given, b=solved) if solve_for_b \
        else BourFunctions(a=solved, b=given)


# ---------------------------------------------------------------------------
# coordinate change and partner construction
# ---------------------------------------------------------------------------

def _offset_integrand(X: HelicoidalSurface) -> ScalarFn:
    lam = X.lam
    if X.kind == "I":
        f, g = X.fns["w"], X.fns["x"]
        rule = lambda u: -lam * _djet(f.jet(u)) / (g.jet(u) * g.jet(u) - lam ** 2)  # noqa: E731
    elif X.kind == "IIa":
        f, g = X.fns["x"], X.fns["w"]
        rule = lambda u: lam * _djet(f.jet(u)) / (lam ** 2 + g.jet(u) * g.jet(u))  # noqa: E731
    elif X.kind == "IIb":
        f, g = X.fns["x"], X.fns["z"]
        rule = lambda u: lam * _djet(f.jet(u)) / (lam ** 2 - g.jet(u) * g.jet(u))  # noqa: E731
    else:
        raise DomainError("kind III has a closed-form offset; no integrand")
    return ScalarFn(fn=lambda u: rule(u).val, d1=lambda u: rule(u).d1,
                    interval=X.u_interval)


def reparametrize(X: HelicoidalSurface, br, *, tol: float = 1e-10,
                  phase_constant: float = 0.0) -> CoordChange:
    """Coordinate change making the induced metric diagonal for this branch."""
    bb = branch(br)
    if bb.source_kind != X.kind:
        raise DomainError(f"branch {bb.name} does not apply to kind {X.kind}")
    _require_branch_domain(X, bb)
    if X.kind == "III":
        lam, w = X.lam, X.fns["w"]
        off = ScalarFn.from_jet_rule(lambda u: (0.5 * lam) / w.jet(u),
                                     X.u_interval)
        return CoordChange(off.shifted(phase_constant))
    mid = 0.5 * (X.u_interval[0] + X.u_interval[1])
    off = cumulative(_offset_integrand(X), mid, X.u_interval, tol=tol)
    return CoordChange(off.shifted(phase_constant))


def _require_branch_domain(X: HelicoidalSurface, br: Branch,
                           samples: int = 65):
    us = np.linspace(*X.u_interval, samples)
    for u in us:
        q = _sign_quantity(X, br, float(u))
        if not q > 0.0:
            raise BranchDomainError(
                f"branch {br.name} needs its sign condition > 0; value "
                f"{q:.6g} at u={float(u)}")


def _component_integrand(X: HelicoidalSurface, br: Branch,
                         f: ScalarFn, negate: bool) -> ScalarFn:
    """Integrand of a partner profile component: (+/-) f * g with the
    branch's radial factor g."""
    lam = X.lam
    sgn = -1.0 if negate else 1.0
    if br.source_kind == "I":
        x = X.fns["x"]
        if br.name == "R1_3":
            def g(u):
                jx = x.jet(u)
                return jx * _djet(jx) / jm.sqrt(lam ** 2 - jx * jx)
        else:
            def g(u):
                jx = x.jet(u)
                return jx * _djet(jx) / jm.sqrt(jx * jx - lam ** 2)
    elif br.source_kind == "IIa":
        w = X.fns["w"]

        def g(u):
            jw = w.jet(u)
            return jw * _djet(jw) / jm.sqrt(lam ** 2 + jw * jw)
    elif br.source_kind == "IIb":
        z = X.fns["z"]
        if br.name == "R2b_3":
            def g(u):
                jz = z.jet(u)
                return jz * _djet(jz) / jm.sqrt(jz * jz - lam ** 2)
        else:
            def g(u):
                jz = z.jet(u)
                return jz * _djet(jz) / jm.sqrt(lam ** 2 - jz * jz)
    else:
        w = X.fns["w"]

        def g(u):
            return _djet(w.jet(u))

    def rule(u: float) -> Jet2:
        fj = Jet2(f(u), f.d1(u), 0.0)
        return sgn * fj * g(u)

    return ScalarFn(fn=lambda u: rule(u).val, d1=lambda u: rule(u).d1,
                    interval=X.u_interval)


def _radius_fn(X: HelicoidalSurface, br: Branch) -> ScalarFn:
    lam = X.lam
    if br.name in ("R1_1", "R1_2"):
        x = X.fns["x"]
        return ScalarFn.from_jet_rule(
            lambda u: jm.sqrt(x.jet(u) * x.jet(u) - lam ** 2), X.u_interval)
    if br.name == "R1_3":
        x = X.fns["x"]
        return ScalarFn.from_jet_rule(
            lambda u: jm.sqrt(lam ** 2 - x.jet(u) * x.jet(u)), X.u_interval)
    if br.source_kind == "IIa":
        w = X.fns["w"]
        return ScalarFn.from_jet_rule(
            lambda u: jm.sqrt(lam ** 2 + w.jet(u) * w.jet(u)), X.u_interval)
    if br.name in ("R2b_1", "R2b_2"):
        z = X.fns["z"]
        return ScalarFn.from_jet_rule(
            lambda u: jm.sqrt(lam ** 2 - z.jet(u) * z.jet(u)), X.u_interval)
    if br.name == "R2b_3":
        z = X.fns["z"]
        return ScalarFn.from_jet_rule(
            lambda u: jm.sqrt(z.jet(u) * z.jet(u) - lam ** 2), X.u_interval)
    return X.fns["w"]


# partner profile layout: rotational slot -> ("radius" | ("a"|"b", negate))
_PARTNER_LAYOUT = {
    "R1_1": {"x": "radius", "z": ("a", False), "w": ("b", False)},
    "R1_2": {"x": ("a", False), "y": ("b", False), "w": "radius"},
    "R1_3": {"x": ("a", True), "y": ("b", True), "z": "radius"},
    "R2a_1": {"x": "radius", "z": ("a", False), "w": ("b", False)},
    "R2a_2": {"x": ("a", False), "y": ("b", False), "w": "radius"},
    "R2b_1": {"x": "radius", "z": ("a", True), "w": ("b", True)},
    "R2b_2": {"x": ("a", True), "y": ("b", True), "w": "radius"},
    "R2b_3": {"x": ("a", False), "y": ("b", False), "z": "radius"},
    "R3": {"x": ("a", False), "z": ("b", False), "w": "radius"},
}


def partner(X: HelicoidalSurface, br, ab: BourFunctions, *,
            closed_components: Optional[Dict[str, ScalarFn]] = None,
            component_constants: Optional[Dict[str, float]] = None,
            phase_constant: float = 0.0,
            cross_check: bool = True,
            cross_check_interval=None,
            tol: float = 1e-10,
            constraint_tol: float = 1e-6,
            samples: int = 65) -> SurfacePair:
    """Construct the isometric rotational partner for one branch.

    Partner profile components are cumulative integrals anchored at the
    midpoint of the u-interval (value 0) unless ``closed_components`` maps a
    rotational slot to an exact function, in which case the closed form is
    used and, when ``cross_check`` is set, verified against the quadrature
    route up to an additive constant.
    """
    bb = branch(br)
    if bb.source_kind != X.kind:
        raise DomainError(f"branch {bb.name} does not apply to kind {X.kind}")
    _require_branch_domain(X, bb, samples)
    us = np.linspace(*X.u_interval, samples)
    worst = max(abs(ab_constraint_residual(X, bb, ab, float(u))) for u in us)
    if worst > constraint_tol:
        raise ConstraintError(
            f"constraint residual {worst:.3e} exceeds {constraint_tol:.1e} "
            f"for branch {bb.name}")

    closed_components = closed_components or {}
    component_constants = component_constants or {}
    mid = 0.5 * (X.u_interval[0] + X.u_interval[1])
    fns: Dict[str, ScalarFn] = {}
    for slot, role in _PARTNER_LAYOUT[bb.name].items():
        if role == "radius":
            fns[slot] = _radius_fn(X, bb)
            continue
        which, negate = role
        integrand = _component_integrand(
            X, bb, ab.a if which == "a" else ab.b, negate)
        shift = component_constants.get(slot, 0.0)
        if slot in closed_components:
            fns[slot] = closed_components[slot]
            if cross_check:
                _cross_check_component(
                    integrand, fns[slot],
                    cross_check_interval or X.u_interval, tol)
        else:
            fns[slot] = cumulative(integrand, mid, X.u_interval,
                                   tol=tol).shifted(shift)

    change = reparametrize(X, bb, tol=tol, phase_constant=phase_constant)
    dense = np.linspace(*X.u_interval, 257)
    offs = [change.offset(float(u)) for u in dense]
    v0, v1 = X.v_interval
    pad = 1e-6 + 0.05 * (max(offs) - min(offs) + v1 - v0)
    rot = RotationalSurface(
        bb.rot_kind, fns, X.u_interval,
        v_interval=(v0 + min(offs) - pad, v1 + max(offs) + pad))
    return SurfacePair(X, rot, change, ab, bb,
                       orientation=pair_orientation(X, bb))


def _cross_check_component(integrand: ScalarFn, closed: ScalarFn,
                           interval, tol: float, points: int = 33):
    ref = cumulative(integrand, 0.5 * (interval[0] + interval[1]), interval,
                     tol=tol)
    us = np.linspace(*interval, points)
    mid = 0.5 * (interval[0] + interval[1])
    base = closed(mid)
    worst = max(abs((closed(float(u)) - base) - ref(float(u))) for u in us)
    if worst > 1e-6:
        raise ConstraintError(
            f"closed-form partner component disagrees with quadrature by "
            f"{worst:.3e}")


# ---------------------------------------------------------------------------
# Bernoulli closed forms and minimal families
# ---------------------------------------------------------------------------

def bernoulli_closed_form(kind: str, br, c3: float, lam: float,
                          profile_free: ScalarFn) -> ScalarFn:
    """Squared solution of the branch's Bernoulli equation.

    The returned function is b^2 for (I, R1_1) and a^2 for the IIa/IIb
    branches; ``profile_free`` is the family's free profile component
    (x for I, w for IIa, z for IIb).
    """
    bb = branch(br)
    key = (kind, bb.name)
    f = profile_free

    def make(den_rule):
        def rule(u: float) -> Jet2:
            den = den_rule(f.jet(u))
            if den.val <= 0.0:
                raise DomainError(
                    f"Bernoulli closed form undefined at u={u}: "
                    f"denominator {den.val:.6g} <= 0")
            return 1.0 / den
        return ScalarFn.from_jet_rule(rule, f.interval)

    if key == ("I", "R1_1"):
        return make(lambda j: 1.0 + c3 * (j * j - lam ** 2))
    if key == ("IIa", "R2a_2"):
        return make(lambda j: 1.0 + c3 * (lam ** 2 + j * j))
    if key == ("IIb", "R2b_2"):
        return make(lambda j: 1.0 + c3 * (lam ** 2 - j * j))
    if key == ("IIb", "R2b_3"):
        return make(lambda j: c3 * (j * j - lam ** 2) - 1.0)
    raise DomainError(f"no Bernoulli family for kind {kind}, branch {bb.name}")


def _sqrt_jet_fn(rule, interval) -> ScalarFn:
    return ScalarFn.from_jet_rule(rule, interval)


def minimal_family(kind: str, br, params: MinimalFamilyParams,
                   profile_free, *, v_interval=None,
                   cross_check_interval=None, tol: float = 1e-10) -> SurfacePair:
    """Closed-form family on which helicoidal surface and partner share
    their Gauss map.

    ``profile_free`` is the free profile component (x(u) for kind I, w(u)
    for IIa, z(u) for IIb), or the full :class:`ProfileCurve` for kind III,
    where every surface admits the canonical equal-Gauss-map partner and the
    constants c3/c4 play no role.
    """
    bb = branch(br)
    lam = float(params.lam)
    if kind == "III":
        if not isinstance(profile_free, ProfileCurve):
            raise DomainError("kind III takes the full ProfileCurve")
        X = HelicoidalSurface("III", profile_free, lam,
                              v_interval=v_interval)
        return canonical_parabolic_pair(X, cross_check_interval=cross_check_interval,
                                        tol=tol)
    if kind == "I":
        return _minimal_family_elliptic(bb, params, profile_free, v_interval,
                                        cross_check_interval, tol)
    if kind == "IIa":
        return _minimal_family_hyp_a(bb, params, profile_free, v_interval,
                                     cross_check_interval, tol)
    if kind == "IIb":
        return _minimal_family_hyp_b(bb, params, profile_free, v_interval,
                                     cross_check_interval, tol)
    raise DomainError(f"no minimal family for kind {kind!r}")


def _central(interval, frac=0.5):
    lo, hi = interval
    c, h = 0.5 * (lo + hi), 0.5 * (hi - lo)
    return (c - frac * h, c + frac * h)


def _require_constant_meridian(X: HelicoidalSurface, samples: int = 65):
    us = np.linspace(*X.u_interval, samples)
    signs = {_meridian_sign(X, float(u)) for u in us}
    if len(signs) > 1:
        raise DomainError(
            "the meridian causal character changes inside the u-interval; "
            "no single phase constant matches the Gauss maps across the "
            "transition - shrink the interval")


def _minimal_family_elliptic(bb: Branch, params: MinimalFamilyParams,
                             x: ScalarFn, v_interval, cc_int, tol):
    if bb.name != "R1_1":
        raise DomainError("the kind-I minimal family lives on branch R1_1")
    if not params.c3 < 0.0:
        raise DomainError("kind I requires c3 < 0")
    lam, c3, s = params.lam, params.c3, float(params.sign)
    interval = x.interval

    def w_rule(u: float) -> Jet2:
        jx = x.jet(u)
        q = jx * jx - lam ** 2          # > 0 on the branch domain
        den = 1.0 + c3 * q              # > 0 where the family exists
        if q.val <= 0.0 or den.val <= 0.0:
            raise DomainError(
                f"family undefined at u={u}: x^2-lam^2={q.val:.6g}, "
                f"1+c3(x^2-lam^2)={den.val:.6g}")
        term1 = math.sqrt((c3 * lam ** 2 - 1.0) / c3) * jm.asin(
            jm.sqrt((-c3) * q))
        term2 = lam * jm.atan(jm.sqrt((1.0 - c3 * lam ** 2) * q)
                              / (lam * jm.sqrt(den)))
        return s * (term1 - term2)

    w = ScalarFn.from_jet_rule(w_rule, interval)
    bsq = bernoulli_closed_form("I", bb, c3, lam, x)
    b = ScalarFn.from_jet_rule(lambda u: jm.sqrt(bsq.jet(u)), interval)
    a = ScalarFn.constant(0.0, interval)

    profile = ProfileCurve.make(interval, x=x,
                                z=ScalarFn.constant(params.c1, interval), w=w)
    X = HelicoidalSurface("I", profile, lam, v_interval=v_interval)
    _require_constant_meridian(X)

    # phase constant that matches the raw wedge fields pointwise: the fiber
    # angle theta = -offset satisfies sin = -lam/(b x), cos = w'/(b x');
    # the normalized Gauss maps then agree up to the pair orientation sigma.
    mid = 0.5 * (interval[0] + interval[1])
    theta = math.atan2(-lam / (b(mid) * x(mid)),
                       w.d1(mid) / (b(mid) * x.d1(mid)))
    phase = -theta

    def r_closed(u: float) -> Jet2:
        jx = x.jet(u)
        return (1.0 / math.sqrt(-c3)) * jm.asin(
            jm.sqrt((-c3) * (jx * jx - lam ** 2))) + params.c4

    closed = {"z": ScalarFn.constant(params.c2, interval),
              "w": ScalarFn.from_jet_rule(r_closed, interval)}
    return partner(X, bb, BourFunctions(a, b), closed_components=closed,
                   phase_constant=phase, tol=tol,
                   cross_check_interval=cc_int or _central(interval))


def _minimal_family_hyp_a(bb: Branch, params: MinimalFamilyParams,
                          w: ScalarFn, v_interval, cc_int, tol):
    if bb.name != "R2a_2":
        raise DomainError("the kind-IIa minimal family lives on branch R2a_2")
    if not params.c3 > 0.0:
        raise DomainError("kind IIa requires c3 > 0")
    lam, c3, s = params.lam, params.c3, float(params.sign)
    interval = w.interval

    def x_rule(u: float) -> Jet2:
        jw = w.jet(u)
        q = lam ** 2 + jw * jw
        den = 1.0 + c3 * q
        term1 = (math.sqrt(1.0 + c3 * lam ** 2) / math.sqrt(c3)) * jm.asinh(
            jm.sqrt(c3 * q))
        term2 = lam * jm.atanh(lam * jm.sqrt(den)
                               / jm.sqrt((1.0 + c3 * lam ** 2) * q))
        return s * (term1 - term2)

    x = ScalarFn.from_jet_rule(x_rule, interval)
    profile = ProfileCurve.make(interval, x=x,
                                y=ScalarFn.constant(params.c1, interval), w=w)
    X = HelicoidalSurface("IIa", profile, lam, v_interval=v_interval)
    _require_constant_meridian(X)

    mid = 0.5 * (interval[0] + interval[1])
    asq = bernoulli_closed_form("IIa", bb, c3, lam, w)
    sign_a = math.copysign(1.0, x.d1(mid) / w.d1(mid))
    a = ScalarFn.from_jet_rule(lambda u: sign_a * jm.sqrt(asq.jet(u)),
                               interval)
    b = ScalarFn.constant(0.0, interval)
    phase = math.asinh(-lam / (a(mid) * w(mid)))

    def n_closed(u: float) -> Jet2:
        jw = w.jet(u)
        return sign_a * (1.0 / math.sqrt(c3)) * jm.asinh(
            jm.sqrt(c3 * (lam ** 2 + jw * jw))) + params.c4

    closed = {"x": ScalarFn.from_jet_rule(n_closed, interval),
              "y": ScalarFn.constant(params.c2, interval)}
    return partner(X, bb, BourFunctions(a, b), closed_components=closed,
                   phase_constant=phase, tol=tol,
                   cross_check_interval=cc_int or _central(interval))


def _minimal_family_hyp_b(bb: Branch, params: MinimalFamilyParams,
                          z: ScalarFn, v_interval, cc_int, tol):
    if bb.name not in ("R2b_2", "R2b_3"):
        raise DomainError("kind-IIb minimal families live on R2b_2 or R2b_3")
    if not params.c3 > 0.0:
        raise DomainError("kind IIb requires c3 > 0")
    lam, c3, s = params.lam, params.c3, float(params.sign)
    interval = z.interval
    mid = 0.5 * (interval[0] + interval[1])
    third = bb.name == "R2b_3"

    def x_rule(u: float) -> Jet2:
        jz = z.jet(u)
        if third:
            q = jz * jz - lam ** 2
            den = c3 * q - 1.0
            if q.val <= 0.0 or den.val <= 0.0:
                raise DomainError(f"family undefined at u={u}")
            term1 = (math.sqrt(1.0 + c3 * lam ** 2) / math.sqrt(c3)) \
                * jm.acosh(jm.sqrt(c3 * q))
            term2 = lam * jm.atanh(lam * jm.sqrt(den)
                                   / jm.sqrt((1.0 + c3 * lam ** 2) * q))
        else:
            q = lam ** 2 - jz * jz
            den = 1.0 + c3 * q
            if q.val <= 0.0:
                raise DomainError(f"family undefined at u={u}")
            term1 = (math.sqrt(1.0 + c3 * lam ** 2) / math.sqrt(c3)) \
                * jm.asinh(jm.sqrt(c3 * q))
            term2 = lam * jm.atanh(jm.sqrt((1.0 + c3 * lam ** 2) * q)
                                   / (lam * jm.sqrt(den)))
        return s * (term1 - term2)

    x = ScalarFn.from_jet_rule(x_rule, interval)
    profile = ProfileCurve.make(interval, x=x,
                                y=ScalarFn.constant(params.c1, interval), z=z)
    X = HelicoidalSurface("IIb", profile, lam, v_interval=v_interval)
    _require_constant_meridian(X)

    asq = bernoulli_closed_form("IIb", bb, c3, lam, z)
    if third:
        sign_a = math.copysign(1.0, x.d1(mid) / z.d1(mid))
    else:
        sign_a = math.copysign(1.0, z(mid))
    a = ScalarFn.from_jet_rule(lambda u: sign_a * jm.sqrt(asq.jet(u)),
                               interval)
    b = ScalarFn.constant(0.0, interval)

    if third:
        phase = -math.asinh(lam / (a(mid) * z(mid)))
    else:
        phase = math.asinh(-x.d1(mid) / (a(mid) * z.d1(mid)))

    def n_closed(u: float) -> Jet2:
        jz = z.jet(u)
        if third:
            return sign_a * (1.0 / math.sqrt(c3)) * jm.acosh(
                jm.sqrt(c3 * (jz * jz - lam ** 2))) + params.c4
        return sign_a * (1.0 / math.sqrt(c3)) * jm.asinh(
            jm.sqrt(c3 * (lam ** 2 - jz * jz))) + params.c4

    closed = {"x": ScalarFn.from_jet_rule(n_closed, interval),
              "y": ScalarFn.constant(params.c2, interval)}
    return partner(X, bb, BourFunctions(a, b), closed_components=closed,
                   phase_constant=phase, tol=tol,
                   cross_check_interval=cc_int or _central(interval))


def canonical_parabolic_pair(X: HelicoidalSurface, *,
                             cross_check_interval=None,
                             tol: float = 1e-10) -> SurfacePair:
    """The equal-Gauss-map partner of a kind-III surface.

    With a = x'/w' and b forced by the constraint, the partner profile
    integrals collapse to x and z - lam^2/(4 w); no quadrature is needed.
    """
    if X.kind != "III":
        raise DomainError("canonical pair exists for kind III only")
    lam = X.lam
    x, z, w = X.fns["x"], X.fns["z"], X.fns["w"]
    interval = X.u_interval

    def a_rule(u: float) -> Jet2:
        return _djet(x.jet(u)) / _djet(w.jet(u))

    def b_rule(u: float) -> Jet2:
        jw = w.jet(u)
        return _djet(z.jet(u)) / _djet(jw) + lam ** 2 / (4.0 * jw * jw)

    a = ScalarFn(fn=lambda u: a_rule(u).val, d1=lambda u: a_rule(u).d1,
                 interval=interval)
    b = ScalarFn(fn=lambda u: b_rule(u).val, d1=lambda u: b_rule(u).d1,
                 interval=interval)

    def s_closed(u: float) -> Jet2:
        return z.jet(u) - lam ** 2 / (4.0 * w.jet(u))

    closed = {"x": x, "z": ScalarFn.from_jet_rule(s_closed, interval)}
    return partner(X, "R3", BourFunctions(a, b), closed_components=closed,
                   phase_constant=0.0, tol=tol,
                   cross_check_interval=cross_check_interval or _central(interval))


# ---------------------------------------------------------------------------
# rotational mean-curvature closed forms (component cross-checks)
# ---------------------------------------------------------------------------

def partner_mean_curvature_closed(pair: SurfacePair, u: float) -> Tuple[float, float]:
    """Closed-form (H1, H2) of the rotational partner, available for the
    branches R1_1, R2a_2, R2b_2, R2b_3, expressed through the source profile
    and the (a, b) pair.  Kept verbatim for cross-checking against the
    generic route; see the acceptance notes on sign conventions.
    """
    X = pair.helicoidal
    lam = X.lam
    name = pair.branch.name
    a, b = pair.ab.a, pair.ab.b
    av, bv = a(u), b(u)
    ap, bp = a.d1(u), b.d1(u)
    if name == "R1_1":
        x, xp = X.fns["x"](u), X.fns["x"].d1(u)
        q = x * x - lam ** 2
        h1 = ((lam ** 2 - x * x) * ap + av * x * xp * (bv ** 2 - av ** 2 - 1.0)) / (
            2.0 * x * xp * (1.0 + av ** 2 - bv ** 2)
            * math.sqrt((1.0 + av ** 2) * q))
        h2 = (q * (av * ap * bv - bp - av ** 2 * bp)
              - bv * x * xp * (av ** 2 - bv ** 2 + 1.0)) / (
            2.0 * x * xp * math.sqrt((1.0 + av ** 2) * q
                                     * (bv ** 2 - av ** 2 - 1.0) ** 3))
        return h1, h2
    if name == "R2a_2":
        w, wp = X.fns["w"](u), X.fns["w"].d1(u)
        q = w * w + lam ** 2
        m = av ** 2 + bv ** 2 - 1.0
        h1 = (q * bp - m * bv * w * wp) / (
            2.0 * w * wp * m * math.sqrt((1.0 - bv ** 2) * q))
        h2 = (q * (ap * (1.0 - bv ** 2) + av * bv * bp) - av * w * wp * m) / (
            2.0 * w * wp * math.sqrt((bv ** 2 - 1.0) * q * m ** 3))
        return h1, h2
    if name == "R2b_2":
        z, zp = X.fns["z"](u), X.fns["z"].d1(u)
        q = z * z - lam ** 2
        m = av ** 2 + bv ** 2 - 1.0
        h1 = (bp * q - bv * z * zp * m) / (
            2.0 * z * zp * m * math.sqrt((bv ** 2 - 1.0) * q))
        h2 = (q * (ap * (bv ** 2 - 1.0) - av * bv * bp) + av * z * zp * m) / (
            2.0 * z * zp * math.sqrt((bv ** 2 - 1.0) * (lam ** 2 - z * z) * m ** 3))
        return h1, h2
    if name == "R2b_3":
        z, zp = X.fns["z"](u), X.fns["z"].d1(u)
        q = z * z - lam ** 2
        m = av ** 2 + bv ** 2 + 1.0
        h1 = (bp * q + bv * z * zp * m) / (
            2.0 * z * zp * math.sqrt((bv ** 2 + 1.0) * q * m))
        h2 = (q * (ap * (1.0 + bv ** 2) - av * bv * bp) + av * z * zp * m) / (
            2.0 * z * zp * math.sqrt((bv ** 2 + 1.0) * q * m ** 3))
        return h1, h2
    raise DomainError(f"no closed mean-curvature form for branch {name}")
