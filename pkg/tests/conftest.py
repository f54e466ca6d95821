"""Shared helpers: seeded random admissible profiles for every surface kind
and branch-compatible auxiliary function pairs."""
import math

import numpy as np
import pytest

from bour4 import bour
from bour4.errors import DomainError
from bour4.numerics import ScalarFn, expr_scalarfn
from bour4.surfaces import HelicoidalSurface, ProfileCurve

KINDS = ("I", "IIa", "IIb", "III")


def _expr(template, interval, **coeffs):
    return expr_scalarfn(template.format(**coeffs), interval)


def _profile_I(rng, interval=(2.0, 3.0)):
    a = rng.uniform(0.2, 0.4)
    b = rng.uniform(0.05, 0.15)
    c = rng.uniform(0.05, 0.15)
    d = rng.uniform(1.05, 1.25)
    lam = rng.uniform(0.35, 0.55)
    prof = ProfileCurve.make(
        interval,
        x=_expr("2 + {a}*sin(u)", interval, a=a),
        z=_expr("{b}*u + {c}*cos(u)", interval, b=b, c=c),
        w=_expr("{d}*u", interval, d=d))
    return HelicoidalSurface("I", prof, lam, v_interval=(0.0, 2.0 * math.pi))


def _profile_IIa(rng, interval=(0.5, 2.0)):
    e = rng.uniform(0.5, 0.7)
    f = rng.uniform(0.02, 0.06)
    g = rng.uniform(0.02, 0.06)
    h = rng.uniform(0.1, 0.2)
    k = rng.uniform(0.02, 0.08)
    lam = rng.uniform(0.4, 0.6)
    prof = ProfileCurve.make(
        interval,
        x=_expr("{h}*u + {k}*sin(u)", interval, h=h, k=k),
        y=_expr("{f}*u + {g}*cos(u)", interval, f=f, g=g),
        w=_expr("2 + {e}*u", interval, e=e))
    return HelicoidalSurface("IIa", prof, lam)


def _profile_IIb(rng, interval=(0.1, 0.9)):
    m = rng.uniform(0.3, 0.4)
    p = rng.uniform(0.02, 0.08)
    q = rng.uniform(1.9, 2.3)
    lam = rng.uniform(1.4, 1.6)
    prof = ProfileCurve.make(
        interval,
        x=_expr("{q}*u", interval, q=q),
        y=_expr("{p}*u", interval, p=p),
        z=_expr("0.45 + {m}*u", interval, m=m))
    return HelicoidalSurface("IIb", prof, lam)


def _profile_III(rng, interval=(0.5, 2.0)):
    r = rng.uniform(0.4, 0.6)
    s = rng.uniform(0.05, 0.15)
    t = rng.uniform(0.1, 0.3)
    lam = rng.uniform(0.5, 1.5)
    prof = ProfileCurve.make(
        interval,
        x=_expr("{t}*u", interval, t=t),
        z=_expr("u", interval),
        w=_expr("1 + {r}*u + {s}*sin(u)", interval, r=r, s=s))
    return HelicoidalSurface("III", prof, lam)


_MAKERS = {"I": _profile_I, "IIa": _profile_IIa, "IIb": _profile_IIb,
           "III": _profile_III}


def random_surface(kind, rng) -> HelicoidalSurface:
    """A seeded random admissible (timelike) surface of the given kind."""
    for _ in range(25):
        try:
            return _MAKERS[kind](rng)
        except DomainError:
            continue
    raise RuntimeError(f"could not draw an admissible kind-{kind} surface")


# profiles tailored to the sum-relation branch domains
def surface_for_branch(branch_name, rng) -> HelicoidalSurface:
    if branch_name in ("R1_1", "R1_2"):
        interval = (2.0, 3.0)
        d = rng.uniform(1.05, 1.25)
        c = rng.uniform(0.02, 0.1)
        prof = ProfileCurve.make(
            interval,
            x=_expr("u", interval),
            z=_expr("{c}*sin(u)", interval, c=c),
            w=_expr("{d}*u", interval, d=d))
        return HelicoidalSurface("I", prof, 1.0,
                                 v_interval=(0.0, 2.0 * math.pi))
    if branch_name == "R1_3":
        interval = (0.35, 0.75)
        d = rng.uniform(0.9, 1.1)
        c = rng.uniform(0.01, 0.05)
        prof = ProfileCurve.make(
            interval,
            x=_expr("u", interval),
            z=_expr("{c}*sin(u)", interval, c=c),
            w=_expr("{d}*u", interval, d=d))
        return HelicoidalSurface("I", prof, 1.0,
                                 v_interval=(0.0, 2.0 * math.pi))
    if branch_name.startswith("R2a"):
        return _profile_IIa(rng)
    if branch_name in ("R2b_1", "R2b_2"):
        return _profile_IIb(rng)
    if branch_name == "R2b_3":
        interval = (2.0, 4.0)
        q = rng.uniform(0.3, 0.5)
        p = rng.uniform(0.02, 0.1)
        m = rng.uniform(0.4, 0.6)
        prof = ProfileCurve.make(
            interval,
            x=_expr("{q}*u", interval, q=q),
            y=_expr("{p}*u", interval, p=p),
            z=_expr("1.5 + {m}*u", interval, m=m))
        return HelicoidalSurface("IIb", prof, 1.0)
    return _profile_III(rng)


def bour_functions_for(X, branch_name, rng) -> bour.BourFunctions:
    """A seeded (a, b) pair satisfying the branch constraint on X."""
    br = bour.branch(branch_name)
    us = np.linspace(*X.u_interval, 33)
    rhs = [bour.constraint_rhs(X, br, float(u)) for u in us]
    if br.relation == "diff":
        b0 = math.sqrt(max(0.0, -min(rhs)) + rng.uniform(0.05, 0.5))
        return bour.complete_bour_functions(
            X, br, b=ScalarFn.constant(b0, X.u_interval))
    if br.relation == "sum":
        lo = min(rhs)
        if lo <= 0.0:
            raise DomainError(f"branch {branch_name} unsolvable on this profile")
        b0 = math.sqrt(lo) * rng.uniform(0.1, 0.8)
        return bour.complete_bour_functions(
            X, br, b=ScalarFn.constant(b0, X.u_interval))
    a0 = rng.uniform(-0.5, 0.5)
    return bour.complete_bour_functions(
        X, br, a=ScalarFn.constant(a0, X.u_interval))


def interior_points(surface, rng, n):
    """n random points strictly inside the surface domain."""
    (u0, u1), (v0, v1) = surface.u_interval, surface.v_interval
    du, dv = 0.02 * (u1 - u0), 0.02 * (v1 - v0)
    return [(float(rng.uniform(u0 + du, u1 - du)),
             float(rng.uniform(v0 + dv, v1 - dv))) for _ in range(n)]


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
