"""Command-line front end: build surfaces from JSON specs, construct Bour
partners, run verification suites, export meshes, and reproduce the four
built-in demonstration pairs.

Exit codes: 0 success, 1 failed verification, 2 input/usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import bour, verify
from .errors import (BranchDomainError, ConstraintError, ConvergenceError,
                     DegenerateFrameError, DomainError, ParseError,
                     StiffnessError)
from .minkowski import Vec4
from .numerics import ScalarFn, expr_scalarfn
from .surfaces import (HELICOIDAL_KINDS, HelicoidalSurface, ProfileCurve,
                       classify_fiber)

__all__ = ["SurfaceSpec", "MeshFile", "export_mesh", "reproduce_example",
           "main", "run"]

_CLIP_DELTA = 1e-4
_PROFILE_LETTERS = ("x", "y", "z", "w")


# ---------------------------------------------------------------------------
# surface specification
# ---------------------------------------------------------------------------

@dataclass
class SurfaceSpec:
    """JSON surface description: kind, pitch, profile expression strings,
    and the (u, v) domain with grid counts."""

    kind: str
    lam: float
    profile: Dict[str, str]
    u_interval: Tuple[float, float]
    v_interval: Tuple[float, float]
    nu: int = 40
    nv: int = 40
    bour: Dict[str, str] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, doc: dict) -> "SurfaceSpec":
        try:
            kind = doc["kind"]
            lam = float(doc["lambda"])
            dom = doc["domain"]
            u0, u1 = (float(t) for t in dom["u"])
            v0, v1 = (float(t) for t in dom["v"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"bad surface spec: {exc!r}") from exc
        if kind not in HELICOIDAL_KINDS:
            raise DomainError(f"unknown kind {kind!r}")
        if not (u0 < u1 and v0 < v1):
            raise DomainError("nonempty u and v intervals required")
        nu = int(dom.get("nu", 40))
        nv = int(dom.get("nv", 40))
        if nu < 2 or nv < 2:
            raise DomainError("nu and nv must be at least 2")
        profile = {k: str(vv) for k, vv in doc.get("profile", {}).items()}
        unknown = set(profile) - set(_PROFILE_LETTERS)
        if unknown:
            raise DomainError(f"unknown profile components {sorted(unknown)}")
        return cls(kind, lam, profile, (u0, u1), (v0, v1), nu, nv,
                   dict(doc.get("bour", {})))

    @classmethod
    def load(cls, path) -> "SurfaceSpec":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def build_profile(self) -> ProfileCurve:
        fns = {}
        for name in _PROFILE_LETTERS:
            fns[name] = expr_scalarfn(self.profile.get(name, "0"),
                                      self.u_interval)
        return ProfileCurve(fns["x"], fns["y"], fns["z"], fns["w"],
                            self.u_interval)

    def build_surface(self) -> HelicoidalSurface:
        return HelicoidalSurface(self.kind, self.build_profile(), self.lam,
                                 v_interval=self.v_interval)

    def build_bour_functions(self, X: HelicoidalSurface,
                             branch_name: str) -> bour.BourFunctions:
        a_text = self.bour.get("a")
        b_text = self.bour.get("b")
        if a_text is None and b_text is None:
            raise DomainError(
                "the spec needs a 'bour' section with at least one of a, b")
        a = expr_scalarfn(a_text, self.u_interval) if a_text is not None else None
        b = expr_scalarfn(b_text, self.u_interval) if b_text is not None else None
        if a is not None and b is not None:
            return bour.BourFunctions(a, b)
        return bour.complete_bour_functions(X, branch_name, a=a, b=b)


# ---------------------------------------------------------------------------
# mesh export
# ---------------------------------------------------------------------------

@dataclass
class MeshFile:
    """Sampled surface patch: rows are (u, v, x1, x2, x3, x4); faces are
    quads of vertex indices; the dropped axis records the 3d projection."""

    vertices: np.ndarray
    faces: List[Tuple[int, int, int, int]]
    format: str
    dropped_axis: int
    name: str = "surface"

    @property
    def nvertices(self) -> int:
        return len(self.vertices)

    def projected(self) -> np.ndarray:
        keep = [2 + i for i in range(4) if i + 1 != self.dropped_axis]
        return self.vertices[:, keep]

    def write(self, path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        if self.format == "csv":
            lines = ["u,v,x1,x2,x3,x4"]
            lines += [",".join(f"{c:.17g}" for c in row)
                      for row in self.vertices]
            path.write_text("\n".join(lines) + "\n", newline="\n",
                            encoding="utf-8")
        elif self.format == "obj":
            lines = [f"o {self.name}"]
            lines += ["v " + " ".join(f"{c:.17g}" for c in row)
                      for row in self.projected()]
            lines += ["f " + " ".join(str(i + 1) for i in quad)
                      for quad in self.faces]
            path.write_text("\n".join(lines) + "\n", newline="\n",
                            encoding="utf-8")
        elif self.format == "json":
            doc = {"name": self.name, "format": "json",
                   "dropped_axis": self.dropped_axis,
                   "columns": ["u", "v", "x1", "x2", "x3", "x4"],
                   "vertices": [[float(c) for c in row]
                                for row in self.vertices],
                   "faces": [list(q) for q in self.faces]}
            path.write_text(json.dumps(doc, sort_keys=True), newline="\n",
                            encoding="utf-8")
        else:
            raise DomainError(f"unknown mesh format {self.format!r}")
        return path


def export_mesh(point_fn: Callable[[float, float], Vec4], u_interval,
                v_interval, nu: int, nv: int, fmt: str = "csv",
                project: Optional[int] = None, name: str = "surface",
                v_half_open: bool = False) -> MeshFile:
    """Sample an nu x nv grid (row-major in u, then v) into a mesh.

    A coordinate that is constant across the patch (hyperplanar surface) is
    dropped for the 3d projection; otherwise ``project`` selects the dropped
    axis (default x2).
    """
    if nu < 2 or nv < 2:
        raise DomainError("nu and nv must be at least 2")
    us = np.linspace(*u_interval, nu)
    if v_half_open:
        vs = np.linspace(*v_interval, nv, endpoint=False)
    else:
        vs = np.linspace(*v_interval, nv)
    rows = np.empty((nu * nv, 6))
    for i, u in enumerate(us):
        for j, v in enumerate(vs):
            p = point_fn(float(u), float(v))
            rows[i * nv + j] = (u, v, p.x1, p.x2, p.x3, p.x4)
    faces = [(i * nv + j, i * nv + j + 1, (i + 1) * nv + j + 1, (i + 1) * nv + j)
             for i in range(nu - 1) for j in range(nv - 1)]
    dropped = project
    if dropped is None:
        coords = rows[:, 2:]
        spread = coords.max(axis=0) - coords.min(axis=0)
        scale = 1.0 + np.abs(coords).max(axis=0)
        flat = np.nonzero(spread < 1e-9 * scale)[0]
        dropped = int(flat[0]) + 1 if flat.size else 2
    return MeshFile(rows, faces, fmt, dropped, name)


# ---------------------------------------------------------------------------
# built-in demonstration pairs
# ---------------------------------------------------------------------------

def _example_pair(n: int, patch: int = 0) -> Tuple[bour.SurfacePair, dict]:
    """Construct demonstration pair n; patch selects the u > 0 / u < 0 piece
    for the parabolic case (0 / 1)."""
    if n == 1:
        params = bour.MinimalFamilyParams(lam=1.0, c3=-0.5)
        interval = (1.32, 1.72)
        pair = bour.minimal_family(
            "I", "R1_1", params, ScalarFn.identity(interval),
            v_interval=(0.0, 2.0 * math.pi))
        meta = {"v_half_open": True, "minimal": True, "gauss_tol": 1e-6}
    elif n == 2:
        params = bour.MinimalFamilyParams(lam=1.0, c3=1.0)
        interval = (1.19, 10.0)
        pair = bour.minimal_family(
            "IIa", "R2a_2", params, ScalarFn.identity(interval),
            v_interval=(-1.5, 1.5))
        meta = {"v_half_open": False, "minimal": True, "gauss_tol": 1e-6}
    elif n == 3:
        params = bour.MinimalFamilyParams(lam=1.0, c3=0.5)
        interval = (2.0, 8.0)
        pair = bour.minimal_family(
            "IIb", "R2b_3", params, ScalarFn.identity(interval),
            v_interval=(-1.0, 1.0))
        meta = {"v_half_open": False, "minimal": True, "gauss_tol": 1e-6}
    elif n == 4:
        interval = (_CLIP_DELTA, 4.0) if patch == 0 else (-4.0, -_CLIP_DELTA)
        profile = ProfileCurve.make(interval,
                                    z=ScalarFn.identity(interval),
                                    w=ScalarFn.identity(interval))
        X = HelicoidalSurface("III", profile, 5.0, v_interval=(-3.0, 3.0))
        pair = bour.canonical_parabolic_pair(X)
        meta = {"v_half_open": False, "minimal": False, "gauss_tol": 1e-9}
    else:
        raise DomainError("example number must be 1, 2, 3, or 4")
    return pair, meta


def _merge_reports(name: str, tol: float,
                   parts: Sequence[verify.VerificationReport]) -> verify.VerificationReport:
    rep = verify.VerificationReport(check=name, tol=tol)
    for p in parts:
        rep.residuals.extend(p.residuals)
        rep.excluded_points.extend(p.excluded_points)
    return rep


def reproduce_example(n: int, out_dir, fmt: str = "csv", nu: int = 40,
                      nv: int = 80, grid_n: int = 20) -> dict:
    """Build demonstration pair n, verify it, and export both meshes.

    Returns a summary dict (also written to ``summary_example<n>.json``).
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    patches = (0, 1) if n == 4 else (0,)
    reports: Dict[str, List[verify.VerificationReport]] = {}
    tols: Dict[str, float] = {}
    files: List[str] = []
    fibers = []
    for patch in patches:
        pair, meta = _example_pair(n, patch)
        X, R = pair.helicoidal, pair.rotational
        us = np.linspace(*X.u_interval, grid_n)
        if n == 4:
            # verification grid spans the printed range; clipped cells out
            full = np.linspace(-4.0, 4.0, grid_n)
            keep = full[np.abs(full) >= _CLIP_DELTA]
            us = keep[keep > 0] if patch == 0 else keep[keep < 0]
        grid = verify.Grid(np.asarray(sorted(us)),
                           np.linspace(*X.v_interval, grid_n))
        checks = [("isometry", 1e-6, verify.check_isometry(pair, grid, 1e-6)),
                  ("gauss_map", meta["gauss_tol"],
                   verify.compare_gauss_maps(pair, grid, meta["gauss_tol"])),
                  ("curvature_match", 1e-4,
                   verify.check_curvature_match(pair, grid, 1e-4))]
        if meta["minimal"]:
            rot_grid = verify.Grid(grid.u, np.linspace(*R.v_interval, grid_n))
            checks.append(("minimal_helicoidal", 1e-6,
                           verify.check_minimal(X, grid, 1e-6)))
            checks.append(("minimal_rotational", 1e-6,
                           verify.check_minimal(R, rot_grid, 1e-6)))
        for name, tol, rep in checks:
            reports.setdefault(name, []).append(rep)
            tols[name] = tol
        suffix = {0: "", 1: "_neg"}[patch]
        fibers.append(classify_fiber(R, float(np.median(us))))
        hel = export_mesh(X.eval, X.u_interval, X.v_interval, nu, nv, fmt,
                          name=f"helicoidal_{n}{suffix}",
                          v_half_open=meta["v_half_open"])
        rot = export_mesh(pair.rotational_at, X.u_interval, X.v_interval,
                          nu, nv, fmt, name=f"rotational_{n}{suffix}",
                          v_half_open=meta["v_half_open"])
        files.append(str(hel.write(out / f"helicoidal_{n}{suffix}.{fmt}")))
        files.append(str(rot.write(out / f"rotational_{n}{suffix}.{fmt}")))
    merged = {name: _merge_reports(name, tols[name], parts)
              for name, parts in reports.items()}
    summary = {
        "example": n,
        "reports": {name: rep.to_dict() for name, rep in merged.items()},
        "fiber": {"kind": fibers[0].kind.value,
                  "radius": fibers[0].radius},
        "meshes": files,
        "pass": all(rep.passed for rep in merged.values()),
    }
    (out / f"summary_example{n}.json").write_text(
        json.dumps(summary, sort_keys=True, indent=1), newline="\n",
        encoding="utf-8")
    for name, rep in merged.items():
        print(rep)
    return summary


# ---------------------------------------------------------------------------
# command implementations
# ---------------------------------------------------------------------------

def _parse_grid(text: str) -> Tuple[int, int]:
    try:
        nu, nv = text.lower().split("x")
        return int(nu), int(nv)
    except ValueError as exc:
        raise DomainError(f"bad --grid {text!r}; expected NUxNV") from exc


_PROJECT = {"x1": 1, "x2": 2, "x3": 3, "x4": 4}


def _cmd_gen(args) -> int:
    spec = SurfaceSpec.load(args.spec)
    X = spec.build_surface()
    nu, nv = _parse_grid(args.grid) if args.grid else (spec.nu, spec.nv)
    mesh = export_mesh(X.eval, X.u_interval, X.v_interval, nu, nv,
                       args.format, project=_PROJECT.get(args.project),
                       name="surface")
    path = mesh.write(Path(args.out) / f"surface.{args.format}")
    print(f"wrote {path} ({mesh.nvertices} vertices)")
    return 0


def _build_pair(args, spec: SurfaceSpec) -> bour.SurfacePair:
    X = spec.build_surface()
    branch_name = args.branch or spec.bour.get("branch")
    if not branch_name:
        raise DomainError("no branch given (flag --branch or spec 'bour')")
    ab = spec.build_bour_functions(X, branch_name)
    return bour.partner(X, branch_name, ab)


def _cmd_partner(args) -> int:
    spec = SurfaceSpec.load(args.spec)
    pair = _build_pair(args, spec)
    nu, nv = _parse_grid(args.grid) if args.grid else (spec.nu, spec.nv)
    out = Path(args.out)
    X = pair.helicoidal
    hel = export_mesh(X.eval, X.u_interval, X.v_interval, nu, nv, args.format,
                      name="helicoidal")
    rot = export_mesh(pair.rotational_at, X.u_interval, X.v_interval, nu, nv,
                      args.format, name="rotational")
    p1 = hel.write(out / f"helicoidal.{args.format}")
    p2 = rot.write(out / f"rotational.{args.format}")
    u0 = float(np.median(np.linspace(*X.u_interval, 5)))
    fiber = classify_fiber(pair.rotational, u0)
    print(f"wrote {p1} and {p2}; fiber at u0={u0:g}: "
          f"{fiber.kind.value} (radius {fiber.radius:.12g})")
    return 0


_SUITE_TOLS = {"isometry": 1e-6, "gauss_map": 1e-6, "minimal": 1e-6,
               "frames": 1e-9, "curvature": 1e-4, "gauss_norm": 1e-9}


def _cmd_verify(args) -> int:
    spec = SurfaceSpec.load(args.spec)
    pair = _build_pair(args, spec)
    X, R = pair.helicoidal, pair.rotational
    nu, nv = _parse_grid(args.grid) if args.grid else (20, 20)
    grid = verify.Grid.for_surface(X, nu, nv)
    suite = [s.strip() for s in args.suite.split(",") if s.strip()]
    unknown = [s for s in suite if s not in _SUITE_TOLS]
    if unknown:
        raise DomainError(f"unknown checks {unknown}; "
                          f"choose from {sorted(_SUITE_TOLS)}")
    reports = []
    for name in suite:
        tol = args.tol if args.tol is not None else _SUITE_TOLS[name]
        if name == "isometry":
            reports.append(verify.check_isometry(pair, grid, tol))
        elif name == "gauss_map":
            reports.append(verify.compare_gauss_maps(pair, grid, tol))
        elif name == "minimal":
            reports.append(verify.check_minimal(X, grid, tol))
        elif name == "frames":
            reports.append(verify.check_frames(X, grid, tol))
        elif name == "curvature":
            reports.append(verify.check_curvature_match(pair, grid, tol))
        else:
            rng = np.random.default_rng(args.seed)
            ru = np.sort(rng.uniform(*X.u_interval, nu * nv))
            rv = np.sort(rng.uniform(*X.v_interval, 4))
            rnd = verify.Grid(ru, rv)
            reports.append(verify.check_gauss_normalization(X, rnd, tol))
    for rep in reports:
        print(rep)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        doc = [rep.to_dict() for rep in reports]
        (out / "verification.json").write_text(
            json.dumps(doc, sort_keys=True, indent=1), newline="\n",
            encoding="utf-8")
    return 0 if all(rep.passed for rep in reports) else 1


def _cmd_families(args) -> int:
    interval = (args.u_interval[0], args.u_interval[1])
    free = expr_scalarfn(args.profile, interval)
    params = bour.MinimalFamilyParams(lam=args.lam, c3=args.c3, c1=args.c1,
                                      c2=args.c2, c4=args.c4, sign=args.sign)
    v_interval = tuple(args.v_interval) if args.v_interval else None
    if args.kind == "III":
        profile = ProfileCurve.make(interval, z=free,
                                    w=expr_scalarfn(args.profile_w or "u",
                                                    interval))
        pair = bour.minimal_family("III", "R3", params, profile,
                                   v_interval=v_interval)
    else:
        pair = bour.minimal_family(args.kind, args.branch, params, free,
                                   v_interval=v_interval)
    X, R = pair.helicoidal, pair.rotational
    nu, nv = _parse_grid(args.grid) if args.grid else (20, 20)
    grid = verify.Grid.for_surface(X, nu, nv)
    reports = [verify.check_isometry(pair, grid, 1e-6),
               verify.compare_gauss_maps(pair, grid, 1e-6),
               verify.check_curvature_match(pair, grid, 1e-4)]
    if args.kind != "III":
        rot_grid = verify.Grid.for_surface(R, nu, nv)
        reports.append(verify.check_minimal(X, grid, 1e-6))
        reports.append(verify.check_minimal(R, rot_grid, 1e-6))
    for rep in reports:
        print(rep)
    if args.out:
        out = Path(args.out)
        hel = export_mesh(X.eval, X.u_interval, X.v_interval, 40, 80,
                          args.format, name="family_helicoidal")
        rot = export_mesh(pair.rotational_at, X.u_interval, X.v_interval,
                          40, 80, args.format, name="family_rotational")
        hel.write(out / f"family_helicoidal.{args.format}")
        rot.write(out / f"family_rotational.{args.format}")
        (out / "family_verification.json").write_text(
            json.dumps([rep.to_dict() for rep in reports], sort_keys=True,
                       indent=1), newline="\n", encoding="utf-8")
    return 0 if all(rep.passed for rep in reports) else 1


def _cmd_reproduce(args) -> int:
    nu, nv = _parse_grid(args.grid) if args.grid else (40, 80)
    summary = reproduce_example(args.example, args.out, fmt=args.format,
                                nu=nu, nv=nv)
    return 0 if summary["pass"] else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="bour4",
        description="Timelike helicoidal surfaces in Minkowski 4-space and "
                    "their isometric rotational partners.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "obj", "json"),
                        default="csv")
    common.add_argument("--grid", default=None, help="grid as NUxNV")
    common.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("gen", parents=[common],
                       help="evaluate a surface spec to a mesh")
    p.add_argument("--spec", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--project", choices=sorted(_PROJECT), default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("partner", parents=[common],
                       help="build the rotational partner for a branch")
    p.add_argument("--spec", required=True)
    p.add_argument("--branch", default=None, choices=bour.BRANCH_NAMES)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_partner)

    p = sub.add_parser("verify", parents=[common],
                       help="run a named check suite on a pair")
    p.add_argument("--spec", required=True)
    p.add_argument("--branch", default=None, choices=bour.BRANCH_NAMES)
    p.add_argument("--suite", default="isometry,curvature")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("families", parents=[common],
                       help="emit a closed-form minimal-family pair")
    p.add_argument("--kind", required=True, choices=sorted(HELICOIDAL_KINDS))
    p.add_argument("--branch", default=None, choices=bour.BRANCH_NAMES)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--c3", type=float, default=-0.5)
    p.add_argument("--c1", type=float, default=0.0)
    p.add_argument("--c2", type=float, default=0.0)
    p.add_argument("--c4", type=float, default=0.0)
    p.add_argument("--sign", type=int, choices=(-1, 1), default=1)
    p.add_argument("--profile", required=True,
                   help="free profile component as an expression in u")
    p.add_argument("--profile-w", default=None,
                   help="w component for kind III families")
    p.add_argument("--u-interval", nargs=2, type=float, required=True)
    p.add_argument("--v-interval", nargs=2, type=float, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_families)

    p = sub.add_parser("reproduce", parents=[common],
                       help="reproduce one of the built-in example pairs")
    p.add_argument("--example", type=int, required=True, choices=(1, 2, 3, 4))
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_reproduce)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (ParseError, DomainError, BranchDomainError, ConstraintError,
            ConvergenceError, StiffnessError, DegenerateFrameError,
            OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
