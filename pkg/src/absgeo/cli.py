"""Command-line front end.

Subcommands: ``verify`` (seeded randomized sweep), ``construct`` (one
figure as JSON), ``area`` (closed-form vs quadrature table), ``render``
(SVG drawing). Exit codes: 0 success, 1 residual failure, 2 usage or
validation error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .constructions import build_equiangular_quadrilateral, check_equiangular, check_proper, split_to_proper_triangle
from .disks import Disk, disk_area, disk_area_quadrature
from .errors import GeometryError
from .render import ALL_ELEMENTS, PROJECTION_FOR_KIND, RenderSpec, render_figure
from .reporting import figure_from_dict, figure_to_dict, report_csv, report_json
from .surfaces import Geometry, GeometryKind, distance, project_to_surface, tangent_direction
from .verify import (
    TrialConfig,
    breadcrust_residual,
    coplanarity_residual,
    parallelogram_residual_vector,
    pythagoras_residual,
    rectangle_residual,
    rectangle_residual_minkowski,
    run_trials,
)

_KIND_CHOICES = ("euclidean", "spherical", "hyperbolic")


def _floats_csv(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated floats: {exc}")


def _fraction_range(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(part) for part in text.split(":"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected lo:hi floats: {exc}")
    return lo, hi


def _geometry(kind: str, radius: float | None) -> Geometry:
    if kind == "euclidean":
        return Geometry.euclidean()
    if radius is None:
        raise ValueError(f"--radius is required for {kind} geometry")
    if kind == "spherical":
        return Geometry.spherical(radius)
    return Geometry.hyperbolic(radius)


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="absgeo",
        description="Constant-curvature geometry kernel and theorem verifier.",
    )
    parser.add_argument("--version", action="version", version=f"absgeo {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a seeded randomized verification sweep")
    p.add_argument("--geometry", choices=_KIND_CHOICES + ("all",), default="all")
    p.add_argument("--radius", type=_floats_csv, default=(1.0,), metavar="R1,R2,...")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--s-frac", type=_fraction_range, default=(0.05, 0.8), metavar="LO:HI")
    p.add_argument("--theta-frac", type=_fraction_range, default=(0.15, 0.85), metavar="LO:HI")
    p.add_argument("--tol-thm", type=float, default=1e-9)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build one quadrilateral and emit JSON")
    p.add_argument("--geometry", choices=_KIND_CHOICES, required=True)
    p.add_argument("--radius", type=float, default=None)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--half-diagonal", type=float, required=True)
    p.add_argument("--center", type=_floats_csv, default=None, metavar="X,Y,Z")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("area", help="tabulate disk areas against the quadrature oracle")
    p.add_argument("--geometry", choices=_KIND_CHOICES, required=True)
    p.add_argument("--radius", type=float, default=None)
    p.add_argument("--rho", type=_floats_csv, required=True, metavar="R1,R2,...")
    p.add_argument("--oracle", choices=("on", "off"), default="on")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("render", help="render a figure to SVG")
    p.add_argument("--input", default=None, help="JSON produced by construct")
    p.add_argument("--geometry", choices=_KIND_CHOICES, default=None)
    p.add_argument("--radius", type=float, default=None)
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--half-diagonal", type=float, default=None)
    p.add_argument("--center", type=_floats_csv, default=None, metavar="X,Y,Z")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--projection", choices=tuple(PROJECTION_FOR_KIND.values()), default=None)
    p.add_argument("--width", type=int, default=600)
    p.add_argument("--stroke-width", type=float, default=1.5)
    p.add_argument("--samples", type=int, default=96)
    p.add_argument("--elements", default=",".join(ALL_ELEMENTS))
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def cmd_verify(args) -> int:
    kinds = _KIND_CHOICES if args.geometry == "all" else (args.geometry,)
    cfg = TrialConfig(
        kinds=kinds,
        radii=args.radius,
        trials=args.trials,
        s_frac=args.s_frac,
        theta_frac=args.theta_frac,
        seed=args.seed,
        tol_theorem=args.tol_thm,
    )
    report = run_trials(cfg)
    text = report_json(report) if args.format == "json" else report_csv(report)
    _write(text, args.out)
    if args.out is not None:
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            print(
                f"{check.name}: max {check.worst:.3e} tol {check.tolerance:.1e} {status}"
            )
        print(f"overall: {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


def _build_from_flags(geometry, center_flag, seed, theta, s):
    if center_flag is None:
        center = geometry.pole
    else:
        center = project_to_surface(geometry, np.asarray(center_flag, dtype=float))
    rng = np.random.default_rng([seed])
    direction = tangent_direction(center, rng.uniform(0.0, 2.0 * math.pi))
    return build_equiangular_quadrilateral(geometry, center, direction, theta, s)


def _figure_residuals(q) -> dict:
    pyth_abs, pyth_rel = pythagoras_residual(q)
    vec = parallelogram_residual_vector(q)
    spread, _ = check_equiangular(q, 1e-9)
    proper, _ = check_proper(split_to_proper_triangle(q), 1e-9)
    kind = q.geometry.kind
    return {
        "pythagoras_absolute": pyth_abs,
        "pythagoras_relative": pyth_rel,
        "parallelogram": float(np.linalg.norm(vec)),
        "parallelogram_z": abs(float(vec[2])),
        "coplanarity": coplanarity_residual(q),
        "rectangle": rectangle_residual(q) if kind is GeometryKind.SPHERICAL else None,
        "rectangle_minkowski": (
            rectangle_residual_minkowski(q) if kind is GeometryKind.HYPERBOLIC else None
        ),
        "proper_angle": proper,
        "equiangular_spread": spread,
        "breadcrust": (
            breadcrust_residual(Disk(q.a, distance(q.a, q.d)))
            if q.geometry.is_curved
            else None
        ),
    }


def cmd_construct(args) -> int:
    geometry = _geometry(args.geometry, args.radius)
    q = _build_from_flags(geometry, args.center, args.seed, args.theta, args.half_diagonal)
    record = figure_to_dict(q, _figure_residuals(q))
    _write(json.dumps(record, indent=2) + "\n", args.out)
    return 0


def cmd_area(args) -> int:
    geometry = _geometry(args.geometry, args.radius)
    oracle = args.oracle == "on"
    if oracle and not geometry.is_curved:
        raise ValueError("the quadrature oracle applies to curved geometries only")
    rows = []
    for rho in args.rho:
        disk = Disk(geometry.pole, rho)
        closed = disk_area(disk)
        if oracle:
            quad = disk_area_quadrature(disk, args.tol)
            rel = abs(closed - quad) / closed if closed else 0.0
            rows.append((rho, closed, quad, rel))
        else:
            rows.append((rho, closed, None, None))
    if args.format == "csv":
        print("rho,area,quadrature,relative_difference")
        for rho, closed, quad, rel in rows:
            tail = f",{quad!r},{rel!r}" if quad is not None else ",,"
            print(f"{rho!r},{closed!r}{tail}")
    else:
        header = f"{'rho':>12} {'area':>18}"
        if oracle:
            header += f" {'quadrature':>18} {'rel.diff':>10}"
        print(header)
        for rho, closed, quad, rel in rows:
            line = f"{rho:>12.6g} {closed:>18.12g}"
            if quad is not None:
                line += f" {quad:>18.12g} {rel:>10.2e}"
            print(line)
    return 0


def cmd_render(args) -> int:
    if args.input is not None:
        with open(args.input, "r", encoding="utf-8") as fh:
            q = figure_from_dict(json.load(fh))
    else:
        missing = [
            name
            for name, value in (
                ("--geometry", args.geometry),
                ("--theta", args.theta),
                ("--half-diagonal", args.half_diagonal),
            )
            if value is None
        ]
        if missing:
            raise ValueError(f"render needs --input or {', '.join(missing)}")
        geometry = _geometry(args.geometry, args.radius)
        q = _build_from_flags(
            geometry, args.center, args.seed, args.theta, args.half_diagonal
        )
    projection = args.projection or PROJECTION_FOR_KIND[q.geometry.kind]
    spec = RenderSpec(
        projection=projection,
        width=args.width,
        stroke_width=args.stroke_width,
        samples=args.samples,
        elements=tuple(args.elements.split(",")),
    )
    _write(render_figure(q, spec), args.out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except (GeometryError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
