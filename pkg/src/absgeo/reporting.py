"""Serialization of verification reports and single-figure records.

JSON is the canonical machine format; CSV is a flat projection of it. The
field names here are the external contract documented in the README.
"""

from __future__ import annotations

import csv
import io
import json
import math

import numpy as np

from .constructions import EquiangularQuadrilateral, interior_angles
from .disks import Disk, disk_area
from .surfaces import (
    Geometry,
    GeometryKind,
    SurfacePoint,
    TangentVector,
    distance,
)
from .verify import (
    CriterionCheck,
    SettingSummary,
    TrialConfig,
    TrialRecord,
    VerificationReport,
)

CSV_COLUMNS = (
    "geometry",
    "radius",
    "trial",
    "theta",
    "half_diagonal",
    "pythagoras_abs",
    "pythagoras_rel",
    "equiangular_spread",
    "proper_angle",
    "parallelogram",
    "parallelogram_z",
    "coplanarity",
    "rectangle",
    "rectangle_minkowski",
    "breadcrust",
    "passed",
)


def report_to_dict(report: VerificationReport) -> dict:
    cfg = report.config
    return {
        "config": {
            "kinds": list(cfg.kinds),
            "radii": list(cfg.radii),
            "trials": cfg.trials,
            "s_frac": list(cfg.s_frac),
            "theta_frac": list(cfg.theta_frac),
            "seed": cfg.seed,
            "tol_theorem": cfg.tol_theorem,
            "tol_proof": cfg.tol_proof,
            "tol_oracle": cfg.tol_oracle,
            "tol_angle": cfg.tol_angle,
        },
        "trials": [
            {
                "kind": rec.kind,
                "radius": rec.radius,
                "index": rec.index,
                "theta": rec.theta,
                "half_diagonal": rec.half_diagonal,
                "pythagoras_abs": rec.pythagoras_abs,
                "pythagoras_rel": rec.pythagoras_rel,
                "equiangular_spread": rec.equiangular_spread,
                "proper_angle": rec.proper_angle,
                "parallelogram": rec.parallelogram,
                "parallelogram_z": rec.parallelogram_z,
                "coplanarity": rec.coplanarity,
                "rectangle": rec.rectangle,
                "rectangle_minkowski": rec.rectangle_minkowski,
                "breadcrust": rec.breadcrust,
                "passed": rec.passed,
            }
            for rec in report.records
        ],
        "settings": [
            {
                "kind": s.kind,
                "radius": s.radius,
                "trials": s.trials,
                "max_residuals": dict(s.max_residuals),
                "mean_residuals": dict(s.mean_residuals),
            }
            for s in report.settings
        ],
        "checks": [
            {
                "name": c.name,
                "tolerance": c.tolerance,
                "worst": c.worst,
                "passed": c.passed,
            }
            for c in report.checks
        ],
        "passed": report.passed,
    }


def report_from_dict(data: dict) -> VerificationReport:
    cfg = data["config"]
    config = TrialConfig(
        kinds=tuple(cfg["kinds"]),
        radii=tuple(cfg["radii"]),
        trials=cfg["trials"],
        s_frac=tuple(cfg["s_frac"]),
        theta_frac=tuple(cfg["theta_frac"]),
        seed=cfg["seed"],
        tol_theorem=cfg["tol_theorem"],
        tol_proof=cfg["tol_proof"],
        tol_oracle=cfg["tol_oracle"],
        tol_angle=cfg["tol_angle"],
    )
    records = tuple(TrialRecord(**rec) for rec in data["trials"])
    settings = tuple(SettingSummary(**s) for s in data["settings"])
    checks = tuple(CriterionCheck(**c) for c in data["checks"])
    return VerificationReport(
        config=config,
        records=records,
        settings=settings,
        checks=checks,
        passed=data["passed"],
    )


def report_json(report: VerificationReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(value) if isinstance(value, float) else str(value)


def report_csv(report: VerificationReport) -> str:
    """One row per trial in trial order, then a final aggregate row holding
    the overall maxima."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in report.records:
        writer.writerow(
            [
                rec.kind,
                _cell(rec.radius),
                rec.index,
                _cell(rec.theta),
                _cell(rec.half_diagonal),
                _cell(rec.pythagoras_abs),
                _cell(rec.pythagoras_rel),
                _cell(rec.equiangular_spread),
                _cell(rec.proper_angle),
                _cell(rec.parallelogram),
                _cell(rec.parallelogram_z),
                _cell(rec.coplanarity),
                _cell(rec.rectangle),
                _cell(rec.rectangle_minkowski),
                _cell(rec.breadcrust),
                _cell(rec.passed),
            ]
        )
    overall: dict[str, float] = {}
    for summary in report.settings:
        for name, value in summary.max_residuals.items():
            overall[name] = max(overall.get(name, -math.inf), value)
    writer.writerow(
        [
            "aggregate",
            "",
            "",
            "",
            "",
            _cell(overall.get("pythagoras_abs")),
            _cell(overall.get("pythagoras_rel")),
            _cell(overall.get("equiangular_spread")),
            _cell(overall.get("proper_angle")),
            _cell(overall.get("parallelogram")),
            _cell(overall.get("parallelogram_z")),
            _cell(overall.get("coplanarity")),
            _cell(overall.get("rectangle")),
            _cell(overall.get("rectangle_minkowski")),
            _cell(overall.get("breadcrust")),
            _cell(report.passed),
        ]
    )
    return out.getvalue()


def geometry_to_dict(geometry: Geometry) -> dict:
    return {"kind": geometry.kind.value, "radius": geometry.r}


def geometry_from_dict(data: dict) -> Geometry:
    kind = GeometryKind(data["kind"])
    if kind is GeometryKind.EUCLIDEAN:
        return Geometry.euclidean()
    return Geometry(kind, data["radius"])


def figure_to_dict(q: EquiangularQuadrilateral, residuals: dict) -> dict:
    """Full single-figure record: construction data, measured angles and
    lengths, the three disk areas, and the verification residuals."""
    ang_a, ang_b, ang_d, ang_c = interior_angles(q)
    ab = distance(q.a, q.b)
    ac = distance(q.a, q.c)
    ad = distance(q.a, q.d)
    return {
        "geometry": geometry_to_dict(q.geometry),
        "center": list(q.center.coords),
        "theta": q.diag_angle,
        "half_diagonal": q.half_diagonal,
        "vertices": {
            "A": list(q.a.coords),
            "B": list(q.b.coords),
            "D": list(q.d.coords),
            "C": list(q.c.coords),
        },
        "angles": {"A": ang_a, "B": ang_b, "D": ang_d, "C": ang_c},
        "side_lengths": {
            "AB": ab,
            "BD": distance(q.b, q.d),
            "DC": distance(q.d, q.c),
            "CA": distance(q.c, q.a),
        },
        "diagonal_lengths": {"AD": ad, "BC": distance(q.b, q.c)},
        "disk_areas": {
            "AB": disk_area(Disk(q.a, ab)),
            "AC": disk_area(Disk(q.a, ac)),
            "AD": disk_area(Disk(q.a, ad)),
        },
        "residuals": residuals,
    }


def figure_from_dict(data: dict) -> EquiangularQuadrilateral:
    """Rebuild the quadrilateral from its serialized vertices."""
    geometry = geometry_from_dict(data["geometry"])
    vertices = {
        name: SurfacePoint(geometry, np.asarray(coords, dtype=float))
        for name, coords in data["vertices"].items()
    }
    return EquiangularQuadrilateral(
        geometry=geometry,
        a=vertices["A"],
        b=vertices["B"],
        d=vertices["D"],
        c=vertices["C"],
        center=SurfacePoint(geometry, np.asarray(data["center"], dtype=float)),
        half_diagonal=data["half_diagonal"],
        diag_angle=data["theta"],
    )
