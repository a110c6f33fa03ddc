"""Flat SVG drawings of quadrilateral figures.

All curves are sampled polylines (no SVG arc primitives), so the output is
projection-agnostic and byte-deterministic for a fixed figure and spec.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constructions import EquiangularQuadrilateral
from .errors import ProjectionMismatch
from .surfaces import (
    GeometryKind,
    SurfacePoint,
    distance,
    exp_map,
    log_map,
    tangent_direction,
)

ALL_ELEMENTS = ("vertices", "sides", "diagonals", "disks", "circumcircle")

PROJECTION_FOR_KIND = {
    GeometryKind.SPHERICAL: "orthographic-xy",
    GeometryKind.HYPERBOLIC: "poincare-disk",
    GeometryKind.EUCLIDEAN: "identity",
}

_DISK_COLORS = {"AB": "#3b6fb6", "AC": "#2e9e5b", "AD": "#d9a62e"}


@dataclass(frozen=True)
class RenderSpec:
    """Projection plus drawing options; elements picks what to draw."""

    projection: str
    width: int = 600
    stroke_width: float = 1.5
    samples: int = 96
    elements: tuple[str, ...] = ALL_ELEMENTS

    def __post_init__(self):
        if self.projection not in PROJECTION_FOR_KIND.values():
            raise ProjectionMismatch(f"unknown projection {self.projection!r}")
        if self.samples < 64:
            raise ValueError("curves must be sampled at 64 points or more")
        for el in self.elements:
            if el not in ALL_ELEMENTS:
                raise ValueError(f"unknown element {el!r}")


def _project(spec: RenderSpec, geometry, coords: np.ndarray) -> tuple[float, float]:
    if spec.projection == "poincare-disk":
        r = geometry.r
        f = r / (r + coords[2])
        return float(coords[0] * f), float(coords[1] * f)
    return float(coords[0]), float(coords[1])


def _geodesic_points(p: SurfacePoint, q: SurfacePoint, n: int) -> list[np.ndarray]:
    d = distance(p, q)
    u = log_map(p, q)
    return [exp_map(p, u, d * t).coords for t in np.linspace(0.0, 1.0, n)]


def _circle_points(center: SurfacePoint, rho: float, n: int) -> list[np.ndarray]:
    pts = [
        exp_map(center, tangent_direction(center, psi), rho).coords
        for psi in np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    ]
    pts.append(pts[0])  # closed curve: first point repeated
    return pts


def render_figure(q: EquiangularQuadrilateral, spec: RenderSpec) -> str:
    """Render the quadrilateral, its diagonals, the three concentric disks
    at vertex A, and the circumcircle, as standalone SVG 1.1 text."""
    if PROJECTION_FOR_KIND[q.geometry.kind] != spec.projection:
        raise ProjectionMismatch(
            f"projection {spec.projection!r} does not apply to "
            f"{q.geometry.kind.value} figures"
        )
    n = spec.samples
    polylines: list[tuple[str, str, list]] = []  # (color, dash, ambient points)
    if "disks" in spec.elements:
        for name, other in (("AB", q.b), ("AC", q.c), ("AD", q.d)):
            rho = distance(q.a, other)
            polylines.append((_DISK_COLORS[name], "", _circle_points(q.a, rho, n)))
    if "circumcircle" in spec.elements:
        polylines.append(("#999999", "6,4", _circle_points(q.center, q.half_diagonal, n)))
    if "sides" in spec.elements:
        for p1, p2 in ((q.a, q.b), (q.b, q.d), (q.d, q.c), (q.c, q.a)):
            polylines.append(("#222222", "", _geodesic_points(p1, p2, n)))
    if "diagonals" in spec.elements:
        for p1, p2 in ((q.a, q.d), (q.b, q.c)):
            polylines.append(("#888888", "3,3", _geodesic_points(p1, p2, n)))

    projected = [
        [_project(spec, q.geometry, c) for c in pts] for _, _, pts in polylines
    ]
    labeled = {name: _project(spec, q.geometry, v.coords) for name, v in q.vertices.items()}

    if spec.projection == "poincare-disk":
        half = 1.05 * q.geometry.r
        cx = cy = 0.0
    else:
        xs = [x for line in projected for x, _ in line] or [0.0]
        ys = [y for line in projected for _, y in line] or [0.0]
        xs += [x for x, _ in labeled.values()]
        ys += [y for _, y in labeled.values()]
        cx = 0.5 * (min(xs) + max(xs))
        cy = 0.5 * (min(ys) + max(ys))
        half = 0.54 * max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    w = spec.width
    scale = w / (2.0 * half)

    def px(point: tuple[float, float]) -> tuple[float, float]:
        x, y = point
        return (x - cx) * scale + w / 2.0, w / 2.0 - (y - cy) * scale

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{w}" viewBox="0 0 {w} {w}">',
        f'<rect width="{w}" height="{w}" fill="white"/>',
    ]
    if spec.projection == "poincare-disk":
        bx, by = px((0.0, 0.0))
        parts.append(
            f'<circle cx="{bx:.3f}" cy="{by:.3f}" r="{q.geometry.r * scale:.3f}" '
            f'fill="none" stroke="#cccccc" stroke-width="{spec.stroke_width:.2f}"/>'
        )
    for (color, dash, _), line in zip(polylines, projected):
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in (px(p) for p in line))
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="{spec.stroke_width:.2f}"{dash_attr}/>'
        )
    if "vertices" in spec.elements:
        for name, point in labeled.items():
            x, y = px(point)
            parts.append(
                f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{2.0 * spec.stroke_width:.2f}" '
                f'fill="#111111"/>'
            )
            parts.append(
                f'<text x="{x + 6.0:.3f}" y="{y - 6.0:.3f}" '
                f'font-family="sans-serif" font-size="16">{name}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
