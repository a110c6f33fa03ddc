"""Equiangular quadrilaterals and properly angled triangles.

An equiangular quadrilateral is parameterized by its diagonal data: center,
half-diagonal length, and the angle between the diagonals. The vertices are
laid out by the exponential map, so the defining symmetry (equal diagonals
bisecting each other) holds by construction; the check functions re-measure
the angle properties independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GeometryMismatch, HalfDiagonalTooLarge, ThetaOutOfRange
from .surfaces import (
    Geometry,
    GeometryKind,
    SurfacePoint,
    TangentVector,
    angle_at,
    exp_map,
    rotate_tangent,
)


@dataclass(frozen=True, eq=False)
class EquiangularQuadrilateral:
    """Vertices a, b, d, c in cyclic order; diagonals are a-d and b-c,
    crossing at ``center`` with half-length ``half_diagonal`` and angle
    ``diag_angle`` between them."""

    geometry: Geometry
    a: SurfacePoint
    b: SurfacePoint
    d: SurfacePoint
    c: SurfacePoint
    center: SurfacePoint
    half_diagonal: float
    diag_angle: float

    def __post_init__(self):
        for v in (self.a, self.b, self.d, self.c, self.center):
            if v.geometry != self.geometry:
                raise GeometryMismatch("all vertices must share the geometry")

    @property
    def vertices(self) -> dict[str, SurfacePoint]:
        return {"A": self.a, "B": self.b, "D": self.d, "C": self.c}


@dataclass(frozen=True, eq=False)
class ProperTriangle:
    """Triangle in which one angle equals the sum of the other two."""

    geometry: Geometry
    a: SurfacePoint
    b: SurfacePoint
    c: SurfacePoint
    proper_vertex: str = "a"

    def __post_init__(self):
        if self.proper_vertex not in ("a", "b", "c"):
            raise ValueError(f"proper_vertex must be a, b or c, got {self.proper_vertex}")
        for v in (self.a, self.b, self.c):
            if v.geometry != self.geometry:
                raise GeometryMismatch("all vertices must share the geometry")


def build_equiangular_quadrilateral(
    geometry: Geometry,
    center: SurfacePoint,
    direction: TangentVector,
    theta: float,
    s: float,
) -> EquiangularQuadrilateral:
    """Lay out the quadrilateral with diagonal directions ``direction`` and
    its rotation by ``theta``, each vertex at distance s from center.

    theta must lie in (0, pi); on the sphere s must stay below pi*r/2 so
    every side and diagonal is realized by a unique shortest arc.
    """
    if not (0.0 < theta < math.pi):
        raise ThetaOutOfRange(f"need 0 < theta < pi, got {theta}")
    if not (math.isfinite(s) and s > 0.0):
        raise ValueError(f"half-diagonal must be positive, got {s}")
    if geometry.kind is GeometryKind.SPHERICAL and s >= math.pi * geometry.r / 2.0:
        raise HalfDiagonalTooLarge(
            f"half-diagonal {s} exceeds spherical bound pi*r/2 = "
            f"{math.pi * geometry.r / 2.0}"
        )
    turned = rotate_tangent(direction, theta)
    return EquiangularQuadrilateral(
        geometry=geometry,
        a=exp_map(center, direction, s),
        d=exp_map(center, -direction, s),
        b=exp_map(center, turned, s),
        c=exp_map(center, -turned, s),
        center=center,
        half_diagonal=s,
        diag_angle=theta,
    )


def interior_angles(q: EquiangularQuadrilateral) -> tuple[float, float, float, float]:
    """The four interior angles at a, b, d, c (neighbors in cyclic order
    a-b-d-c)."""
    return (
        angle_at(q.a, q.b, q.c),
        angle_at(q.b, q.a, q.d),
        angle_at(q.d, q.b, q.c),
        angle_at(q.c, q.d, q.a),
    )


def check_equiangular(q: EquiangularQuadrilateral, tol: float) -> tuple[float, bool]:
    """Re-measure the four interior angles; return (max spread, spread <= tol)."""
    angles = interior_angles(q)
    spread = max(angles) - min(angles)
    return spread, spread <= tol


def split_to_proper_triangle(q: EquiangularQuadrilateral) -> ProperTriangle:
    """Half of the quadrilateral cut along the b-c diagonal; the angle at a
    equals the sum of the angles at b and c."""
    return ProperTriangle(geometry=q.geometry, a=q.a, b=q.b, c=q.c, proper_vertex="a")


def check_proper(t: ProperTriangle, tol: float) -> tuple[float, bool]:
    """Residual of the defining angle identity; ok iff residual <= tol."""
    ang = {
        "a": angle_at(t.a, t.b, t.c),
        "b": angle_at(t.b, t.a, t.c),
        "c": angle_at(t.c, t.a, t.b),
    }
    proper = ang.pop(t.proper_vertex)
    residual = abs(proper - sum(ang.values()))
    return residual, residual <= tol
