"""The three constant-curvature model surfaces and their point calculus.

Models:
  * Euclidean plane, embedded as the plane z = 0 with the Euclidean form;
  * sphere x^2 + y^2 + z^2 = r^2 with the Euclidean form;
  * upper hyperboloid sheet x^2 + y^2 - z^2 = -r^2, z > 0, with the
    Lorentzian form.

All three share one ambient point type so distances, exponential/log maps,
angles, and pole-normalizing isometries have a single interface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    AntipodalPoints,
    BaseMismatch,
    CoincidentPoints,
    DomainExcursion,
    GeometryMismatch,
    NotOnSurface,
    NotProjectable,
    NotUnitDirection,
)
from .forms import (
    BilinearForm,
    Isometry,
    as_vector,
    form_dot,
    orthonormal_frame_at,
    validate_isometry,
)
from .tolerances import (
    ANTIPODAL_MARGIN,
    COINCIDENT_REL,
    DOMAIN_EXCURSION,
    SURFACE_TOL,
    UNIT_NORM_TOL,
)

_EX = np.array([1.0, 0.0, 0.0])
_EY = np.array([0.0, 1.0, 0.0])
_EX.setflags(write=False)
_EY.setflags(write=False)


class GeometryKind(Enum):
    EUCLIDEAN = "euclidean"
    SPHERICAL = "spherical"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class Geometry:
    """Curvature regime: flat plane, sphere of radius r, or hyperboloid of
    parameter r. The radius is absent for the flat plane."""

    kind: GeometryKind
    r: float | None = None

    def __post_init__(self):
        if self.kind is GeometryKind.EUCLIDEAN:
            if self.r is not None:
                raise ValueError("the flat plane takes no radius parameter")
        else:
            if self.r is None or not math.isfinite(self.r) or self.r <= 0.0:
                raise ValueError(f"radius must be positive and finite, got {self.r}")
            object.__setattr__(self, "r", float(self.r))

    @classmethod
    def euclidean(cls) -> "Geometry":
        return cls(GeometryKind.EUCLIDEAN)

    @classmethod
    def spherical(cls, r: float) -> "Geometry":
        return cls(GeometryKind.SPHERICAL, r)

    @classmethod
    def hyperbolic(cls, r: float) -> "Geometry":
        return cls(GeometryKind.HYPERBOLIC, r)

    @property
    def is_curved(self) -> bool:
        return self.kind is not GeometryKind.EUCLIDEAN

    @property
    def form(self) -> BilinearForm:
        if self.kind is GeometryKind.HYPERBOLIC:
            return BilinearForm.LORENTZIAN
        return BilinearForm.EUCLIDEAN

    @property
    def length_scale(self) -> float:
        """r for curved models, 1 for the flat plane (used by tolerances)."""
        return 1.0 if self.r is None else self.r

    @property
    def pole(self) -> "SurfacePoint":
        """(0, 0, r) on curved models; the origin of the flat plane."""
        if self.kind is GeometryKind.EUCLIDEAN:
            return SurfacePoint(self, np.zeros(3))
        return SurfacePoint(self, np.array([0.0, 0.0, self.r]))


@dataclass(frozen=True, eq=False)
class SurfacePoint:
    """An ambient 3-vector constrained to lie on the model surface."""

    geometry: Geometry
    coords: np.ndarray

    def __post_init__(self):
        c = as_vector(self.coords).copy()
        g = self.geometry
        if g.kind is GeometryKind.EUCLIDEAN:
            if c[2] != 0.0:
                raise NotOnSurface(f"flat-plane point must have z = 0, got z = {c[2]}")
        elif g.kind is GeometryKind.SPHERICAL:
            res = abs(c[0] * c[0] + c[1] * c[1] + c[2] * c[2] - g.r * g.r)
            if res > SURFACE_TOL * g.r * g.r:
                raise NotOnSurface(f"sphere-equation residual {res:.3e}")
        else:
            res = abs(c[0] * c[0] + c[1] * c[1] - c[2] * c[2] + g.r * g.r)
            if res > SURFACE_TOL * g.r * g.r:
                raise NotOnSurface(f"hyperboloid-equation residual {res:.3e}")
            if c[2] <= 0.0:
                raise NotOnSurface("hyperboloid point must lie on the upper sheet")
        c.setflags(write=False)
        object.__setattr__(self, "coords", c)


@dataclass(frozen=True, eq=False)
class TangentVector:
    """An ambient vector attached to a surface point and lying in its
    tangent plane (form-orthogonal to the base point on curved models)."""

    base: SurfacePoint
    v: np.ndarray

    def __post_init__(self):
        v = as_vector(self.v).copy()
        g = self.base.geometry
        if g.kind is GeometryKind.EUCLIDEAN:
            if v[2] != 0.0:
                raise NotOnSurface("flat-plane tangent vector must have z = 0")
        else:
            norm = math.sqrt(float(v @ v))
            if norm > 0.0:
                tangency = abs(form_dot(self.base.coords, v, g.form))
                if tangency > SURFACE_TOL * g.r * norm:
                    raise NotOnSurface(
                        f"vector is not tangent (residual {tangency:.3e})"
                    )
            if g.kind is GeometryKind.HYPERBOLIC and norm > 0.0:
                if form_dot(v, v, g.form) <= 0.0:
                    raise NotOnSurface("hyperboloid tangent vectors must be spacelike")
        v.setflags(write=False)
        object.__setattr__(self, "v", v)

    def __neg__(self) -> "TangentVector":
        return TangentVector(self.base, -self.v)

    @property
    def form_norm_sq(self) -> float:
        return form_dot(self.v, self.v, self.base.geometry.form)


@dataclass(frozen=True, eq=False)
class GeodesicSegment:
    """Shortest geodesic between two points, with its length."""

    p: SurfacePoint
    q: SurfacePoint
    length: float

    def __post_init__(self):
        d = distance(self.p, self.q)
        scale = self.p.geometry.length_scale
        if abs(self.length - d) > 1e-9 * max(scale, d):
            raise ValueError(f"stored length {self.length} != distance {d}")

    @classmethod
    def between(cls, p: SurfacePoint, q: SurfacePoint) -> "GeodesicSegment":
        return cls(p, q, distance(p, q))


def _guarded_arccos(t: float) -> float:
    if t > 1.0 + DOMAIN_EXCURSION or t < -1.0 - DOMAIN_EXCURSION:
        raise DomainExcursion(f"arccos argument {t!r} is too far outside [-1, 1]")
    return math.acos(min(1.0, max(-1.0, t)))


def _guarded_arcosh(t: float) -> float:
    if t < 1.0 - DOMAIN_EXCURSION:
        raise DomainExcursion(f"arcosh argument {t!r} is too far below 1")
    return math.acosh(max(1.0, t))


def _require_same_geometry(p: SurfacePoint, q: SurfacePoint):
    if p.geometry != q.geometry:
        raise GeometryMismatch(f"{p.geometry} vs {q.geometry}")


def project_to_surface(geometry: Geometry, raw) -> SurfacePoint:
    """Land an ambient vector on the surface.

    Curved models rescale by the unique positive factor; the flat plane
    drops the z component. Idempotent on points already on the surface.
    """
    raw = as_vector(raw)
    if geometry.kind is GeometryKind.EUCLIDEAN:
        return SurfacePoint(geometry, np.array([raw[0], raw[1], 0.0]))
    if geometry.kind is GeometryKind.SPHERICAL:
        n = math.sqrt(float(raw @ raw))
        if n == 0.0:
            raise NotProjectable("cannot project the zero vector to the sphere")
        return SurfacePoint(geometry, raw * (geometry.r / n))
    q = raw[0] * raw[0] + raw[1] * raw[1] - raw[2] * raw[2]
    if q >= 0.0 or raw[2] <= 0.0:
        raise NotProjectable(
            "hyperboloid projection needs a timelike vector with z > 0"
        )
    return SurfacePoint(geometry, raw * (geometry.r / math.sqrt(-q)))


def distance(p: SurfacePoint, q: SurfacePoint) -> float:
    """Geodesic distance between two points of the same geometry."""
    _require_same_geometry(p, q)
    g = p.geometry
    a, b = p.coords, q.coords
    if g.kind is GeometryKind.EUCLIDEAN:
        dx, dy = a[0] - b[0], a[1] - b[1]
        return math.sqrt(dx * dx + dy * dy)
    if g.kind is GeometryKind.SPHERICAL:
        t = form_dot(a, b, BilinearForm.EUCLIDEAN) / (g.r * g.r)
        return g.r * _guarded_arccos(t)
    t = -form_dot(a, b, BilinearForm.LORENTZIAN) / (g.r * g.r)
    return g.r * _guarded_arcosh(t)


def exp_map(p: SurfacePoint, direction: TangentVector, s: float) -> SurfacePoint:
    """Walk distance s >= 0 from p along the geodesic with the given unit
    tangent direction."""
    if direction.base is not p:
        _require_same_geometry(direction.base, p)
        scale = p.geometry.length_scale
        if float(np.max(np.abs(direction.base.coords - p.coords))) > SURFACE_TOL * scale:
            raise BaseMismatch("tangent vector is based at a different point")
    if abs(direction.form_norm_sq - 1.0) > UNIT_NORM_TOL:
        raise NotUnitDirection(
            f"direction has squared form-norm {direction.form_norm_sq!r}"
        )
    if s < 0.0:
        raise ValueError("geodesic parameter s must be nonnegative")
    g = p.geometry
    v = direction.v
    if g.kind is GeometryKind.EUCLIDEAN:
        return SurfacePoint(g, p.coords + s * v)
    if g.kind is GeometryKind.SPHERICAL:
        t = s / g.r
        raw = math.cos(t) * p.coords + (g.r * math.sin(t)) * v
    else:
        t = s / g.r
        raw = math.cosh(t) * p.coords + (g.r * math.sinh(t)) * v
    return project_to_surface(g, raw)


def log_map(p: SurfacePoint, q: SurfacePoint) -> TangentVector:
    """Unit tangent direction at p pointing along the geodesic toward q.

    Raises CoincidentPoints when the direction is undefined and
    AntipodalPoints on the sphere where the geodesic is not unique.
    """
    _require_same_geometry(p, q)
    g = p.geometry
    if g.kind is GeometryKind.EUCLIDEAN:
        w = q.coords - p.coords
        n = math.sqrt(float(w @ w))
        if n <= COINCIDENT_REL * max(1.0, float(np.max(np.abs(p.coords)))):
            raise CoincidentPoints("direction between coincident points is undefined")
        return TangentVector(p, w / n)
    if g.kind is GeometryKind.SPHERICAL:
        t = form_dot(p.coords, q.coords, BilinearForm.EUCLIDEAN) / (g.r * g.r)
        if t < -1.0 + ANTIPODAL_MARGIN:
            raise AntipodalPoints("antipodal points admit no unique geodesic")
        d = g.r * _guarded_arccos(t)
        if d <= COINCIDENT_REL * g.r:
            raise CoincidentPoints("direction between coincident points is undefined")
        w = q.coords - math.cos(d / g.r) * p.coords
    else:
        t = -form_dot(p.coords, q.coords, BilinearForm.LORENTZIAN) / (g.r * g.r)
        d = g.r * _guarded_arcosh(t)
        if d <= COINCIDENT_REL * g.r:
            raise CoincidentPoints("direction between coincident points is undefined")
        w = q.coords - math.cosh(d / g.r) * p.coords
    ww = form_dot(w, w, g.form)
    return TangentVector(p, w / math.sqrt(ww))


def angle_at(vertex: SurfacePoint, p: SurfacePoint, q: SurfacePoint) -> float:
    """Interior angle at ``vertex`` between the geodesics toward p and q,
    in [0, pi]."""
    u1 = log_map(vertex, p)
    u2 = log_map(vertex, q)
    c = form_dot(u1.v, u2.v, vertex.geometry.form)
    return _guarded_arccos(c)


def tangent_frame_at(p: SurfacePoint) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic orthonormal basis of the tangent plane at p."""
    g = p.geometry
    if g.kind is GeometryKind.EUCLIDEAN:
        return _EX, _EY
    return orthonormal_frame_at(p.coords, g.form)


def tangent_direction(p: SurfacePoint, psi: float) -> TangentVector:
    """Unit tangent at p at angle psi within the deterministic frame."""
    e1, e2 = tangent_frame_at(p)
    return TangentVector(p, math.cos(psi) * e1 + math.sin(psi) * e2)


def rotate_tangent(t: TangentVector, angle: float) -> TangentVector:
    """Rotate a tangent vector by ``angle`` within its tangent plane.

    The rotation is taken in the deterministic frame at the base point;
    the frame gauge affects only orientation, not any measured property.
    """
    e1, e2 = tangent_frame_at(t.base)
    form = t.base.geometry.form
    a = form_dot(t.v, e1, form)
    b = form_dot(t.v, e2, form)
    ca, sa = math.cos(angle), math.sin(angle)
    w = (a * ca - b * sa) * e1 + (a * sa + b * ca) * e2
    return TangentVector(t.base, w)


def isometry_to_pole(p: SurfacePoint) -> Isometry:
    """A validated isometry M of p's geometry with M(p) = pole.

    Curved models use a z-rotation into the xz-plane followed by a tilt
    (rotation about y, or an xz-boost). Both factors preserve the form to
    a few ulp, so validation stays well inside LINEAR_TOL even far from
    the pole; a frame-inversion construction would not.
    """
    g = p.geometry
    if g.kind is GeometryKind.EUCLIDEAN:
        return validate_isometry(np.eye(3), BilinearForm.EUCLIDEAN, translation=-p.coords)
    x, y, z = p.coords
    rho = math.hypot(x, y)
    phi = math.atan2(y, x) if rho > 0.0 else 0.0
    cp, sp = math.cos(phi), math.sin(phi)
    rot_z = np.array([[cp, sp, 0.0], [-sp, cp, 0.0], [0.0, 0.0, 1.0]])
    if g.kind is GeometryKind.SPHERICAL:
        alpha = math.atan2(rho, z)
        ca, sa = math.cos(alpha), math.sin(alpha)
        tilt = np.array([[ca, 0.0, -sa], [0.0, 1.0, 0.0], [sa, 0.0, ca]])
    else:
        t = math.asinh(rho / g.r)
        ct, st = math.cosh(t), math.sinh(t)
        tilt = np.array([[ct, 0.0, -st], [0.0, 1.0, 0.0], [-st, 0.0, ct]])
    return validate_isometry(tilt @ rot_z, g.form)


def apply_isometry(m: Isometry, p: SurfacePoint) -> SurfacePoint:
    """Move a surface point by a validated isometry of its geometry."""
    if m.form is not p.geometry.form:
        raise GeometryMismatch(
            f"isometry of the {m.form.value} form applied to a "
            f"{p.geometry.kind.value} point"
        )
    return SurfacePoint(p.geometry, m.transform(p.coords))


def apply_isometry_tangent(m: Isometry, t: TangentVector) -> TangentVector:
    """Push a tangent vector forward along an isometry (linear action)."""
    return TangentVector(apply_isometry(m, t.base), m.transform_linear(t.v))
