"""Circles as plane sections, slabs between parallel planes, and disk areas.

The closed-form geodesic disk areas are one-line consequences of the
equal-width slab property (slab area = width * 2*pi*r on both curved
models). They are cross-checked against an independent adaptive quadrature
of the surface-of-revolution area integral, which never calls the closed
forms.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .errors import QuadratureNonConvergent, UnsupportedGeometry
from .surfaces import Geometry, GeometryKind, SurfacePoint, isometry_to_pole
from .tolerances import QUADRATURE_TOL

_GL7 = np.polynomial.legendre.leggauss(7)
_GL15 = np.polynomial.legendre.leggauss(15)

_MAX_PANELS = 4096
_INITIAL_PANELS = 4


@dataclass(frozen=True, eq=False)
class Disk:
    """Geodesic disk: all surface points within distance rho of center."""

    center: SurfacePoint
    rho: float

    def __post_init__(self):
        if not math.isfinite(self.rho) or self.rho < 0.0:
            raise ValueError(f"geodesic radius must be >= 0, got {self.rho}")
        g = self.center.geometry
        if g.kind is GeometryKind.SPHERICAL and self.rho >= math.pi * g.r:
            raise ValueError(
                f"spherical disk radius {self.rho} reaches the pi*r bound"
            )

    @property
    def geometry(self) -> Geometry:
        return self.center.geometry


@dataclass(frozen=True)
class Slice:
    """Slab of a curved surface between the planes z = z1 and z = z2."""

    geometry: Geometry
    z1: float
    z2: float

    def __post_init__(self):
        g = self.geometry
        if not g.is_curved:
            raise UnsupportedGeometry("slices are defined on curved models only")
        if not (math.isfinite(self.z1) and math.isfinite(self.z2)):
            raise ValueError("slice planes must be finite")
        if self.z1 > self.z2:
            raise ValueError(f"need z1 <= z2, got {self.z1} > {self.z2}")
        if g.kind is GeometryKind.SPHERICAL:
            if self.z1 < -g.r - 1e-12 * g.r or self.z2 > g.r + 1e-12 * g.r:
                raise ValueError("spherical slice planes must lie within [-r, r]")
        else:
            if self.z1 < g.r - 1e-12 * g.r:
                raise ValueError("hyperboloid slice planes must lie at z >= r")

    @property
    def width(self) -> float:
        return self.z2 - self.z1


@dataclass(frozen=True, eq=False)
class SectionPlane:
    """Ambient plane {x : <normal, x>_E = offset} with unit normal."""

    normal: np.ndarray
    offset: float

    def __post_init__(self):
        n = np.asarray(self.normal, dtype=float)
        norm = float(np.linalg.norm(n))
        if norm == 0.0:
            raise ValueError("plane normal must be nonzero")
        offset = float(self.offset) / norm
        n = n / norm
        if n[2] < 0.0:
            n, offset = -n, -offset
        n.setflags(write=False)
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", offset)

    def signed_distance(self, x) -> float:
        return float(self.normal @ np.asarray(x, dtype=float)) - self.offset


def circle_section_plane(d: Disk) -> SectionPlane:
    """The ambient plane cutting out the boundary circle of a curved disk.

    For a pole-centered disk this is z = r*cos(rho/r) on the sphere and
    z = r*cosh(rho/r) on the hyperboloid; other centers are normalized to
    the pole and the plane is mapped back.
    """
    g = d.geometry
    if not g.is_curved:
        raise UnsupportedGeometry(
            "a flat disk's boundary is not a section of the embedding"
        )
    if g.kind is GeometryKind.SPHERICAL:
        h = g.r * math.cos(d.rho / g.r)
    else:
        h = g.r * math.cosh(d.rho / g.r)
    m = isometry_to_pole(d.center)
    return SectionPlane(m.m.T @ np.array([0.0, 0.0, 1.0]), h)


def slice_area(s: Slice) -> float:
    """Area of the slab: width * 2*pi*r, independent of placement."""
    return (s.z2 - s.z1) * 2.0 * math.pi * s.geometry.r


def disk_area(d: Disk) -> float:
    """Closed-form geodesic disk area.

    sin/sinh half-angle forms are used so the flat limit r -> infinity is
    computed without cancellation.
    """
    g = d.geometry
    if g.kind is GeometryKind.EUCLIDEAN:
        return math.pi * d.rho * d.rho
    half = d.rho / (2.0 * g.r)
    if g.kind is GeometryKind.SPHERICAL:
        s = math.sin(half)
    else:
        s = math.sinh(half)
    return 4.0 * math.pi * g.r * g.r * s * s


def _disk_z_range(d: Disk) -> tuple[float, float]:
    g = d.geometry
    if g.kind is GeometryKind.SPHERICAL:
        return g.r * math.cos(d.rho / g.r), g.r
    return g.r, g.r * math.cosh(d.rho / g.r)


def _profile_integrand(geometry: Geometry):
    # Surface-of-revolution area element f(z) * sqrt(f'(z)^2 +/- 1) with
    # f the profile curve; evaluated pointwise, never simplified, so the
    # quadrature stays an independent check of the closed forms.
    r2 = geometry.r * geometry.r
    if geometry.kind is GeometryKind.SPHERICAL:

        def g(z: np.ndarray) -> np.ndarray:
            u = r2 - z * z
            return np.sqrt(u) * np.sqrt((z * z) / u + 1.0)

    else:

        def g(z: np.ndarray) -> np.ndarray:
            u = z * z - r2
            return np.sqrt(u) * np.sqrt((z * z) / u - 1.0)

    return g


def _panel(g, a: float, b: float) -> tuple[float, float]:
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    i15 = half * float(_GL15[1] @ g(mid + half * _GL15[0]))
    i7 = half * float(_GL7[1] @ g(mid + half * _GL7[0]))
    return i15, abs(i15 - i7)


def _revolution_area_quadrature(
    geometry: Geometry, z1: float, z2: float, tol: float
) -> float:
    if not geometry.is_curved:
        raise UnsupportedGeometry("the area integral is defined on curved models")
    if not (math.isfinite(tol) and tol > 0.0):
        raise ValueError(f"quadrature tolerance must be positive, got {tol}")
    if z2 <= z1:
        return 0.0
    g = _profile_integrand(geometry)
    edges = np.linspace(z1, z2, _INITIAL_PANELS + 1)
    heap: list[tuple[float, int, float, float, float]] = []
    counter = 0
    total = 0.0
    total_err = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        i15, err = _panel(g, a, b)
        heapq.heappush(heap, (-err, counter, a, b, i15))
        counter += 1
        total += i15
        total_err += err
    floor = 1e-300
    while (
        math.isfinite(total_err)
        and total_err > tol * max(abs(total), floor)
        and counter < _MAX_PANELS
    ):
        neg_err, _, a, b, i15 = heapq.heappop(heap)
        total -= i15
        total_err += neg_err  # neg_err = -err
        mid = 0.5 * (a + b)
        for lo, hi in ((a, mid), (mid, b)):
            i, err = _panel(g, lo, hi)
            heapq.heappush(heap, (-err, counter, lo, hi, i))
            counter += 1
            total += i
            total_err += err
    if not math.isfinite(total) or total_err > tol * max(abs(total), floor):
        raise QuadratureNonConvergent(
            f"error estimate {total_err:.3e} above {tol:.1e} * {total:.6e} "
            f"after {counter} panels"
        )
    return 2.0 * math.pi * total


def disk_area_quadrature(d: Disk, tol: float = QUADRATURE_TOL) -> float:
    """Disk area via adaptive quadrature of the revolution-area integral.

    Independent of disk_area: the integrand is built from the profile
    curve and its derivative, and the estimated error is kept below
    tol * result. The area depends only on rho, so the integral is taken
    in the pole frame.
    """
    g = d.geometry
    if not g.is_curved:
        raise UnsupportedGeometry("quadrature applies to curved models only")
    if d.rho == 0.0:
        return 0.0
    z_lo, z_hi = _disk_z_range(d)
    return _revolution_area_quadrature(g, z_lo, z_hi, tol)


def slice_area_quadrature(s: Slice, tol: float = QUADRATURE_TOL) -> float:
    """Slab area via the same independent quadrature path."""
    return _revolution_area_quadrature(s.geometry, s.z1, s.z2, tol)
