"""Constant-curvature plane geometry kernel.

Euclidean, spherical, and hyperbolic plane geometry on one ambient-
coordinate interface, with geodesic disk areas, figure constructions, and
a numerical verification harness for the disk-area identity on the
diagonal of an equiangular quadrilateral.
"""

__version__ = "0.1.0"

from .constructions import (
    EquiangularQuadrilateral,
    ProperTriangle,
    build_equiangular_quadrilateral,
    check_equiangular,
    check_proper,
    interior_angles,
    split_to_proper_triangle,
)
from .disks import (
    Disk,
    SectionPlane,
    Slice,
    circle_section_plane,
    disk_area,
    disk_area_quadrature,
    slice_area,
    slice_area_quadrature,
)
from .forms import (
    BilinearForm,
    Isometry,
    form_dot,
    orthonormal_frame_at,
    validate_isometry,
)
from .surfaces import (
    GeodesicSegment,
    Geometry,
    GeometryKind,
    SurfacePoint,
    TangentVector,
    angle_at,
    apply_isometry,
    apply_isometry_tangent,
    distance,
    exp_map,
    isometry_to_pole,
    log_map,
    project_to_surface,
    rotate_tangent,
    tangent_direction,
    tangent_frame_at,
)
from .verify import (
    TrialConfig,
    VerificationReport,
    breadcrust_residual,
    coplanarity_residual,
    parallelogram_residual,
    pythagoras_residual,
    rectangle_residual,
    rectangle_residual_minkowski,
    run_trials,
)

__all__ = [
    "BilinearForm",
    "Disk",
    "EquiangularQuadrilateral",
    "GeodesicSegment",
    "Geometry",
    "GeometryKind",
    "Isometry",
    "ProperTriangle",
    "SectionPlane",
    "Slice",
    "SurfacePoint",
    "TangentVector",
    "TrialConfig",
    "VerificationReport",
    "angle_at",
    "apply_isometry",
    "apply_isometry_tangent",
    "breadcrust_residual",
    "build_equiangular_quadrilateral",
    "check_equiangular",
    "check_proper",
    "circle_section_plane",
    "coplanarity_residual",
    "disk_area",
    "disk_area_quadrature",
    "distance",
    "exp_map",
    "form_dot",
    "interior_angles",
    "isometry_to_pole",
    "log_map",
    "orthonormal_frame_at",
    "parallelogram_residual",
    "project_to_surface",
    "pythagoras_residual",
    "rectangle_residual",
    "rectangle_residual_minkowski",
    "rotate_tangent",
    "run_trials",
    "slice_area",
    "slice_area_quadrature",
    "split_to_proper_triangle",
    "tangent_direction",
    "tangent_frame_at",
    "validate_isometry",
]
