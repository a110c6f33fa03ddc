"""Central tolerance constants.

Every numerical bound the kernel enforces lives here so it can be tuned in
one place. Values are the defaults the test suite pins; functions that take
an explicit ``tol`` argument default to these.
"""

# Linear-algebra residuals (form preservation, frame orthonormality).
LINEAR_TOL = 1e-12

# Relative surface-membership / exp-log roundtrip bound.
SURFACE_TOL = 1e-10

# Angle comparisons, radians.
ANGLE_TOL = 1e-9

# arccos/arcosh arguments may stray this far outside their domain before the
# kernel treats the input as corrupted instead of clamping.
DOMAIN_EXCURSION = 1e-8

# <p,q>_E / r^2 below -1 + this margin counts as antipodal on the sphere.
ANTIPODAL_MARGIN = 1e-12

# Points closer than this (relative to the length scale) have no direction.
COINCIDENT_REL = 1e-12

# Allowed deviation of a "unit" tangent vector's squared form-norm from 1.
UNIT_NORM_TOL = 1e-9

# Default relative error target for the quadrature oracle.
QUADRATURE_TOL = 1e-9

# Default verification-sweep tolerances.
THEOREM_TOL = 1e-9
PROOF_TOL = 1e-10
ORACLE_TOL = 1e-7
