"""Exception hierarchy for the geometry kernel."""


class GeometryError(Exception):
    """Base class for all kernel errors."""


class NotAnIsometry(GeometryError):
    """A matrix fails to preserve the bilinear form within tolerance."""


class WrongSheet(GeometryError):
    """A Lorentzian matrix maps the upper hyperboloid sheet to the lower one."""


class DegenerateVector(GeometryError):
    """A vector is zero or null under the form where a frame is required."""


class NotOnSurface(GeometryError):
    """Coordinates do not satisfy the model surface equation."""


class NotProjectable(GeometryError):
    """No positive rescaling lands the given vector on the surface."""


class GeometryMismatch(GeometryError):
    """Operands belong to different geometries or incompatible forms."""


class NotUnitDirection(GeometryError):
    """A tangent vector required to be unit under the form is not."""


class BaseMismatch(GeometryError):
    """A tangent vector is based at a different point than expected."""


class AntipodalPoints(GeometryError):
    """Spherical points are antipodal; the connecting geodesic is not unique."""


class CoincidentPoints(GeometryError):
    """Points coincide; a direction between them is undefined."""


class DomainExcursion(GeometryError):
    """An arccos/arcosh argument lies too far outside its domain to be roundoff."""


class UnsupportedGeometry(GeometryError):
    """The operation is undefined for this geometry kind."""


class QuadratureNonConvergent(GeometryError):
    """Adaptive quadrature could not reach the requested error bound."""


class ThetaOutOfRange(GeometryError):
    """Diagonal angle outside the open interval (0, pi)."""


class HalfDiagonalTooLarge(GeometryError):
    """Spherical half-diagonal at or beyond the pi*r/2 bound."""


class ConfigInvalid(GeometryError):
    """A trial configuration violates its own invariants."""


class ProjectionMismatch(GeometryError):
    """A render projection is incompatible with the figure's geometry."""
