"""Bilinear algebra over ambient 3-space.

The kernel uses exactly two diagonal forms: the Euclidean form
``x*x' + y*y' + z*z'`` and the Lorentzian form ``x*x' + y*y' - z*z'``.
This module evaluates them, validates form-preserving 3x3 maps, and builds
orthonormal frames completing a given vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import DegenerateVector, NotAnIsometry, WrongSheet
from .tolerances import LINEAR_TOL

_G_EUCLIDEAN = np.diag([1.0, 1.0, 1.0])
_G_LORENTZIAN = np.diag([1.0, 1.0, -1.0])
_G_EUCLIDEAN.setflags(write=False)
_G_LORENTZIAN.setflags(write=False)

_ZERO = np.zeros(3)
_ZERO.setflags(write=False)


class BilinearForm(Enum):
    """Signature tag selecting one of the two ambient forms."""

    EUCLIDEAN = "euclidean"
    LORENTZIAN = "lorentzian"

    @property
    def matrix(self) -> np.ndarray:
        """Diagonal matrix G of the form (read-only)."""
        return _G_EUCLIDEAN if self is BilinearForm.EUCLIDEAN else _G_LORENTZIAN


def as_vector(v) -> np.ndarray:
    """Coerce to a finite float 3-vector."""
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {arr.shape}")
    if not (
        math.isfinite(arr[0]) and math.isfinite(arr[1]) and math.isfinite(arr[2])
    ):
        raise ValueError("vector components must be finite")
    return arr


def form_dot(u, v, form: BilinearForm) -> float:
    """Evaluate the bilinear form on two ambient vectors."""
    s = u[0] * v[0] + u[1] * v[1]
    if form is BilinearForm.EUCLIDEAN:
        return float(s + u[2] * v[2])
    return float(s - u[2] * v[2])


@dataclass(frozen=True, eq=False)
class Isometry:
    """A 3x3 ambient map preserving a bilinear form.

    ``translation`` is nonzero only for the flat plane embedded as z = 0,
    whose isometries include translations; curved-model isometries are
    purely linear. ``preserves_upper_sheet`` is meaningful only for the
    Lorentzian form.
    """

    m: np.ndarray
    form: BilinearForm
    preserves_upper_sheet: bool = True
    translation: np.ndarray = field(default_factory=lambda: _ZERO)

    def __post_init__(self):
        m = np.asarray(self.m, dtype=float).copy()
        m.setflags(write=False)
        t = np.asarray(self.translation, dtype=float).copy()
        t.setflags(write=False)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "translation", t)

    def transform(self, v: np.ndarray) -> np.ndarray:
        """Apply to an ambient position vector."""
        return self.m @ v + self.translation

    def transform_linear(self, v: np.ndarray) -> np.ndarray:
        """Apply the linear part only (the action on displacement vectors)."""
        return self.m @ v

    def compose(self, other: "Isometry") -> "Isometry":
        """Map applying ``other`` first, then ``self``. Revalidates."""
        if self.form is not other.form:
            raise NotAnIsometry("cannot compose isometries of different forms")
        t = self.m @ other.translation + self.translation
        return validate_isometry(self.m @ other.m, self.form, translation=t)


def validate_isometry(m, form: BilinearForm, translation=None) -> Isometry:
    """Check m^T G m = G within LINEAR_TOL and wrap the matrix.

    Lorentzian matrices must additionally have m[2,2] > 0 so the upper
    hyperboloid sheet maps to itself. Raises NotAnIsometry or WrongSheet.
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (3, 3) or not np.all(np.isfinite(m)):
        raise NotAnIsometry(f"expected a finite 3x3 matrix, got shape {m.shape}")
    g = form.matrix
    residual = float(np.max(np.abs(m.T @ g @ m - g)))
    if residual > LINEAR_TOL:
        raise NotAnIsometry(
            f"form-preservation residual {residual:.3e} exceeds {LINEAR_TOL:.0e}"
        )
    if form is BilinearForm.LORENTZIAN and m[2, 2] <= 0.0:
        raise WrongSheet("matrix maps the upper sheet to the lower sheet (m33 <= 0)")
    if translation is None:
        translation = _ZERO
    else:
        translation = as_vector(translation)
        if translation[2] != 0.0:
            raise NotAnIsometry("translations are only defined within the z = 0 plane")
    return Isometry(
        m=m,
        form=form,
        preserves_upper_sheet=bool(m[2, 2] > 0.0),
        translation=translation,
    )


def orthonormal_frame_at(p, form: BilinearForm) -> tuple[np.ndarray, np.ndarray]:
    """Two vectors e1, e2 with form(ei, ej) = delta_ij and form(ei, p) = 0.

    Deterministic: candidate axes are taken in order of increasing |p_i|
    (ties by index), projected against p and the partial frame, and
    normalized. Raises DegenerateVector when p is zero or null under the
    form, or when the orthogonal complement admits no unit-norm pair.
    """
    p = as_vector(p)
    euclid_sq = float(p @ p)
    if euclid_sq == 0.0:
        raise DegenerateVector("cannot build a frame at the zero vector")
    pp = form_dot(p, p, form)
    if abs(pp) <= 1e-14 * euclid_sq:
        raise DegenerateVector("vector is null under the form")

    frame: list[np.ndarray] = []
    order = np.argsort(np.abs(p), kind="stable")
    for idx in order:
        w = np.zeros(3)
        w[idx] = 1.0
        # Two projection passes: one-pass Gram-Schmidt loses orthogonality
        # when |p| is large relative to sqrt(|form(p,p)|).
        for _ in range(2):
            w -= (form_dot(w, p, form) / pp) * p
            for e in frame:
                w -= form_dot(w, e, form) * e
        ww = form_dot(w, w, form)
        if ww <= 1e-12 * float(w @ w):
            continue
        frame.append(w / np.sqrt(ww))
        if len(frame) == 2:
            return frame[0], frame[1]
    raise DegenerateVector("no orthonormal pair completes this vector to a frame")
