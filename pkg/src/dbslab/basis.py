"""Finite-dimensional harmonic trial spaces.

Two families: scaled harmonic polynomials (the workhorse) and a basis of
logarithmic point-source potentials with singularities outside the domain
(the cross-check). Both put the constant function first, which makes the
one-dimensional trial space realize the perimeter/area bound exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EvaluationDomainError
from .geometry import Point2
from .kernels import get_backend

__all__ = [
    "HarmonicPolyBasis",
    "MfsBasis",
    "BasisEvaluation",
    "make_poly_basis",
    "make_mfs_basis",
    "laplacian_residual",
]

MFS_RADIUS_FACTOR = 1.5  # source circle radius over domain circumradius


@dataclass(frozen=True)
class BasisEvaluation:
    """Values of every basis element (columns) at every point (rows)."""

    values: np.ndarray

    def __post_init__(self):
        if not np.all(np.isfinite(self.values)):
            raise EvaluationDomainError("basis evaluation produced non-finite values")
        self.values.setflags(write=False)


@dataclass(frozen=True)
class HarmonicPolyBasis:
    """Harmonic polynomials 1, Re z^d, Im z^d (d <= degree) in the
    centered, scaled variable z = ((x, y) - center) / scale.

    Dimension is 2*degree + 1. Centering at the centroid and scaling by
    the circumradius keeps the interior Gram conditioning mild as the
    degree grows.
    """

    center: Point2
    scale: float
    degree: int

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("basis scale must be positive")
        if self.degree < 0:
            raise ValueError("basis degree must be nonnegative")

    @property
    def kind(self) -> str:
        return "poly"

    @property
    def dimension(self) -> int:
        return 2 * self.degree + 1

    def values(self, points, backend=None) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        return get_backend(backend).poly_values(
            pts, self.center.x, self.center.y, self.scale, self.degree
        )

    def eval(self, points, backend=None) -> BasisEvaluation:
        return BasisEvaluation(self.values(points, backend=backend))


@dataclass(frozen=True)
class MfsBasis:
    """Constant plus ln|x - y_j| for sources y_j strictly outside the
    domain; every element is harmonic inside."""

    sources: np.ndarray

    def __post_init__(self):
        src = np.asarray(self.sources, dtype=float)
        if src.ndim != 2 or src.shape[1] != 2:
            raise ValueError("sources must be an (m, 2) array")
        src = src.copy()
        src.setflags(write=False)
        object.__setattr__(self, "sources", src)

    @property
    def kind(self) -> str:
        return "mfs"

    @property
    def dimension(self) -> int:
        return len(self.sources) + 1

    def values(self, points, backend=None) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        out = get_backend(backend).mfs_values(pts, self.sources)
        if not np.all(np.isfinite(out)):
            raise EvaluationDomainError("evaluation point coincides with an MFS source")
        return out

    def eval(self, points, backend=None) -> BasisEvaluation:
        return BasisEvaluation(self.values(points, backend=backend))


def make_poly_basis(domain, degree: int) -> HarmonicPolyBasis:
    """Polynomial basis adapted to a domain: centered at its centroid,
    scaled by its circumradius."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    return HarmonicPolyBasis(domain.centroid, domain.circumradius, degree)


def make_mfs_basis(domain, size: int, radius_factor: float = MFS_RADIUS_FACTOR) -> MfsBasis:
    """MFS basis with ``size`` sources equally spaced on a circle of radius
    ``radius_factor * circumradius`` about the centroid.

    The factor must leave each source at least 0.1 circumradius away from
    the closed domain; 1.5 leaves 0.5.
    """
    if size < 0:
        raise ValueError("the MFS source count must be nonnegative")
    c = domain.centroid
    rc = domain.circumradius
    if radius_factor * rc < rc + 0.1 * rc:
        raise ValueError("MFS sources would be closer than 0.1 circumradius to the domain")
    angles = 2.0 * np.pi * np.arange(size) / size
    src = np.column_stack(
        [c.x + radius_factor * rc * np.cos(angles), c.y + radius_factor * rc * np.sin(angles)]
    )
    return MfsBasis(src)


def laplacian_residual(basis_or_fn, points, step: float = 1e-4) -> float:
    """Max magnitude of the five-point finite-difference Laplacian over all
    elements and points. Harmonic elements should leave only O(step^2)
    discretization plus rounding; a quadratic control comes out near 2.
    """
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    fn = basis_or_fn.values if hasattr(basis_or_fn, "values") else basis_or_fn
    ex = np.array([step, 0.0])
    ey = np.array([0.0, step])
    lap = (
        np.asarray(fn(pts + ex), dtype=float)
        + np.asarray(fn(pts - ex), dtype=float)
        + np.asarray(fn(pts + ey), dtype=float)
        + np.asarray(fn(pts - ey), dtype=float)
        - 4.0 * np.asarray(fn(pts), dtype=float)
    ) / step**2
    return float(np.max(np.abs(lap)))
