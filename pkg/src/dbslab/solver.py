"""Assembly and solution of the dual eigenproblem.

The eigenvalues are min-max optima of the quotient

    R(v) = (boundary L2 mass of v) / (interior L2 mass of v)

over the harmonic trial space, computed as a symmetric generalized
eigenproblem: whiten by the interior Gram (with null-space filtering),
project the boundary Gram, and diagonalize. With exact integration the
values are Rayleigh-Ritz upper bounds for the true eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .basis import HarmonicPolyBasis, make_mfs_basis, make_poly_basis
from .errors import DegenerateBasisError, QuadratureConfigError
from .geometry import ConvexPolygon, Disk
from .kernels import get_backend
from .quadrature import (
    circle_boundary_quadrature,
    disk_interior_quadrature,
    disk_rule,
    gauss_legendre,
    polygon_boundary_quadrature,
    polygon_interior_quadrature,
    triangle_rule,
)

__all__ = [
    "QuadratureConfig",
    "GramPair",
    "Spectrum",
    "MultiplicityClusters",
    "default_quadrature",
    "assemble",
    "solve_generalized",
    "compute_spectrum",
    "cluster_multiplicities",
]

DEFAULT_NULL_THRESHOLD = 1e-12
DEFAULT_CLUSTER_TOL = 1e-6

# Exactness floor for the smooth (non-polynomial) MFS integrands; their
# edge restrictions are analytic with singularities >= 0.5 circumradius
# away, so Gauss error is geometric and this is plenty for 1e-10 Grams.
DEFAULT_MFS_ORDER = 30
MFS_BOUNDARY_DEGREE = 48
MFS_INTERIOR_DEGREE = 40
MFS_DISK_ANGULAR = 192

SYMMETRY_RTOL = 1e-13


@dataclass(frozen=True)
class QuadratureConfig:
    """Polynomial exactness degrees used when assembling Gram matrices.

    ``boundary_degree`` applies to edge Gauss rules (and fixes the
    trapezoid count on a circle); ``interior_degree`` to the fan-triangle
    rule (and the radial Gauss order on a disk). ``mfs_order`` is the
    exactness floor demanded of both when the basis is MFS.
    """

    boundary_degree: int
    interior_degree: int
    mfs_order: int = DEFAULT_MFS_ORDER
    disk_angular: Optional[int] = None


def default_quadrature(basis, margin: int = 2) -> QuadratureConfig:
    """Degrees for exact Gram assembly: products of two degree-p elements
    have degree 2p, plus a small margin on edges."""
    if isinstance(basis, HarmonicPolyBasis):
        p = basis.degree
        return QuadratureConfig(boundary_degree=2 * p + margin, interior_degree=2 * p)
    return QuadratureConfig(
        boundary_degree=MFS_BOUNDARY_DEGREE,
        interior_degree=MFS_INTERIOR_DEGREE,
        disk_angular=MFS_DISK_ANGULAR,
    )


@dataclass(frozen=True)
class GramPair:
    """Interior Gram A (Bergman mass) and boundary Gram B (trace mass) of
    one basis on one domain, symmetrized."""

    interior: np.ndarray
    boundary: np.ndarray
    basis: object
    domain: object
    quadrature: QuadratureConfig

    def __post_init__(self):
        self.interior.setflags(write=False)
        self.boundary.setflags(write=False)


@dataclass(frozen=True)
class Spectrum:
    """Ascending dual eigenvalues with conditioning diagnostics."""

    values: np.ndarray
    retained_dim: int
    cond_interior: float
    basis_kind: str
    basis_dimension: int
    basis_degree: Optional[int]
    domain_label: str
    boundary_over_area: float
    requested: Optional[int] = None
    truncated: bool = False

    def __post_init__(self):
        self.values.setflags(write=False)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class MultiplicityClusters:
    """Distinct eigenvalues with multiplicities, strictly increasing."""

    clusters: tuple[tuple[float, int], ...]

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(v for v, _ in self.clusters)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.clusters)


def _validate_exactness(basis, quad: QuadratureConfig) -> None:
    if isinstance(basis, HarmonicPolyBasis):
        need = 2 * basis.degree
        if quad.boundary_degree < need or quad.interior_degree < need:
            raise QuadratureConfigError(
                f"quadrature degrees ({quad.boundary_degree}, {quad.interior_degree}) "
                f"are below the exactness 2*p = {need} required by a degree-{basis.degree} basis"
            )
    else:
        if quad.boundary_degree < quad.mfs_order or quad.interior_degree < quad.mfs_order:
            raise QuadratureConfigError(
                f"quadrature degrees ({quad.boundary_degree}, {quad.interior_degree}) "
                f"are below the configured MFS order {quad.mfs_order}"
            )


def _quadrature_nodes(domain, quad: QuadratureConfig):
    if isinstance(domain, ConvexPolygon):
        seg = gauss_legendre((quad.boundary_degree + 2) // 2)
        tri = triangle_rule(quad.interior_degree)
        return (
            polygon_boundary_quadrature(domain, seg),
            polygon_interior_quadrature(domain, tri),
        )
    if isinstance(domain, Disk):
        angular = quad.disk_angular or max(quad.boundary_degree + 1, quad.interior_degree + 1, 16)
        rule = disk_rule(quad.interior_degree // 2 + 1, angular)
        return (
            circle_boundary_quadrature(domain, angular),
            disk_interior_quadrature(domain, rule),
        )
    raise TypeError(f"unsupported domain type {type(domain).__name__}")


def assemble(domain, basis, quad: Optional[QuadratureConfig] = None, backend=None) -> GramPair:
    """Assemble the boundary and interior Gram matrices of a basis.

    Refuses to run if the quadrature exactness is below what the basis
    needs. For a polygon with the polynomial basis both matrices are exact
    up to rounding; symmetry is enforced by averaging with the transpose.
    """
    if quad is None:
        quad = default_quadrature(basis)
    _validate_exactness(basis, quad)
    kern = get_backend(backend)
    (bpts, bw), (ipts, iw) = _quadrature_nodes(domain, quad)
    vb = basis.values(bpts, backend=kern)
    vi = basis.values(ipts, backend=kern)
    b = kern.weighted_gram(vb, bw)
    a = kern.weighted_gram(vi, iw)
    return GramPair(
        interior=0.5 * (a + a.T),
        boundary=0.5 * (b + b.T),
        basis=basis,
        domain=domain,
        quadrature=quad,
    )


def _domain_label(domain) -> str:
    if isinstance(domain, Disk):
        return f"disk(radius={domain.radius:g})"
    return f"polygon(k={domain.num_vertices})"


def solve_generalized(gram: GramPair, rel_threshold: float = DEFAULT_NULL_THRESHOLD) -> Spectrum:
    """Solve the pencil (boundary, interior) by whitening.

    The interior Gram is eigendecomposed; directions whose eigenvalue is
    at most ``rel_threshold`` times the largest are dropped (they carry no
    interior mass and would turn into spurious huge pencil eigenvalues).
    The retained directions are scaled to unit interior norm and the
    projected boundary form is diagonalized.
    """
    if not 0.0 < rel_threshold < 1.0:
        raise ValueError("rel_threshold must lie strictly between 0 and 1")
    a, b = gram.interior, gram.boundary
    for m, tag in ((a, "interior"), (b, "boundary")):
        scale = np.max(np.abs(m)) or 1.0
        if np.max(np.abs(m - m.T)) > SYMMETRY_RTOL * scale:
            raise ValueError(f"{tag} Gram matrix is asymmetric beyond tolerance")
    eigval, eigvec = np.linalg.eigh(a)
    if eigval[-1] <= 0.0:
        raise DegenerateBasisError("interior Gram has no positive eigenvalues")
    keep = eigval > rel_threshold * eigval[-1]
    retained = int(np.count_nonzero(keep))
    if retained == 0:
        raise DegenerateBasisError("null-space filtering removed every direction")
    white = eigvec[:, keep] / np.sqrt(eigval[keep])
    projected = white.T @ b @ white
    projected = 0.5 * (projected + projected.T)
    values = np.maximum(np.linalg.eigvalsh(projected), 0.0)
    domain = gram.domain
    basis = gram.basis
    return Spectrum(
        values=values,
        retained_dim=retained,
        cond_interior=float(eigval[-1] / np.min(eigval[keep])),
        basis_kind=basis.kind,
        basis_dimension=basis.dimension,
        basis_degree=getattr(basis, "degree", None),
        domain_label=_domain_label(domain),
        boundary_over_area=domain.perimeter / domain.area,
    )


def compute_spectrum(
    domain,
    method: str = "poly",
    degree_or_size: int = 12,
    n_max: int = 10,
    rel_threshold: float = DEFAULT_NULL_THRESHOLD,
    quad: Optional[QuadratureConfig] = None,
    backend=None,
    radius_factor: float = 1.5,
) -> Spectrum:
    """Assemble and solve in one step, truncating to the first ``n_max``
    eigenvalues. If fewer survive filtering, the returned spectrum carries
    ``truncated=True`` instead of failing."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if method == "poly":
        basis = make_poly_basis(domain, degree_or_size)
    elif method == "mfs":
        basis = make_mfs_basis(domain, degree_or_size, radius_factor=radius_factor)
    else:
        raise ValueError(f"method must be 'poly' or 'mfs', got {method!r}")
    gram = assemble(domain, basis, quad=quad, backend=backend)
    spectrum = solve_generalized(gram, rel_threshold)
    available = len(spectrum.values)
    n = min(n_max, available)
    return replace(
        spectrum,
        values=spectrum.values[:n].copy(),
        requested=n_max,
        truncated=available < n_max,
    )


def cluster_multiplicities(spectrum_or_values, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> MultiplicityClusters:
    """Greedy multiplicity clustering of an ascending spectrum: consecutive
    values within ``cluster_tol * max(1, value)`` merge; each cluster
    reports its mean."""
    values = getattr(spectrum_or_values, "values", spectrum_or_values)
    values = np.asarray(values, dtype=float)
    if len(values) == 0:
        return MultiplicityClusters(())
    clusters = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] - values[i - 1] > cluster_tol * max(1.0, values[i]):
            block = values[start:i]
            clusters.append((float(np.mean(block)), len(block)))
            start = i
    return MultiplicityClusters(tuple(clusters))
