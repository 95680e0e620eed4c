"""Segment, triangle, and disk quadrature with declared polynomial exactness.

For the harmonic polynomial basis every Gram integral is a polynomial, so
the rules below make the assembled matrices exact up to rounding. The MFS
basis is smooth on the closed domain (sources sit strictly outside) and
the same rules converge geometrically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import ConvexPolygon, Disk

__all__ = [
    "SegmentRule",
    "TriangleRule",
    "DiskRule",
    "gauss_legendre",
    "triangle_rule",
    "disk_rule",
    "polygon_boundary_quadrature",
    "polygon_interior_quadrature",
    "disk_interior_quadrature",
    "circle_boundary_quadrature",
    "integrate_boundary",
    "integrate_interior",
    "integrate_disk",
    "integrate_circle",
]


@dataclass(frozen=True)
class SegmentRule:
    """Gauss rule on [-1, 1], exact for polynomials up to ``exact_degree``."""

    nodes: np.ndarray
    weights: np.ndarray
    exact_degree: int

    def __post_init__(self):
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)


@dataclass(frozen=True)
class TriangleRule:
    """Rule on the reference triangle (0,0)-(1,0)-(0,1), stored in
    barycentric coordinates with weights summing to the reference area 1/2."""

    barycentric: np.ndarray
    weights: np.ndarray
    exact_degree: int

    def __post_init__(self):
        self.barycentric.setflags(write=False)
        self.weights.setflags(write=False)


@dataclass(frozen=True)
class DiskRule:
    """Tensor rule for the unit disk: Gauss in radius (area Jacobian r
    absorbed into the weights) times the equally spaced trapezoid rule in
    angle, which is exact for trigonometric polynomials of degree
    ``angular_count - 1``."""

    radial_nodes: np.ndarray
    radial_weights: np.ndarray
    angular_count: int

    def __post_init__(self):
        self.radial_nodes.setflags(write=False)
        self.radial_weights.setflags(write=False)

    @property
    def radial_exact_degree(self) -> int:
        # Gauss with n points integrates r^a * r dr exactly for a <= 2n - 2.
        return 2 * len(self.radial_nodes) - 2

    @property
    def trig_exact_degree(self) -> int:
        return self.angular_count - 1


def gauss_legendre(n: int) -> SegmentRule:
    """n-point Gauss-Legendre rule on [-1, 1], exact to degree 2n - 1.

    Nodes are found by Newton iteration on the Legendre recurrence to
    1e-15, then symmetrized about 0.
    """
    if n < 1:
        raise ValueError(f"a Gauss rule needs at least one node, got n={n}")
    k = np.arange(1, n + 1)
    x = np.cos(np.pi * (k - 0.25) / (n + 0.5))
    for _ in range(100):
        pn, dpn = _legendre_and_derivative(n, x)
        dx = pn / dpn
        x -= dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    pn, dpn = _legendre_and_derivative(n, x)
    w = 2.0 / ((1.0 - x * x) * dpn * dpn)
    order = np.argsort(x)
    x, w = x[order], w[order]
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    if n % 2 == 1:
        x[n // 2] = 0.0
    return SegmentRule(x, w, exact_degree=2 * n - 1)


def _legendre_and_derivative(n, x):
    p_prev = np.ones_like(x)
    p = x.copy()
    for d in range(2, n + 1):
        p_prev, p = p, ((2 * d - 1) * x * p - (d - 1) * p_prev) / d
    if n == 1:
        p, p_prev = x, np.ones_like(x)
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


def triangle_rule(degree: int) -> TriangleRule:
    """Rule exact for all monomials x^a y^b with a + b <= degree.

    Built by collapsing a tensor Gauss grid through the Duffy transform
    x = u, y = v (1 - u); the extra Jacobian power goes to the u rule.
    Node count is (degree/2 + O(1))^2, above optimal but exact.
    """
    if degree < 0:
        raise ValueError(f"degree must be nonnegative, got {degree}")
    nu = (degree + 3) // 2  # handles the (1 - u) Jacobian: 2*nu - 1 >= degree + 1
    nv = (degree + 2) // 2
    su = gauss_legendre(nu)
    sv = gauss_legendre(nv)
    u = 0.5 * (su.nodes + 1.0)
    wu = 0.5 * su.weights
    v = 0.5 * (sv.nodes + 1.0)
    wv = 0.5 * sv.weights
    uu, vv = np.meshgrid(u, v, indexing="ij")
    x = uu.ravel()
    y = (vv * (1.0 - uu)).ravel()
    w = (np.outer(wu, wv) * (1.0 - uu)).ravel()
    bary = np.column_stack([1.0 - x - y, x, y])
    return TriangleRule(bary, w, exact_degree=degree)


def disk_rule(radial_n: int, angular_m: int) -> DiskRule:
    """Tensor rule for the unit disk.

    Exact for integrands r^a * (trig polynomial of degree <= angular_m - 1)
    with a <= 2 radial_n - 2.
    """
    if radial_n < 1 or angular_m < 1:
        raise ValueError("disk rule needs radial_n >= 1 and angular_m >= 1")
    seg = gauss_legendre(radial_n)
    r = 0.5 * (seg.nodes + 1.0)
    w = 0.5 * seg.weights * r  # area Jacobian absorbed
    return DiskRule(r, w, angular_m)


def polygon_boundary_quadrature(polygon: ConvexPolygon, rule: SegmentRule):
    """All boundary nodes and weights for edge-wise Gauss integration.

    Returns
    -------
    points : (n, 2) array
    weights : (n,) array summing to the perimeter
    """
    pts = []
    wts = []
    for a, b in polygon.edges():
        mid = 0.5 * (a + b)
        half = 0.5 * (b - a)
        pts.append(mid[None, :] + rule.nodes[:, None] * half[None, :])
        wts.append(rule.weights * float(np.hypot(*half)))
    return np.vstack(pts), np.concatenate(wts)


def polygon_interior_quadrature(polygon: ConvexPolygon, rule: TriangleRule):
    """Interior nodes and weights over the centroid fan triangulation.

    Weights sum to the polygon area.
    """
    pts = []
    wts = []
    for tri in polygon.triangulate_fan():
        corners = tri.corners()
        pts.append(rule.barycentric @ corners)
        wts.append(rule.weights * (2.0 * tri.area))
    return np.vstack(pts), np.concatenate(wts)


def disk_interior_quadrature(disk: Disk, rule: DiskRule):
    """Tensor nodes and weights covering the disk; weights sum to its area."""
    m = rule.angular_count
    theta = 2.0 * np.pi * np.arange(m) / m
    r = rule.radial_nodes[:, None] * disk.radius
    x = disk.center.x + r * np.cos(theta)[None, :]
    y = disk.center.y + r * np.sin(theta)[None, :]
    w = np.broadcast_to(
        rule.radial_weights[:, None] * (2.0 * np.pi / m) * disk.radius**2, x.shape
    )
    return np.column_stack([x.ravel(), y.ravel()]), w.ravel().copy()


def circle_boundary_quadrature(disk: Disk, m: int):
    """m-point trapezoid rule on the boundary circle, exact for
    trigonometric polynomials of degree m - 1."""
    if m < 1:
        raise ValueError("the trapezoid rule needs at least one node")
    theta = 2.0 * np.pi * np.arange(m) / m
    pts = np.column_stack(
        [disk.center.x + disk.radius * np.cos(theta), disk.center.y + disk.radius * np.sin(theta)]
    )
    w = np.full(m, 2.0 * np.pi * disk.radius / m)
    return pts, w


def integrate_boundary(polygon: ConvexPolygon, f, rule: SegmentRule) -> float:
    """Integrate ``f(x, y)`` over the polygon boundary; exact when f
    restricted to each edge is a polynomial within the rule's degree."""
    pts, w = polygon_boundary_quadrature(polygon, rule)
    return float(w @ np.asarray(f(pts[:, 0], pts[:, 1]), dtype=float))


def integrate_interior(polygon: ConvexPolygon, f, rule: TriangleRule) -> float:
    """Integrate ``f(x, y)`` over the polygon interior via the centroid fan."""
    pts, w = polygon_interior_quadrature(polygon, rule)
    return float(w @ np.asarray(f(pts[:, 0], pts[:, 1]), dtype=float))


def integrate_disk(disk: Disk, f, rule: DiskRule) -> float:
    pts, w = disk_interior_quadrature(disk, rule)
    return float(w @ np.asarray(f(pts[:, 0], pts[:, 1]), dtype=float))


def integrate_circle(disk: Disk, f, m: int) -> float:
    pts, w = circle_boundary_quadrature(disk, m)
    return float(w @ np.asarray(f(pts[:, 0], pts[:, 1]), dtype=float))
