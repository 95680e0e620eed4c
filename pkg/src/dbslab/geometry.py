"""Convex polygons, disks, and the regular polygon families.

All shapes are immutable. Polygons are stored counterclockwise; clockwise
input is reversed on construction rather than rejected, so downstream
boundary integrals never pick up a sign error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Point2",
    "Triangle",
    "ConvexPolygon",
    "Disk",
    "regular_polygon",
    "hausdorff_to_disk",
]

# Strict-convexity floor: consecutive-edge cross products must exceed
# this times (max vertex norm)^2.
CONVEXITY_RTOL = 1e-12


@dataclass(frozen=True)
class Point2:
    """Point in the plane."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y])


@dataclass(frozen=True)
class Triangle:
    """Triangle with positive (counterclockwise) signed area."""

    a: Point2
    b: Point2
    c: Point2

    def __post_init__(self):
        if self.signed_area() <= 0.0:
            raise ValueError("triangle must have positive signed area")

    def signed_area(self) -> float:
        ax, ay = self.a.x, self.a.y
        return 0.5 * (
            (self.b.x - ax) * (self.c.y - ay) - (self.c.x - ax) * (self.b.y - ay)
        )

    @property
    def area(self) -> float:
        return self.signed_area()

    def corners(self) -> np.ndarray:
        """3x2 array of vertex coordinates."""
        return np.array([[p.x, p.y] for p in (self.a, self.b, self.c)])


def _as_coords(vertices) -> np.ndarray:
    if isinstance(vertices, np.ndarray):
        coords = np.asarray(vertices, dtype=float)
    else:
        rows = []
        for v in vertices:
            if isinstance(v, Point2):
                rows.append((v.x, v.y))
            else:
                x, y = v
                rows.append((float(x), float(y)))
        coords = np.array(rows, dtype=float)
    if coords.ndim != 2 or coords.shape[1] != 2:
        raise ValueError("vertices must be a sequence of planar points")
    return coords


class ConvexPolygon:
    """Strictly convex polygon with counterclockwise vertex order.

    Parameters
    ----------
    vertices :
        Sequence of ``Point2``, coordinate pairs, or an ``(k, 2)`` array.
        Either orientation is accepted; the stored order is always
        counterclockwise.

    Raises
    ------
    ValueError
        Fewer than 3 vertices, repeated vertices, non-finite input, or a
        consecutive-edge cross product at or below the strict-convexity
        floor.
    """

    __slots__ = ("_coords",)

    def __init__(self, vertices):
        coords = _as_coords(vertices)
        if len(coords) < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        if not np.all(np.isfinite(coords)):
            raise ValueError("polygon vertices must be finite")
        if _signed_area(coords) < 0.0:
            coords = coords[::-1]
        scale = float(np.max(np.hypot(coords[:, 0], coords[:, 1])))
        edges = np.roll(coords, -1, axis=0) - coords
        lengths = np.hypot(edges[:, 0], edges[:, 1])
        if np.any(lengths <= CONVEXITY_RTOL * max(scale, 1e-300)):
            raise ValueError("polygon has repeated vertices")
        cross = edges[:, 0] * np.roll(edges[:, 1], -1) - edges[:, 1] * np.roll(edges[:, 0], -1)
        if np.any(cross <= CONVEXITY_RTOL * scale * scale):
            raise ValueError("polygon is not strictly convex")
        coords = coords.copy()
        coords.setflags(write=False)
        object.__setattr__(self, "_coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("ConvexPolygon is immutable")

    def __repr__(self):
        return f"ConvexPolygon({self._coords.tolist()!r})"

    def __eq__(self, other):
        return isinstance(other, ConvexPolygon) and np.array_equal(self._coords, other._coords)

    def __hash__(self):
        return hash(self._coords.tobytes())

    @property
    def coords(self) -> np.ndarray:
        """Read-only ``(k, 2)`` vertex array, counterclockwise."""
        return self._coords

    @property
    def vertices(self) -> tuple[Point2, ...]:
        return tuple(Point2(float(x), float(y)) for x, y in self._coords)

    @property
    def num_vertices(self) -> int:
        return len(self._coords)

    @property
    def area(self) -> float:
        """Enclosed area by the shoelace formula."""
        return _signed_area(self._coords)

    @property
    def perimeter(self) -> float:
        edges = np.roll(self._coords, -1, axis=0) - self._coords
        return float(np.sum(np.hypot(edges[:, 0], edges[:, 1])))

    @property
    def centroid(self) -> Point2:
        """Area centroid; lies strictly inside by convexity."""
        x, y = self._coords[:, 0], self._coords[:, 1]
        xn, yn = np.roll(x, -1), np.roll(y, -1)
        cross = x * yn - xn * y
        a = 0.5 * np.sum(cross)
        cx = float(np.sum((x + xn) * cross) / (6.0 * a))
        cy = float(np.sum((y + yn) * cross) / (6.0 * a))
        return Point2(cx, cy)

    @property
    def circumradius(self) -> float:
        """Largest vertex distance from the centroid."""
        c = self.centroid
        return float(np.max(np.hypot(self._coords[:, 0] - c.x, self._coords[:, 1] - c.y)))

    def edges(self) -> Iterable[tuple[np.ndarray, np.ndarray]]:
        """Yield (start, end) coordinate pairs, counterclockwise."""
        rolled = np.roll(self._coords, -1, axis=0)
        for a, b in zip(self._coords, rolled):
            yield a, b

    def triangulate_fan(self) -> list[Triangle]:
        """Partition into one triangle per edge with apex at the centroid."""
        apex = self.centroid
        out = []
        for a, b in self.edges():
            out.append(Triangle(apex, Point2(*a), Point2(*b)))
        return out

    def boundary_distance(self, point) -> float:
        """Distance from an arbitrary point to the polygon boundary."""
        p = np.asarray(point, dtype=float)
        best = math.inf
        for a, b in self.edges():
            ab = b - a
            t = np.clip(np.dot(p - a, ab) / np.dot(ab, ab), 0.0, 1.0)
            best = min(best, float(np.hypot(*(p - (a + t * ab)))))
        return best

    def contains(self, point, tol: float = 0.0) -> bool:
        p = np.asarray(point, dtype=float)
        for a, b in self.edges():
            if (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) < -tol:
                return False
        return True

    def translated(self, dx: float, dy: float) -> "ConvexPolygon":
        return ConvexPolygon(self._coords + np.array([dx, dy]))

    def rotated(self, angle: float) -> "ConvexPolygon":
        """Rotate about the origin by ``angle`` radians."""
        c, s = math.cos(angle), math.sin(angle)
        rot = np.array([[c, -s], [s, c]])
        return ConvexPolygon(self._coords @ rot.T)

    def scaled(self, factor: float) -> "ConvexPolygon":
        """Dilate about the origin."""
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return ConvexPolygon(self._coords * factor)


def _signed_area(coords: np.ndarray) -> float:
    x, y = coords[:, 0], coords[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


@dataclass(frozen=True)
class Disk:
    """Disk of positive radius. Kept distinct from polygons: its spectrum
    comes from closed forms and a dedicated tensor quadrature."""

    center: Point2
    radius: float

    def __post_init__(self):
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise ValueError(f"disk radius must be positive, got {self.radius}")

    @property
    def area(self) -> float:
        return math.pi * self.radius**2

    @property
    def perimeter(self) -> float:
        return 2.0 * math.pi * self.radius

    @property
    def centroid(self) -> Point2:
        return self.center

    @property
    def circumradius(self) -> float:
        return self.radius

    def translated(self, dx: float, dy: float) -> "Disk":
        return Disk(Point2(self.center.x + dx, self.center.y + dy), self.radius)

    def scaled(self, factor: float) -> "Disk":
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return Disk(Point2(self.center.x * factor, self.center.y * factor), self.radius * factor)


def unit_disk() -> Disk:
    return Disk(Point2(0.0, 0.0), 1.0)


def _check_regular_args(k: int, radius: float, mode: str) -> None:
    if k < 3:
        raise ValueError(f"a regular polygon needs k >= 3 sides, got {k}")
    if not radius > 0:
        raise ValueError(f"radius must be positive, got {radius}")
    if mode not in ("inscribed", "circumscribed"):
        raise ValueError(f"mode must be 'inscribed' or 'circumscribed', got {mode!r}")


def regular_polygon(k: int, radius: float, mode: str = "inscribed") -> ConvexPolygon:
    """Regular k-gon inscribed in or circumscribed about a centered circle.

    Inscribed: vertices on the circle of the given radius, at angles
    ``2*pi*j/k``. Circumscribed: edges tangent to that circle at the same
    angles, vertices at distance ``radius / cos(pi/k)``.
    """
    _check_regular_args(k, radius, mode)
    angles = 2.0 * np.pi * np.arange(k) / k
    if mode == "circumscribed":
        r = radius / math.cos(math.pi / k)
        angles = angles + math.pi / k
    else:
        r = radius
    return ConvexPolygon(np.column_stack([r * np.cos(angles), r * np.sin(angles)]))


def hausdorff_to_disk(k: int, radius: float, mode: str = "inscribed") -> float:
    """Hausdorff distance between ``regular_polygon(k, radius, mode)`` and
    the disk of the given radius."""
    _check_regular_args(k, radius, mode)
    if mode == "inscribed":
        return radius * (1.0 - math.cos(math.pi / k))
    return radius * (1.0 / math.cos(math.pi / k) - 1.0)
