"""Vectorized numpy implementation of the hot kernels.

This is the fallback used when the compiled extension is unavailable and
the reference the extension is tested against.
"""

from __future__ import annotations

import numpy as np

name = "numpy"


def poly_values(points: np.ndarray, cx: float, cy: float, scale: float, degree: int) -> np.ndarray:
    """Evaluate the scaled harmonic polynomial basis at the given points.

    Columns are 1, Re z, Im z, ..., Re z^p, Im z^p for
    z = ((x, y) - center) / scale, built with the real multiplication
    recurrence rather than complex powers.
    """
    pts = np.ascontiguousarray(points, dtype=float)
    n = len(pts)
    out = np.empty((n, 2 * degree + 1))
    out[:, 0] = 1.0
    if degree == 0:
        return out
    zx = (pts[:, 0] - cx) / scale
    zy = (pts[:, 1] - cy) / scale
    re, im = zx.copy(), zy.copy()
    for d in range(1, degree + 1):
        out[:, 2 * d - 1] = re
        out[:, 2 * d] = im
        if d < degree:
            re, im = re * zx - im * zy, re * zy + im * zx
    return out


def mfs_values(points: np.ndarray, sources: np.ndarray) -> np.ndarray:
    """Evaluate the fundamental-solution basis: a constant column followed
    by ln|x - y_j| for each source y_j."""
    pts = np.ascontiguousarray(points, dtype=float)
    src = np.ascontiguousarray(sources, dtype=float)
    dx = pts[:, 0, None] - src[None, :, 0]
    dy = pts[:, 1, None] - src[None, :, 1]
    out = np.empty((len(pts), len(src) + 1))
    out[:, 0] = 1.0
    with np.errstate(divide="ignore"):
        out[:, 1:] = 0.5 * np.log(dx * dx + dy * dy)
    return out


def weighted_gram(values: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """Gram matrix sum_k w_k v(x_k) v(x_k)^T for the rows of ``values``."""
    v = np.asarray(values, dtype=float)
    w = np.asarray(weights, dtype=float)
    return (v * w[:, None]).T @ v
