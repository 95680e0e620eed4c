# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: basis evaluation and weighted Gram accumulation.

Same contracts as numpy_backend; single fixed-order loops, so results are
bit-reproducible run to run.
"""

import numpy as np

from libc.math cimport log

name = "cython"


def poly_values(points, double cx, double cy, double scale, int degree):
    pts_arr = np.ascontiguousarray(points, dtype=np.float64)
    cdef const double[:, ::1] pts = pts_arr
    cdef Py_ssize_t n = pts.shape[0]
    out_arr = np.empty((n, 2 * degree + 1), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i
    cdef int d
    cdef double zx, zy, re, im, tmp
    for i in range(n):
        out[i, 0] = 1.0
        if degree > 0:
            zx = (pts[i, 0] - cx) / scale
            zy = (pts[i, 1] - cy) / scale
            re = zx
            im = zy
            for d in range(1, degree + 1):
                out[i, 2 * d - 1] = re
                out[i, 2 * d] = im
                if d < degree:
                    tmp = re * zx - im * zy
                    im = re * zy + im * zx
                    re = tmp
    return out_arr


def mfs_values(points, sources):
    pts_arr = np.ascontiguousarray(points, dtype=np.float64)
    src_arr = np.ascontiguousarray(sources, dtype=np.float64)
    cdef const double[:, ::1] pts = pts_arr
    cdef const double[:, ::1] src = src_arr
    cdef Py_ssize_t n = pts.shape[0]
    cdef Py_ssize_t m = src.shape[0]
    out_arr = np.empty((n, m + 1), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double dx, dy
    for i in range(n):
        out[i, 0] = 1.0
        for j in range(m):
            dx = pts[i, 0] - src[j, 0]
            dy = pts[i, 1] - src[j, 1]
            out[i, j + 1] = 0.5 * log(dx * dx + dy * dy)
    return out_arr


def weighted_gram(values, weights):
    v_arr = np.ascontiguousarray(values, dtype=np.float64)
    w_arr = np.ascontiguousarray(weights, dtype=np.float64)
    cdef const double[:, ::1] v = v_arr
    cdef const double[::1] w = w_arr
    cdef Py_ssize_t n = v.shape[0]
    cdef Py_ssize_t d = v.shape[1]
    out_arr = np.zeros((d, d), dtype=np.float64)
    cdef double[:, ::1] g = out_arr
    cdef Py_ssize_t k, i, j
    cdef double wk, vi
    for k in range(n):
        wk = w[k]
        for i in range(d):
            vi = wk * v[k, i]
            for j in range(i, d):
                g[i, j] += vi * v[k, j]
    for i in range(d):
        for j in range(i + 1, d):
            g[j, i] = g[i, j]
    return out_arr
