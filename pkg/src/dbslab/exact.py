"""Closed-form DBS and MDBS spectra of the N-dimensional unit ball.

Indexed by the degree d of the homogeneous harmonic polynomial generating
the eigenfunctions, so the multiplicity bookkeeping stays explicit; the
enumeration helpers restore the usual with-multiplicity ordering. On the
unit ball the two spectra differ by the constant mean curvature N - 1 of
the unit sphere, which is the shift the polygon-approximation experiment
exposes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "BallSpectrumEntry",
    "ball_dbs",
    "ball_mdbs",
    "harmonic_multiplicity",
    "ball_spectrum_entries",
    "enumerate_ball_spectrum",
]


@dataclass(frozen=True)
class BallSpectrumEntry:
    degree: int
    dbs_value: float
    mdbs_value: float
    multiplicity: int
    dimension: int


def _check_args(degree: int, dimension: int) -> None:
    if degree < 0:
        raise ValueError(f"polynomial degree must be nonnegative, got {degree}")
    if dimension < 2:
        raise ValueError(f"ball dimension must be at least 2, got {dimension}")


def ball_dbs(degree: int, dimension: int = 2) -> float:
    """DBS eigenvalue of the unit ball whose eigenfunctions come from
    degree-``degree`` harmonic polynomials: 2 d + N."""
    _check_args(degree, dimension)
    return float(2 * degree + dimension)


def ball_mdbs(degree: int, dimension: int = 2) -> float:
    """MDBS eigenvalue of the unit ball, 2 d + 1, independent of N."""
    _check_args(degree, dimension)
    return float(2 * degree + 1)


def harmonic_multiplicity(degree: int, dimension: int = 2) -> int:
    """Dimension of the space of homogeneous harmonic polynomials of the
    given degree in R^N."""
    _check_args(degree, dimension)
    n, d = dimension, degree
    second = math.comb(n + d - 3, d - 2) if d >= 2 else 0
    return math.comb(n + d - 1, d) - second


def ball_spectrum_entries(count: int, dimension: int = 2) -> list[BallSpectrumEntry]:
    """Entries for increasing degree until at least ``count`` eigenvalues
    (with multiplicity) are covered."""
    if count < 1:
        raise ValueError("count must be at least 1")
    entries = []
    total = 0
    degree = 0
    while total < count:
        mult = harmonic_multiplicity(degree, dimension)
        entries.append(
            BallSpectrumEntry(
                degree=degree,
                dbs_value=ball_dbs(degree, dimension),
                mdbs_value=ball_mdbs(degree, dimension),
                multiplicity=mult,
                dimension=dimension,
            )
        )
        total += mult
        degree += 1
    return entries


def enumerate_ball_spectrum(count: int, dimension: int = 2, which: str = "dbs") -> tuple[float, ...]:
    """First ``count`` eigenvalues of the unit ball in ascending order,
    each repeated according to its multiplicity."""
    kind = which.lower()
    if kind not in ("dbs", "mdbs"):
        raise ValueError(f"which must be 'dbs' or 'mdbs', got {which!r}")
    out: list[float] = []
    for entry in ball_spectrum_entries(count, dimension):
        value = entry.dbs_value if kind == "dbs" else entry.mdbs_value
        out.extend([value] * entry.multiplicity)
    return tuple(out[:count])
