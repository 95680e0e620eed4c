"""Dirichlet-biharmonic-Steklov eigenvalues on convex planar domains.

The eigenvalues are computed through their dual characterization: min-max
values of the ratio of boundary to interior L2 mass over finite harmonic
trial spaces, which yields Rayleigh-Ritz upper bounds. Closed forms for
the disk and a polygon-family experiment around it reproduce the
polygon-approximation paradox at desk scale.
"""

from .basis import (
    BasisEvaluation,
    HarmonicPolyBasis,
    MfsBasis,
    laplacian_residual,
    make_mfs_basis,
    make_poly_basis,
)
from .errors import DegenerateBasisError, EvaluationDomainError, QuadratureConfigError
from .exact import (
    BallSpectrumEntry,
    ball_dbs,
    ball_mdbs,
    ball_spectrum_entries,
    enumerate_ball_spectrum,
    harmonic_multiplicity,
)
from .experiments import (
    ConvergenceTable,
    CrossValidationReport,
    DiskValidationReport,
    ParadoxConfig,
    ParadoxRow,
    run_cross_validation,
    run_disk_validation,
    run_paradox,
    run_validation_suite,
    write_csv,
    write_json,
)
from .geometry import (
    ConvexPolygon,
    Disk,
    Point2,
    Triangle,
    hausdorff_to_disk,
    regular_polygon,
    unit_disk,
)
from .quadrature import (
    DiskRule,
    SegmentRule,
    TriangleRule,
    disk_rule,
    gauss_legendre,
    integrate_boundary,
    integrate_circle,
    integrate_disk,
    integrate_interior,
    triangle_rule,
)
from .solver import (
    GramPair,
    MultiplicityClusters,
    QuadratureConfig,
    Spectrum,
    assemble,
    cluster_multiplicities,
    compute_spectrum,
    default_quadrature,
    solve_generalized,
)

__version__ = "0.1.0"
