import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dbslab.basis import HarmonicPolyBasis, make_poly_basis
from dbslab.errors import DegenerateBasisError, QuadratureConfigError
from dbslab.exact import enumerate_ball_spectrum
from dbslab.geometry import ConvexPolygon, Point2, regular_polygon, unit_disk
from dbslab.solver import (
    GramPair,
    QuadratureConfig,
    assemble,
    cluster_multiplicities,
    compute_spectrum,
    default_quadrature,
    solve_generalized,
)


def make_gram(a, b):
    basis = HarmonicPolyBasis(Point2(0, 0), 1.0, (a.shape[0] - 1) // 2)
    return GramPair(
        interior=np.asarray(a, dtype=float),
        boundary=np.asarray(b, dtype=float),
        basis=basis,
        domain=unit_disk(),
        quadrature=default_quadrature(basis),
    )


class TestAssembleClosedForms:
    def test_disk_constant(self, disk):
        gram = assemble(disk, make_poly_basis(disk, 0))
        assert gram.interior[0, 0] == pytest.approx(math.pi, rel=1e-13)
        assert gram.boundary[0, 0] == pytest.approx(2 * math.pi, rel=1e-13)

    def test_square_constant(self, unit_square):
        gram = assemble(unit_square, make_poly_basis(unit_square, 0))
        assert gram.interior[0, 0] == pytest.approx(1.0, rel=1e-13)
        assert gram.boundary[0, 0] == pytest.approx(4.0, rel=1e-13)

    def test_disk_degree_one_diagonal(self):
        disk = unit_disk()
        basis = HarmonicPolyBasis(Point2(0, 0), 1.0, 1)
        gram = assemble(disk, basis)
        assert np.allclose(gram.interior, np.diag([math.pi, math.pi / 4, math.pi / 4]), atol=1e-13)
        assert np.allclose(gram.boundary, np.diag([2 * math.pi, math.pi, math.pi]), atol=1e-13)

    def test_symmetry(self, irregular_polygon):
        gram = assemble(irregular_polygon, make_poly_basis(irregular_polygon, 8))
        assert np.array_equal(gram.interior, gram.interior.T)
        assert np.array_equal(gram.boundary, gram.boundary.T)

    def test_insufficient_quadrature_refused(self, unit_square):
        basis = make_poly_basis(unit_square, 6)
        quad = QuadratureConfig(boundary_degree=10, interior_degree=10)
        with pytest.raises(QuadratureConfigError):
            assemble(unit_square, basis, quad=quad)

    def test_backend_parity(self, unit_square):
        from dbslab.kernels import available_backends

        grams = [
            assemble(unit_square, make_poly_basis(unit_square, 10), backend=name)
            for name in available_backends()
        ]
        for other in grams[1:]:
            assert np.allclose(grams[0].interior, other.interior, atol=1e-14)
            assert np.allclose(grams[0].boundary, other.boundary, atol=1e-14)


class TestSolveGeneralized:
    def test_diagonal_pencil(self):
        spectrum = solve_generalized(make_gram(np.eye(3), np.diag([1.0, 2.0, 3.0])))
        assert np.allclose(spectrum.values, [1.0, 2.0, 3.0], atol=1e-14)
        assert spectrum.retained_dim == 3

    def test_disk_degree_one(self):
        a = np.diag([math.pi, math.pi / 4, math.pi / 4])
        b = np.diag([2 * math.pi, math.pi, math.pi])
        spectrum = solve_generalized(make_gram(a, b))
        assert np.allclose(spectrum.values, [2.0, 4.0, 4.0], atol=1e-13)

    def test_null_direction_filtered(self):
        a = np.diag([1.0, 1.0, 0.0])
        b = np.diag([1.0, 2.0, 5.0])
        spectrum = solve_generalized(make_gram(a, b))
        assert spectrum.retained_dim == 2
        assert np.allclose(spectrum.values, [1.0, 2.0], atol=1e-14)

    def test_degenerate_interior_raises(self):
        with pytest.raises(DegenerateBasisError):
            solve_generalized(make_gram(np.zeros((3, 3)), np.eye(3)))

    def test_asymmetry_rejected(self):
        a = np.eye(3)
        a[0, 1] = 1e-6
        with pytest.raises(ValueError, match="asymmetric"):
            solve_generalized(make_gram(a, np.eye(3)))

    def test_threshold_validation(self):
        gram = make_gram(np.eye(2), np.eye(2))
        with pytest.raises(ValueError):
            solve_generalized(gram, rel_threshold=0.0)
        with pytest.raises(ValueError):
            solve_generalized(gram, rel_threshold=1.5)

    def test_condition_number_reported(self):
        spectrum = solve_generalized(make_gram(np.diag([4.0, 1.0, 2.0]), np.eye(3)))
        assert spectrum.cond_interior == pytest.approx(4.0)


class TestComputeSpectrum:
    def test_disk_matches_closed_forms(self, disk):
        spectrum = compute_spectrum(disk, "poly", 6, 9)
        target = enumerate_ball_spectrum(9, 2, "dbs")
        assert np.max(np.abs(np.asarray(spectrum.values) - target)) <= 1e-8

    def test_scaled_disk(self):
        spectrum = compute_spectrum(unit_disk().scaled(2.0), "poly", 6, 1)
        assert spectrum.values[0] == pytest.approx(1.0, abs=1e-8)

    def test_triangle_constant_space(self):
        poly = regular_polygon(3, 1.0, "inscribed")
        spectrum = compute_spectrum(poly, "poly", 0, 1)
        assert spectrum.values[0] == pytest.approx(4.0, abs=1e-13)
        assert spectrum.values[0] == pytest.approx(poly.perimeter / poly.area, abs=1e-13)

    def test_truncation_flag(self, unit_square):
        spectrum = compute_spectrum(unit_square, "poly", 1, 10)
        assert spectrum.truncated
        assert len(spectrum.values) == 3
        assert spectrum.requested == 10

    def test_rejects_unknown_method(self, unit_square):
        with pytest.raises(ValueError):
            compute_spectrum(unit_square, "bem", 4, 2)

    def test_positivity(self, irregular_polygon):
        spectrum = compute_spectrum(irregular_polygon, "poly", 8, 5)
        assert spectrum.values[0] > 0.0

    def test_constant_bound(self, irregular_polygon):
        bound = irregular_polygon.perimeter / irregular_polygon.area
        for degree in (0, 4, 9):
            spectrum = compute_spectrum(irregular_polygon, "poly", degree, 1)
            assert spectrum.values[0] <= bound + 1e-10

    def test_mfs_on_disk_matches_closed_forms(self, disk):
        spectrum = compute_spectrum(disk, "mfs", 64, 9)
        target = enumerate_ball_spectrum(9, 2, "dbs")
        assert np.max(np.abs(np.asarray(spectrum.values) - target)) <= 1e-7


class TestRitzProperties:
    def test_monotone_in_degree_on_square(self, unit_square):
        previous = None
        for degree in (4, 6, 8, 10, 12):
            values = np.asarray(compute_spectrum(unit_square, "poly", degree, 5).values)
            if previous is not None:
                assert np.all(values <= previous + 1e-10)
            previous = values

    def test_upper_bounds_on_disk(self, disk):
        for degree in (2, 4, 6):
            values = np.asarray(compute_spectrum(disk, "poly", degree, 5).values)
            exact = np.asarray(enumerate_ball_spectrum(5, 2, "dbs"))
            assert np.all(values >= exact - 1e-10)

    @pytest.mark.parametrize("t", [0.5, 2.0, 3.0])
    def test_dilation_law(self, t, unit_square, hexagon):
        for poly in (unit_square, hexagon):
            base = np.asarray(compute_spectrum(poly, "poly", 10, 5).values)
            scaled = np.asarray(compute_spectrum(poly.scaled(t), "poly", 10, 5).values)
            assert np.allclose(scaled * t, base, rtol=1e-10)

    def test_rigid_motion_invariance(self, unit_square):
        base = np.asarray(compute_spectrum(unit_square, "poly", 12, 5).values)
        moved_poly = unit_square.rotated(1.1).translated(-2.0, 0.7)
        moved = np.asarray(compute_spectrum(moved_poly, "poly", 12, 5).values)
        assert np.allclose(moved, base, rtol=1e-9)

    def test_poly_mfs_agreement_on_square(self, unit_square):
        poly = np.asarray(compute_spectrum(unit_square, "poly", 20, 5).values)
        mfs = np.asarray(compute_spectrum(unit_square, "mfs", 100, 5).values)
        rel = np.abs(poly - mfs) / np.maximum(poly, mfs)
        assert np.max(rel) <= 1e-4


@given(
    k=st.integers(min_value=3, max_value=12),
    angle=st.floats(min_value=-3.0, max_value=3.0),
    dx=st.floats(min_value=-2.0, max_value=2.0),
)
@settings(max_examples=10, deadline=None)
def test_spectrum_invariant_under_rigid_motion(k, angle, dx):
    poly = regular_polygon(k, 1.0, "inscribed")
    base = np.asarray(compute_spectrum(poly, "poly", 6, 3).values)
    moved = np.asarray(compute_spectrum(poly.rotated(angle).translated(dx, 0.5), "poly", 6, 3).values)
    assert np.allclose(moved, base, rtol=1e-9)


class TestClusterMultiplicities:
    def test_basic(self):
        clusters = cluster_multiplicities([2.0, 4.0, 4.0, 6.0])
        assert clusters.clusters == ((2.0, 1), (4.0, 2), (6.0, 1))

    def test_near_degenerate_pair(self):
        clusters = cluster_multiplicities([1.0, 1.0000001])
        assert clusters.multiplicities == (2,)
        assert clusters.values[0] == pytest.approx(1.00000005)

    def test_disk_multiplicities(self, disk):
        spectrum = compute_spectrum(disk, "poly", 6, 9)
        clusters = cluster_multiplicities(spectrum)
        assert clusters.multiplicities == (1, 2, 2, 2, 2)

    def test_empty(self):
        assert cluster_multiplicities([]).clusters == ()

    def test_values_strictly_increasing(self):
        clusters = cluster_multiplicities([1.0, 1.0, 2.0, 2.0, 2.0, 9.0])
        vals = clusters.values
        assert all(b > a for a, b in zip(vals, vals[1:]))
        assert clusters.multiplicities == (2, 3, 1)
