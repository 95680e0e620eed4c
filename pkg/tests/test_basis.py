import numpy as np
import pytest

from dbslab.basis import (
    BasisEvaluation,
    HarmonicPolyBasis,
    MfsBasis,
    laplacian_residual,
    make_mfs_basis,
    make_poly_basis,
)
from dbslab.errors import EvaluationDomainError
from dbslab.geometry import Point2, regular_polygon, unit_disk


def complex_power_oracle(points, center, scale, degree):
    """Reference evaluation through numpy complex powers."""
    z = ((points[:, 0] - center[0]) + 1j * (points[:, 1] - center[1])) / scale
    cols = [np.ones(len(points))]
    for d in range(1, degree + 1):
        zd = z**d
        cols.append(zd.real)
        cols.append(zd.imag)
    return np.column_stack(cols)


class TestHarmonicPolyBasis:
    def test_dimension(self, disk):
        assert make_poly_basis(disk, 0).dimension == 1
        assert make_poly_basis(disk, 3).dimension == 7

    def test_centered_on_domain(self, unit_square):
        basis = make_poly_basis(unit_square, 1)
        assert (basis.center.x, basis.center.y) == pytest.approx((0.5, 0.5), abs=1e-14)
        assert basis.scale == pytest.approx(np.sqrt(0.5), rel=1e-14)
        vals = basis.values([(0.9, 0.5)])
        assert vals[0, 0] == 1.0
        assert vals[0, 1] == pytest.approx(0.4 / np.sqrt(0.5), rel=1e-13)
        assert vals[0, 2] == pytest.approx(0.0, abs=1e-14)

    def test_first_degree_values(self):
        basis = HarmonicPolyBasis(Point2(0, 0), 1.0, 1)
        vals = basis.values([(0.3, 0.4)])
        assert vals[0].tolist() == pytest.approx([1.0, 0.3, 0.4], abs=1e-15)

    def test_im_z_squared_is_2xy(self):
        basis = HarmonicPolyBasis(Point2(0, 0), 1.0, 2)
        vals = basis.values([(0.5, 0.5)])
        assert vals[0, 4] == pytest.approx(0.5, abs=1e-15)

    @pytest.mark.parametrize("degree", [0, 1, 5, 15])
    def test_recurrence_matches_complex_powers(self, degree, backend):
        rng = np.random.default_rng(7)
        pts = rng.uniform(-2.0, 2.0, size=(200, 2))
        basis = HarmonicPolyBasis(Point2(0.3, -0.1), 1.7, degree)
        got = basis.values(pts, backend=backend)
        want = complex_power_oracle(pts, (0.3, -0.1), 1.7, degree)
        assert np.allclose(got, want, rtol=1e-13, atol=1e-13)

    def test_scaling_consistency(self, hexagon):
        # Basis built from the dilated domain, evaluated at dilated points,
        # reproduces the original basis at the original points.
        t = 2.5
        rng = np.random.default_rng(3)
        pts = rng.uniform(-0.4, 0.4, size=(50, 2))
        base = make_poly_basis(hexagon, 6).values(pts)
        dilated = make_poly_basis(hexagon.scaled(t), 6).values(t * pts)
        assert np.allclose(base, dilated, atol=1e-14)

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            HarmonicPolyBasis(Point2(0, 0), 0.0, 2)
        with pytest.raises(ValueError):
            make_poly_basis(unit_disk(), -1)


class TestMfsBasis:
    def test_dimension(self, unit_square):
        assert make_mfs_basis(unit_square, 16).dimension == 17

    def test_sources_outside_with_margin(self, irregular_polygon):
        basis = make_mfs_basis(irregular_polygon, 32)
        rc = irregular_polygon.circumradius
        for src in basis.sources:
            assert not irregular_polygon.contains(src)
            assert irregular_polygon.boundary_distance(src) >= 0.1 * rc

    def test_log_distance_value(self, unit_square):
        basis = make_mfs_basis(unit_square, 8)
        probe = basis.sources[0] + np.array([1.0, 0.0])
        vals = basis.values([probe])
        assert vals[0, 1] == pytest.approx(0.0, abs=1e-14)

    def test_constant_element_first(self, unit_square):
        basis = make_mfs_basis(unit_square, 8)
        vals = basis.values([(0.5, 0.5), (0.25, 0.75)])
        assert np.all(vals[:, 0] == 1.0)

    def test_source_coincidence_raises(self, unit_square, backend):
        basis = make_mfs_basis(unit_square, 8)
        with pytest.raises(EvaluationDomainError):
            basis.values([basis.sources[3]], backend=backend)

    def test_too_close_factor_rejected(self, unit_square):
        with pytest.raises(ValueError):
            make_mfs_basis(unit_square, 8, radius_factor=1.05)


class TestLaplacianResidual:
    def test_poly_basis_is_harmonic(self, hexagon):
        rng = np.random.default_rng(11)
        pts = rng.uniform(-0.4, 0.4, size=(100, 2))
        residual = laplacian_residual(make_poly_basis(hexagon, 12), pts)
        assert residual <= 1e-6

    def test_mfs_basis_is_harmonic(self, hexagon):
        rng = np.random.default_rng(12)
        pts = rng.uniform(-0.4, 0.4, size=(100, 2))
        residual = laplacian_residual(make_mfs_basis(hexagon, 48), pts)
        assert residual <= 1e-6

    def test_detects_non_harmonic_control(self):
        rng = np.random.default_rng(13)
        pts = rng.uniform(-0.5, 0.5, size=(50, 2))
        control = lambda q: (np.asarray(q)[:, 0] ** 2).reshape(-1, 1)
        residual = laplacian_residual(control, pts)
        assert residual == pytest.approx(2.0, rel=1e-5)


class TestBasisEvaluation:
    def test_rejects_non_finite(self):
        with pytest.raises(EvaluationDomainError):
            BasisEvaluation(np.array([[1.0, np.inf]]))

    def test_values_read_only(self, unit_square):
        ev = make_poly_basis(unit_square, 2).eval([(0.5, 0.5)])
        with pytest.raises(ValueError):
            ev.values[0, 0] = 7.0
