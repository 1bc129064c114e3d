import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import disksampling as ds
from disksampling.validation import NumericalRangeError

from conftest import random_disk_points, sup_relative_error


def overlap_by_series(twice_s, z, w, tol=1e-16, max_terms=5000):
    """Independent route: sum_m U_m(z) conj(U_m(w)), truncated geometrically."""
    total = 0.0 + 0.0j
    for m in range(max_terms):
        term = ds.basis_fn(twice_s, m, z) * np.conj(ds.basis_fn(twice_s, m, w))
        total += term
        if m > 0 and abs(term) < tol * max(abs(total), 1e-300):
            return total
    raise AssertionError("series did not converge")


disk_point = st.builds(
    lambda rho, theta: rho * np.exp(1j * theta),
    st.floats(min_value=0.0, max_value=0.9),
    st.floats(min_value=0.0, max_value=2.0 * np.pi),
)


class TestLogBinomial:
    def test_zero_index_exact(self):
        for twice_s in (2, 3, 4, 5, 11):
            assert ds.log_binomial(twice_s, 0) == 0.0

    def test_hand_values(self):
        assert ds.log_binomial(2, 3) == pytest.approx(np.log(4.0), rel=1e-14)
        assert ds.log_binomial(3, 2) == pytest.approx(np.log(6.0), rel=1e-14)

    def test_vectorized_matches_scalar(self):
        n = np.arange(6)
        vec = ds.log_binomial(5, n)
        assert vec.shape == (6,)
        for i in range(6):
            assert vec[i] == ds.log_binomial(5, int(i))

    def test_rejects_bad_domain(self):
        with pytest.raises(ValueError):
            ds.log_binomial(1, 0)
        with pytest.raises(ValueError):
            ds.log_binomial(2, -1)


class TestSamplingGrid:
    def test_fourth_roots(self):
        pts = ds.SamplingGrid(0.5, 4).points
        expected = np.array([0.5 + 0j, 0.5j, -0.5 + 0j, -0.5j])
        assert np.allclose(pts, expected, atol=1e-15)

    def test_single_point(self):
        assert ds.SamplingGrid(0.37, 1).points[0] == pytest.approx(0.37 + 0j)

    def test_points_from_angles(self):
        grid = ds.SamplingGrid(0.81, 7)
        ang = 2.0 * np.pi * np.arange(7) / 7
        assert np.array_equal(grid.points, 0.81 * (np.cos(ang) + 1j * np.sin(ang)))

    @pytest.mark.parametrize("radius", [0.0, 1.0, -0.2, 1.5])
    def test_radius_rejected(self, radius):
        with pytest.raises(ValueError):
            ds.SamplingGrid(radius, 4)

    def test_n_samples_rejected(self):
        with pytest.raises(ValueError):
            ds.SamplingGrid(0.5, 0)


class TestBasisFn:
    def test_lowest_at_origin(self):
        assert ds.basis_fn(2, 0, 0j) == 1.0 + 0j

    def test_hand_values(self):
        assert ds.basis_fn(2, 1, 0.5) == pytest.approx(np.sqrt(2) * 0.75 * 0.5, rel=1e-14)
        val = ds.basis_fn(2, 2, 0.5j)
        assert val == pytest.approx(-np.sqrt(3) * 0.75 * 0.25, rel=1e-14)
        assert abs(val.imag) < 1e-15

    def test_higher_modes_vanish_at_origin(self):
        assert ds.basis_fn(3, 5, 0j) == 0j

    def test_magnitude_bound(self):
        rng = np.random.default_rng(7)
        z = random_disk_points(rng, 50)
        for m in (0, 1, 7):
            bound = np.exp(0.5 * ds.log_binomial(4, m))
            assert np.all(np.abs(ds.basis_fn(4, m, z)) <= bound + 1e-12)

    def test_direct_product_agreement(self):
        # log-domain assembly against the naive product formula
        rng = np.random.default_rng(8)
        z = random_disk_points(rng, 20, max_radius=0.8)
        for twice_s in (2, 3, 5):
            for m in (0, 1, 4, 9):
                binom = np.exp(ds.log_binomial(twice_s, m))
                naive = (
                    np.sqrt(binom)
                    * (1.0 - np.abs(z) ** 2) ** (twice_s / 2.0)
                    * np.conj(z) ** m
                )
                assert sup_relative_error(ds.basis_fn(twice_s, m, z), naive) < 1e-12

    def test_outside_disk_rejected(self):
        with pytest.raises(ValueError):
            ds.basis_fn(2, 0, 1.0 + 0j)


class TestOverlap:
    def test_hand_values(self):
        assert ds.overlap(2, 0.5, 0.0) == pytest.approx(0.75, rel=1e-14)
        assert ds.overlap(2, 0.5, -0.5) == pytest.approx(0.36, rel=1e-14)

    @settings(max_examples=40, deadline=None, derandomize=True)
    @given(z=disk_point, w=disk_point, twice_s=st.integers(min_value=2, max_value=7))
    def test_normalization_symmetry_bound(self, z, w, twice_s):
        assert ds.overlap(twice_s, z, z) == pytest.approx(1.0, abs=1e-12)
        left = ds.overlap(twice_s, z, w)
        assert left == pytest.approx(np.conj(ds.overlap(twice_s, w, z)), abs=1e-13)
        assert abs(left) <= 1.0 + 1e-12
        if abs(z - w) > 1e-3:
            assert abs(left) < 1.0

    def test_series_consistency(self):
        rng = np.random.default_rng(9)
        z = random_disk_points(rng, 6, max_radius=0.85)
        w = random_disk_points(rng, 6, max_radius=0.85)
        for twice_s in (2, 3, 5):
            for zi, wi in zip(z, w):
                direct = ds.overlap(twice_s, zi, wi)
                series = overlap_by_series(twice_s, zi, wi)
                assert abs(direct - series) < 1e-12 * max(1.0, abs(direct))


class TestSpectrum:
    def test_hand_values(self):
        grid4 = ds.SamplingGrid(0.5, 4)
        assert ds.lambda_n(2, grid4, 0) == pytest.approx(2.25, rel=1e-14)
        assert ds.lambda_n(2, grid4, 1) == pytest.approx(1.125, rel=1e-14)
        grid2 = ds.SamplingGrid(0.5, 2)
        assert ds.lambda_n(2, grid2, 2) == pytest.approx(0.2109375, rel=1e-14)

    def test_matches_product_formula(self):
        grid = ds.SamplingGrid(0.62, 5)
        for twice_s in (2, 3, 5):
            spectrum = ds.ResolutionSpectrum(twice_s, grid)
            for n in range(12):
                direct = (
                    grid.n_samples
                    * (1.0 - grid.radius**2) ** twice_s
                    * np.exp(ds.log_binomial(twice_s, n))
                    * grid.radius ** (2 * n)
                )
                assert np.exp(spectrum.log_values(n)) == pytest.approx(direct, rel=1e-12)

    def test_positive_and_on_demand(self):
        spectrum = ds.ResolutionSpectrum(3, ds.SamplingGrid(0.9, 3))
        vals = spectrum.values(np.arange(200))
        assert np.all(vals > 0)

    def test_grid_modulus_identity(self):
        # lambda_n equals N |U_n(z_k)|^2 at every grid point
        grid = ds.SamplingGrid(0.7, 6)
        for twice_s in (2, 5):
            for n in (0, 3, 8):
                lam = ds.lambda_n(twice_s, grid, n)
                mags = np.abs(ds.basis_fn(twice_s, n, grid.points)) ** 2
                assert np.allclose(grid.n_samples * mags, lam, rtol=1e-12)

    def test_underflow_raises_with_log(self):
        spectrum = ds.ResolutionSpectrum(2, ds.SamplingGrid(0.5, 2))
        with pytest.raises(NumericalRangeError) as info:
            spectrum.values(300000)
        assert info.value.log_value == pytest.approx(
            float(spectrum.log_values(300000)), rel=1e-12
        )


class TestSignals:
    def test_requires_coefficients(self):
        with pytest.raises(ValueError):
            ds.DiskSignal(2, [])

    def test_immutable(self):
        sig = ds.DiskSignal(2, [1.0, 2.0])
        with pytest.raises(ValueError):
            sig.coefficients[0] = 0.0

    def test_eval_hand_values(self):
        assert ds.evaluate_signal(ds.DiskSignal(2, [1.0]), 0j) == pytest.approx(1.0)
        lone = ds.evaluate_signal(ds.DiskSignal(2, [0.0, 1.0]), 0.5)
        assert lone == pytest.approx(ds.basis_fn(2, 1, 0.5), rel=1e-14)
        both = ds.evaluate_signal(ds.DiskSignal(2, [1.0, 1.0]), 0.5)
        assert both == pytest.approx(0.75 + np.sqrt(2) * 0.375, rel=1e-13)

    def test_eval_linearity(self):
        rng = np.random.default_rng(10)
        a = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        b = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        z = random_disk_points(rng, 9)
        lhs = ds.evaluate_signal(ds.DiskSignal(3, a + 2.0 * b), z)
        rhs = ds.evaluate_signal(ds.DiskSignal(3, a), z) + 2.0 * ds.evaluate_signal(
            ds.DiskSignal(3, b), z
        )
        assert np.allclose(lhs, rhs, rtol=1e-12, atol=1e-14)


class TestSampleSignal:
    def test_constant_mode(self):
        samples = ds.sample_signal(ds.DiskSignal(2, [1.0]), ds.SamplingGrid(0.5, 2))
        assert np.allclose(samples, [0.75, 0.75], rtol=1e-14)

    def test_first_mode_signs(self):
        samples = ds.sample_signal(ds.DiskSignal(2, [0.0, 1.0]), ds.SamplingGrid(0.5, 2))
        expected = np.sqrt(2) * 0.75 * 0.5
        assert np.allclose(samples, [expected, -expected], rtol=1e-13, atol=1e-15)

    def test_angular_independence_of_mode_zero(self):
        samples = ds.sample_signal(ds.DiskSignal(5, [2.0 - 1j]), ds.SamplingGrid(0.8, 4))
        assert np.allclose(samples, samples[0], rtol=1e-14)

    @pytest.mark.parametrize(
        "twice_s,length,n_samples,radius",
        [(2, 5, 2, 0.5), (3, 64, 8, 0.3), (5, 512, 64, 0.7), (4, 130, 12, 0.9)],
    )
    def test_fast_path_matches_direct(self, twice_s, length, n_samples, radius):
        rng = np.random.default_rng(100 + length)
        coeffs = rng.standard_normal(length) + 1j * rng.standard_normal(length)
        signal = ds.DiskSignal(twice_s, coeffs)
        grid = ds.SamplingGrid(radius, n_samples)
        fast = ds.sample_signal(signal, grid)
        direct = ds.evaluate_signal(signal, grid.points)
        assert sup_relative_error(fast, direct) < 1e-12

    @settings(max_examples=25, deadline=None, derandomize=True)
    @given(
        twice_s=st.integers(min_value=2, max_value=6),
        length=st.integers(min_value=1, max_value=80),
        n_samples=st.integers(min_value=1, max_value=16),
        radius=st.floats(min_value=0.05, max_value=0.9),
        seed=st.integers(min_value=0, max_value=2**16),
    )
    def test_fast_path_property(self, twice_s, length, n_samples, radius, seed):
        rng = np.random.default_rng(seed)
        coeffs = rng.standard_normal(length) + 1j * rng.standard_normal(length)
        signal = ds.DiskSignal(twice_s, coeffs)
        grid = ds.SamplingGrid(radius, n_samples)
        assert sup_relative_error(
            ds.sample_signal(signal, grid), ds.evaluate_signal(signal, grid.points)
        ) < 1e-12
