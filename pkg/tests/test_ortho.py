import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dyadic_transforms.kernels import TransformKind, exact_matrix
from dyadic_transforms.ortho import (
    Mode,
    build_pair,
    build_polar_pair,
    build_scalar_pair,
    closeness_comparison,
    error_analysis,
    projection_residual,
    unitarity_defect,
)

KINDS = list(TransformKind)


class TestMode:
    def test_parse(self):
        assert Mode.parse("beta") is Mode.SCALAR_BETA
        assert Mode.parse("POLAR") is Mode.POLAR_ORTHO
        with pytest.raises(ValueError):
            Mode.parse("qr")


class TestScalarPair:
    def test_c8_example(self):
        p = build_scalar_pair("cosine", 8, 0)
        assert p.beta == pytest.approx(0.3922, abs=5e-5)
        np.testing.assert_allclose(np.diag(p.d_inv), 1 / np.array([8, 6, 4, 6, 8, 6, 4, 6]), atol=1e-14)

    def test_unit_beta_scales_spectrum(self):
        p = build_scalar_pair("fourier", 4, 0, unit_beta=True)
        assert p.beta == 1
        np.testing.assert_allclose(p.apply(np.ones(4)), [4, 0, 0, 0], atol=1e-14)
        np.testing.assert_allclose(p.reconstruct(p.apply(np.ones(4))), np.ones(4), atol=1e-14)

    def test_correction_field(self):
        assert build_scalar_pair("hartley", 8, 1).correction == build_scalar_pair("hartley", 8, 1).beta

    def test_read_only(self):
        p = build_scalar_pair("cosine", 4, 0)
        with pytest.raises(ValueError):
            p.forward[0, 0] = 0


class TestPolarPair:
    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("n", [4, 8, 16, 32])
    @pytest.mark.parametrize("m", range(4))
    def test_unitary(self, kind, n, m):
        p = build_polar_pair(kind, n, m)
        assert np.linalg.norm(p.forward @ p.forward.conj().T - np.eye(n)) < 1e-10
        np.testing.assert_allclose(p.inverse, p.forward.conj().T)

    def test_c8_is_row_normalised(self):
        p = build_polar_pair("cosine", 8, 0)
        np.testing.assert_allclose(np.diag(p.s_inv), 1 / np.sqrt([8, 6, 4, 6, 8, 6, 4, 6]), atol=1e-14)

    def test_real_kinds_stay_real(self):
        for kind in ("hartley", "cosine"):
            assert np.max(np.abs(build_polar_pair(kind, 16, 2).forward.imag)) < 1e-14


class TestReconstruction:
    @given(
        st.sampled_from(KINDS),
        st.sampled_from(list(Mode)),
        st.sampled_from([4, 8, 16, 32]),
        st.integers(0, 4),
        st.integers(0, 2**31 - 1),
    )
    @settings(max_examples=60, deadline=None)
    def test_round_trip(self, kind, mode, n, m, seed):
        rng = np.random.default_rng(seed)
        p = build_pair(kind, n, m, mode)
        v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        assert np.max(np.abs(p.reconstruct(p.apply(v)) - v)) < 1e-9

    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("mode", list(Mode))
    def test_identity_composition(self, kind, mode):
        assert build_pair(kind, 64, 3, mode).reconstruction_error() < 1e-9

    @pytest.mark.parametrize("kind", KINDS)
    def test_projection_residual(self, kind):
        assert projection_residual(kind, 32, 2) < 1e-9


class TestCloseness:
    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("n", [8, 16, 64])
    @pytest.mark.parametrize("m", range(5))
    def test_polar_closer(self, kind, n, m):
        d_polar, d_beta = closeness_comparison(kind, n, m)
        assert d_polar < d_beta

    def test_exact_case(self):
        d_polar, d_beta = closeness_comparison("fourier", 4, 2)
        assert d_polar < 1e-12 and d_beta < 1e-12


class TestErrorAnalysis:
    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("n", [4, 8, 16, 32, 64])
    @pytest.mark.parametrize("m", range(7))
    def test_bounds(self, kind, n, m):
        r = error_analysis(kind, n, m)
        assert r.epsilon1 <= r.epsilon1_bound + 1e-15
        assert r.epsilon <= math.sqrt(2) * r.epsilon1 + 4 * r.epsilon1**2 + 1e-12
        if r.epsilon > 1e-12:
            assert 0.5 <= r.epsilon_prime / r.epsilon <= 2

    def test_bound_constant(self):
        assert error_analysis("fourier", 8, 1).epsilon1_bound == 0.25
        assert error_analysis("cosine", 8, 1).epsilon1_bound == pytest.approx(math.sqrt(2) / 4)

    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("n", [16, 64])
    def test_two_step_decrease(self, kind, n):
        eps = [error_analysis(kind, n, m).epsilon_prime for m in range(9)]
        assert all(eps[m + 2] < eps[m] for m in range(7))

    def test_exact_representation(self):
        r = error_analysis("fourier", 4, 0)
        assert r.epsilon == pytest.approx(0, abs=1e-14)
        assert r.epsilon1 < 1e-15

    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("n", [8, 16, 64])
    def test_unitarity_defect_vanishes(self, kind, n):
        # single steps can stall (equal defects at m=2,3 for n=8), so halving
        # is checked per two orders and over the whole range
        u = {m: unitarity_defect(kind, n, m) for m in range(2, 9)}
        assert all(u[m + 2] <= 0.5 * u[m] for m in range(2, 7))
        assert u[8] <= 1.2 * u[2] / 2**6

    def test_unitary_exact_reference(self):
        K = exact_matrix("cosine", 8).entries
        assert np.linalg.norm(K @ K.T - np.eye(8)) < 1e-12
