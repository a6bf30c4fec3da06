import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import optimize

from dyadic_transforms.dyadic import dyadic_matrix, round_array
from dyadic_transforms.kernels import TransformKind, exact_matrix
from dyadic_transforms.scalaropt import (
    alpha_closed_form_m0,
    alpha_residual,
    cosine_mse,
    frobenius_beta,
    optimal_alpha,
    optimal_beta,
    optimal_beta_markov,
    pi_partial,
)

# roots of the stationarity equation, frozen from an independent brute-force
# minimisation of the rounding error integral refined by the residual
ALPHA_FROZEN = [1.1455586358763503, 1.0754409834713223, 1.038452188542968, 1.0194182762638988, 1.0097584076600512]
COSINE_MSE_FROZEN = [
    0.10054490702516872,
    0.027294202852712557,
    0.007215721454184587,
    0.0018741566312868718,
    0.00048103037538438365,
    0.0001224724108586095,
    3.1010213374704776e-05,
]


def rounding_error_integral(alpha, m, points=40_001):
    t = np.linspace(-np.pi, np.pi, points)
    y = alpha * np.cos(t)
    return np.trapezoid((y - round_array(2**m * y) / 2**m) ** 2, t)


def grid_argmin(m, step=1e-4):
    # the objective is piecewise smooth with kinks, so scan rather than descend
    grid = np.arange(1.0, 1.2 + step / 2, step)
    return grid[int(np.argmin([rounding_error_integral(a, m) for a in grid]))]


def quarter_period_mse_oracle(m, points=100_001):
    t = np.linspace(-np.pi, np.pi, points)
    c = np.cos(t)
    return np.trapezoid((c - round_array(2**m * c) / 2**m) ** 2, t) / 4


class TestAlpha:
    def test_closed_form_m0(self):
        assert abs(optimal_alpha(0).alpha - alpha_closed_form_m0()) < 1e-10

    @pytest.mark.parametrize("m", range(5))
    def test_frozen(self, m):
        sol = optimal_alpha(m)
        assert sol.alpha == pytest.approx(ALPHA_FROZEN[m], abs=1e-10)
        assert abs(sol.residual) < 1e-10
        assert abs(alpha_residual(sol.alpha, m)) < 1e-10

    @pytest.mark.parametrize("m", range(5))
    def test_brute_force_minimiser(self, m):
        assert grid_argmin(m) == pytest.approx(optimal_alpha(m).alpha, abs=1.5e-4)

    def test_bracket_and_limit(self):
        values = [optimal_alpha(m).alpha for m in range(9)]
        assert all(1 < a <= 1.2 for a in values)
        assert all(b < a for a, b in zip(values, values[1:]))
        assert 1 < optimal_alpha(12).alpha < 1.001

    def test_negative_order(self):
        with pytest.raises(ValueError):
            optimal_alpha(-1)


class TestCosineMSE:
    @pytest.mark.parametrize("m", range(7))
    def test_oracle(self, m):
        assert abs(cosine_mse(m) - quarter_period_mse_oracle(m)) < 1e-6
        assert cosine_mse(m) == pytest.approx(COSINE_MSE_FROZEN[m], rel=1e-12)

    def test_m0_closed_form(self):
        assert cosine_mse(0) == pytest.approx(math.pi / 4 - math.sqrt(3) + math.acos(0.5), abs=1e-15)

    def test_decreasing(self):
        v = [cosine_mse(m) for m in range(8)]
        assert all(b < a for a, b in zip(v, v[1:]))
        assert v[6] < 1e-3


class TestPiPartial:
    def test_m0(self):
        assert pi_partial(0) == pytest.approx(2 * math.sqrt(3))

    def test_convergence(self):
        assert abs(pi_partial(8) - math.pi) < 1e-3
        errs = [abs(pi_partial(m) - math.pi) for m in range(9)]
        assert all(b < a for a, b in zip(errs, errs[1:]))

    def test_relation_to_residual(self):
        # at alpha = 1 the residual is (pi - partial sum) / 2
        for m in range(6):
            assert alpha_residual(1.0, m) == pytest.approx((math.pi - pi_partial(m)) / 2, abs=1e-14)


class TestBeta:
    @pytest.mark.parametrize("kind, n, m, expect", [("fourier", 4, 0, 0.5), ("hartley", 4, 1, 1.0), ("cosine", 8, 0, 0.3922)])
    def test_examples(self, kind, n, m, expect):
        assert optimal_beta(kind, n, m).beta == pytest.approx(expect, abs=5e-5)

    @pytest.mark.parametrize("kind", list(TransformKind))
    @pytest.mark.parametrize("n, m", [(6, 0), (8, 2), (12, 1), (16, 3), (64, 4)])
    def test_numerical_minimiser(self, kind, n, m):
        K = exact_matrix(kind, n).entries
        A = dyadic_matrix(kind, n, m).values
        res = optimize.minimize_scalar(lambda b: np.linalg.norm(K - b * A) ** 2, bounds=(0, 2), method="bounded",
                                       options={"xatol": 1e-12})
        assert optimal_beta(kind, n, m).beta == pytest.approx(res.x, abs=1e-8)

    @pytest.mark.parametrize("kind", list(TransformKind))
    @pytest.mark.parametrize("n", [4, 6, 8, 12, 16, 24, 32, 64, 128])
    def test_limit(self, kind, n):
        assert abs(optimal_beta(kind, n, 10).beta - 1 / kind.eta(n)) < 1e-3

    def test_zero_matrix(self):
        with pytest.raises(ZeroDivisionError):
            frobenius_beta(np.eye(2), np.zeros((2, 2)))

    @given(st.floats(0.1, 10), st.integers(0, 2**31 - 1))
    def test_scale_equivariance(self, c, seed):
        rng = np.random.default_rng(seed)
        K = rng.standard_normal((4, 4))
        A = rng.standard_normal((4, 4))
        assert frobenius_beta(K, c * A) == pytest.approx(frobenius_beta(K, A) / c, rel=1e-9)

    @pytest.mark.parametrize("kind", list(TransformKind))
    def test_markov_reduces_to_frobenius(self, kind):
        assert optimal_beta_markov(kind, 8, 2, rho=0.0).beta == pytest.approx(optimal_beta(kind, 8, 2).beta, abs=1e-14)

    def test_markov_rho_range(self):
        with pytest.raises(ValueError):
            optimal_beta_markov("cosine", 8, 0, rho=1.0)
