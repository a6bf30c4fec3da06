"""Transform quality under a first-order Markov source.

For a covariance ``R`` and an analysis matrix ``K`` the transformed
covariance is ``R_y = K R K^H`` with coefficient variances
``sigma_i^2 = R_y[i, i]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import toeplitz

from .dyadic import dyadic_matrix
from .kernels import TransformKind, exact_matrix
from .matops import hermitian_inverse_sqrt, gram, inverse
from .scalaropt import optimal_beta_markov

__all__ = [
    "MarkovSource",
    "MetricsRow",
    "markov_covariance",
    "transform_mse",
    "coding_gain",
    "scaled_coding_gain",
    "transform_efficiency",
    "basis_frequency_response",
    "dct_scalar_metrics",
    "dct_polar_metrics",
    "dct_exact_metrics",
    "dct_fixed_beta_metrics",
]


@dataclass(frozen=True)
class MarkovSource:
    n: int
    rho: float = 0.95

    def __post_init__(self):
        if not 0 <= self.rho < 1:
            raise ValueError(f"correlation coefficient must lie in [0, 1), got {self.rho!r}")
        if self.n < 1:
            raise ValueError(f"invalid blocklength {self.n!r}")

    def covariance(self) -> np.ndarray:
        return toeplitz(self.rho ** np.arange(self.n))


def markov_covariance(source: MarkovSource) -> np.ndarray:
    """``R[i, j] = rho^|i - j|``."""
    return source.covariance()


def _check(*mats):
    n = mats[0].shape
    for M in mats:
        if M.ndim != 2 or M.shape != n or n[0] != n[1]:
            raise ValueError(f"shape mismatch: {[m.shape for m in mats]}")


def transform_mse(K_exact, K_approx, R) -> float:
    """``tr(Delta R Delta^H) / n`` with ``Delta = K_exact - K_approx``."""
    K_exact, K_approx, R = map(np.asarray, (K_exact, K_approx, R))
    _check(K_exact, K_approx, R)
    D = K_exact - K_approx
    return float(np.trace(D @ R @ D.conj().T).real / R.shape[0])


def _variances(K, R) -> np.ndarray:
    return np.real(np.diag(K @ R @ K.conj().T))


def coding_gain(K, inverse_basis, R) -> float:
    """Biorthogonal coding gain in dB.

    ``10 log10( mean(sigma^2) / geomean(sigma_i^2 ||g_i||^2) )`` where
    ``g_i`` is column ``i`` of ``inverse_basis``.  For unitary ``K`` with
    ``inverse_basis = K^H`` this is the classical orthonormal coding gain.
    """
    K, G, R = map(np.asarray, (K, inverse_basis, R))
    _check(K, G, R)
    s = _variances(K, R)
    g = np.sum(np.abs(G) ** 2, axis=0)
    return float(10 * np.log10(np.mean(s)) - 10 * np.mean(np.log10(s * g)))


def scaled_coding_gain(K, R) -> float:
    """Coding gain of a scaled non-orthogonal analysis matrix, in dB.

    Classical ratio of arithmetic to geometric mean of the coefficient
    variances, referred to the average gain ``||K||_F / sqrt(n)`` of the
    analysis rows.  Equals the classical figure for unitary ``K`` and
    depends on the overall scale of ``K``.
    """
    K, R = map(np.asarray, (K, R))
    _check(K, R)
    n = K.shape[0]
    s = _variances(K, R)
    classical = 10 * np.log10(np.mean(s)) - 10 * np.mean(np.log10(s))
    return float(classical - 10 * np.log10(np.linalg.norm(K) / math.sqrt(n)))


def transform_efficiency(K, R) -> float:
    """``100 * sum_i |R_y[i, i]| / sum_ij |R_y[i, j]|`` in percent."""
    K, R = map(np.asarray, (K, R))
    _check(K, R)
    Ry = K @ R @ K.conj().T
    return float(100 * np.sum(np.abs(np.diag(Ry))) / np.sum(np.abs(Ry)))


def basis_frequency_response(K, row: int, points: int = 256) -> list[tuple[float, float]]:
    """``|sum_k K[row, k] exp(-j w k)|`` on ``points`` uniform frequencies in ``[0, pi]``."""
    K = np.asarray(K)
    if not 0 <= row < K.shape[0]:
        raise IndexError(f"row {row} out of range for a {K.shape[0]}-row matrix")
    if points < 2:
        raise ValueError("need at least two frequency points")
    w = np.linspace(0.0, np.pi, points)
    k = np.arange(K.shape[1])
    mag = np.abs(np.exp(-1j * np.outer(w, k)) @ K[row])
    return [(float(a), float(b)) for a, b in zip(w, mag)]


@dataclass(frozen=True)
class MetricsRow:
    """One row of a metric table; ``m is None`` denotes the exact transform."""

    m: int | None
    beta: float | str | None
    mse: float | None
    coding_gain_db: float
    efficiency_pct: float
    coding_gain_biorthogonal_db: float | None = None


def _cosine(n):
    C = exact_matrix(TransformKind.COSINE, n).entries.real
    B = dyadic_matrix(TransformKind.COSINE, n, 0)
    return C, B


def dct_fixed_beta_metrics(m: int, beta: float, n: int = 8, rho: float = 0.95) -> MetricsRow:
    """Metrics of the scalar-corrected DCT approximation ``beta * C_n^(m)``."""
    R = MarkovSource(n, rho).covariance()
    C = exact_matrix(TransformKind.COSINE, n).entries.real
    A = dyadic_matrix(TransformKind.COSINE, n, m).values.real
    K = beta * A
    return MetricsRow(
        m,
        float(beta),
        transform_mse(C, K, R),
        scaled_coding_gain(K, R),
        transform_efficiency(K, R),
        coding_gain(K, inverse(K), R),
    )


def dct_scalar_metrics(m: int, n: int = 8, rho: float = 0.95) -> MetricsRow:
    """Scalar-corrected row with ``beta`` chosen to minimise the source-weighted error."""
    beta = optimal_beta_markov(TransformKind.COSINE, n, m, rho).beta
    return dct_fixed_beta_metrics(m, beta, n, rho)


def dct_polar_metrics(m: int, n: int = 8, rho: float = 0.95) -> MetricsRow:
    """Orthogonalized row, forward ``S^-1 C_n^(m)`` with inverse its transpose."""
    R = MarkovSource(n, rho).covariance()
    C = exact_matrix(TransformKind.COSINE, n).entries.real
    A = dyadic_matrix(TransformKind.COSINE, n, m).values.real
    U = hermitian_inverse_sqrt(gram(A)).entries.real @ A
    cg = coding_gain(U, U.T, R)
    return MetricsRow(m, "polar", transform_mse(C, U, R), cg, transform_efficiency(U, R), cg)


def dct_exact_metrics(n: int = 8, rho: float = 0.95) -> MetricsRow:
    R = MarkovSource(n, rho).covariance()
    C = exact_matrix(TransformKind.COSINE, n).entries.real
    cg = coding_gain(C, C.T, R)
    return MetricsRow(None, 1 / math.sqrt(n / 2), None, cg, transform_efficiency(C, R), cg)
