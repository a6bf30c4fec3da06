"""Scalar correction factors.

``alpha`` rescales the cosine before dyadic rounding so that the rounded
function tracks it with least squared error; ``beta`` rescales a whole
dyadic matrix so that ``beta * K^(m)`` is closest to the exact transform.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize
from scipy.linalg import toeplitz

from .dyadic import dyadic_matrix
from .kernels import TransformKind, exact_matrix

__all__ = [
    "AlphaSolution",
    "BetaSolution",
    "alpha_residual",
    "optimal_alpha",
    "alpha_closed_form_m0",
    "cosine_mse",
    "pi_partial",
    "frobenius_beta",
    "optimal_beta",
    "optimal_beta_markov",
]

_ALPHA_BRACKET = (1.0, 1.2)


@dataclass(frozen=True)
class AlphaSolution:
    m: int
    alpha: float
    residual: float


@dataclass(frozen=True)
class BetaSolution:
    kind: TransformKind
    n: int
    m: int
    beta: float


def _odd(m: int) -> np.ndarray:
    return 2.0 * np.arange(2**m) + 1.0


def alpha_residual(alpha: float, m: int) -> float:
    """``(pi/2) alpha^2 - 4^-m * sum_k sqrt(4^(m+1) alpha^2 - (2k+1)^2)``."""
    q = _odd(m)
    return 0.5 * math.pi * alpha**2 - np.sum(np.sqrt(4.0 ** (m + 1) * alpha**2 - q**2)) / 4.0**m


def _alpha_residual_prime(alpha: float, m: int) -> float:
    q = _odd(m)
    return math.pi * alpha - np.sum(4.0 * alpha / np.sqrt(4.0 ** (m + 1) * alpha**2 - q**2))


def alpha_closed_form_m0() -> float:
    return math.sqrt(2) / math.pi * math.sqrt(4 + math.sqrt(16 - math.pi**2))


def optimal_alpha(m: int) -> AlphaSolution:
    """Optimal cosine pre-scaling for m-th order dyadic rounding.

    Parameters
    ----------
    m : int
        Dyadic order, ``m >= 0``.

    Returns
    -------
    AlphaSolution
        Root of the stationarity equation on ``[1, 1.2]`` found by bisection
        to 1e-12 and refined with a single Newton step.

    Raises
    ------
    ArithmeticError
        If the residual does not change sign on the bracket.
    """
    if m < 0:
        raise ValueError(f"invalid dyadic order {m!r}")
    lo, hi = _ALPHA_BRACKET
    g = lambda a: alpha_residual(a, m)  # noqa: E731
    if g(lo) * g(hi) > 0:
        raise ArithmeticError(f"alpha root not bracketed for m={m}")
    a = optimize.bisect(g, lo, hi, xtol=1e-12)
    d = _alpha_residual_prime(a, m)
    if d != 0:
        polished = a - g(a) / d
        if lo <= polished <= hi and abs(g(polished)) <= abs(g(a)):
            a = polished
    return AlphaSolution(m, float(a), float(g(a)))


def cosine_mse(m: int) -> float:
    """Closed-form squared error of ``[cos t]_m`` against ``cos t``.

    The value is the plain integral of ``(cos t - [cos t]_m)^2`` over a
    quarter period ``[0, pi/2]``, equivalently a quarter of the integral over
    a full period.
    """
    if m < 0:
        raise ValueError(f"invalid dyadic order {m!r}")
    q = _odd(m)
    s1 = np.sum(np.sqrt(4.0 ** (m + 1) - q**2))
    s2 = np.sum(q * np.arccos(q / 2.0 ** (m + 1)))
    return float(math.pi / 4 - s1 / 4.0**m + s2 / 4.0**m)


def pi_partial(m: int) -> float:
    """Partial sum ``(2/4^m) sum_k sqrt(4^(m+1) - (2k+1)^2)``, which tends to pi."""
    if m < 0:
        raise ValueError(f"invalid dyadic order {m!r}")
    q = _odd(m)
    return float(2.0 * np.sum(np.sqrt(4.0 ** (m + 1) - q**2)) / 4.0**m)


def frobenius_beta(K: np.ndarray, A: np.ndarray) -> float:
    """Least-squares scale ``Re<K, A>_F / ||A||_F^2`` minimising ``||K - beta A||_F``."""
    K = np.asarray(K)
    A = np.asarray(A)
    den = float(np.vdot(A, A).real)
    if den == 0.0:
        raise ZeroDivisionError("approximation matrix is zero")
    return float(np.vdot(A, K).real) / den


def optimal_beta(kind: "TransformKind | str", n: int, m: int) -> BetaSolution:
    """Frobenius-optimal scalar correction for ``K_n^(m)``."""
    kind = TransformKind.parse(kind)
    K = exact_matrix(kind, n).entries
    A = dyadic_matrix(kind, n, m).values
    return BetaSolution(kind, int(n), int(m), frobenius_beta(K, A))


def optimal_beta_markov(kind: "TransformKind | str", n: int, m: int, rho: float = 0.95) -> BetaSolution:
    """Scale minimising the Markov-1 transform error ``tr((K - bA) R (K - bA)^H) / n``.

    Reduces to :func:`optimal_beta` when ``rho = 0``.
    """
    if not 0 <= rho < 1:
        raise ValueError(f"correlation coefficient must lie in [0, 1), got {rho!r}")
    kind = TransformKind.parse(kind)
    K = exact_matrix(kind, n).entries
    A = dyadic_matrix(kind, n, m).values
    R = toeplitz(rho ** np.arange(n))
    num = np.trace(K @ R @ A.conj().T).real
    den = np.trace(A @ R @ A.conj().T).real
    if den == 0.0:
        raise ZeroDivisionError("approximation matrix is zero")
    return BetaSolution(kind, int(n), int(m), float(num / den))
