"""Invertible pipelines built on a dyadic approximation ``A = K_n^(m)``.

Two corrections are provided:

* scalar: forward ``beta A``, inverse ``(1/beta) A^H D^-1`` with ``D = A A^H``;
* polar: forward ``S^-1 A`` with ``S^-1 = D^(-1/2)``, which is unitary, and
  inverse equal to its conjugate transpose.

The error measures compare the Hermitian polar factor ``S`` of ``A`` with the
ideal ``eta I`` (``eta A`` would equal ``eta^2 I`` times a unitary if no
rounding took place).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .dyadic import dyadic_matrix
from .kernels import TransformKind, exact_matrix
from .matops import (
    frobenius_norm,
    gram,
    hermitian_inverse_sqrt,
    inverse,
    polar_decompose,
)
from .scalaropt import optimal_beta

__all__ = [
    "Mode",
    "ApproxPair",
    "ErrorReport",
    "build_scalar_pair",
    "build_polar_pair",
    "build_pair",
    "closeness_comparison",
    "error_analysis",
    "projection_residual",
    "unitarity_defect",
]


class Mode(enum.Enum):
    SCALAR_BETA = "beta"
    POLAR_ORTHO = "polar"

    @classmethod
    def parse(cls, value: "str | Mode") -> "Mode":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown mode {value!r}") from None


@dataclass(frozen=True, eq=False)
class ApproxPair:
    """Forward/inverse operators for one ``(kind, n, m)`` approximation.

    ``beta`` is set in scalar mode, ``s_inv`` in polar mode; ``d_inv`` is kept
    in both since the polar correction is derived from it.
    """

    kind: TransformKind
    n: int
    m: int
    mode: Mode
    forward: np.ndarray
    inverse: np.ndarray
    beta: float | None = None
    s_inv: np.ndarray | None = None
    d_inv: np.ndarray | None = None

    def __post_init__(self):
        for a in (self.forward, self.inverse, self.s_inv, self.d_inv):
            if a is not None:
                a.setflags(write=False)

    @property
    def correction(self):
        return self.beta if self.mode is Mode.SCALAR_BETA else self.s_inv

    def apply(self, v) -> np.ndarray:
        return self.forward @ np.asarray(v)

    def reconstruct(self, w) -> np.ndarray:
        return self.inverse @ np.asarray(w)

    def reconstruction_error(self) -> float:
        """``||inverse @ forward - I||_F``."""
        return frobenius_norm(self.inverse @ self.forward - np.eye(self.n))


def _approx(kind, n, m) -> tuple[TransformKind, np.ndarray]:
    kind = TransformKind.parse(kind)
    return kind, dyadic_matrix(kind, n, m).values


def build_scalar_pair(kind, n: int, m: int, *, unit_beta: bool = False) -> ApproxPair:
    """Scalar-corrected pair.

    Parameters
    ----------
    kind, n, m
        Transform, blocklength and dyadic order.
    unit_beta : bool, optional
        Use ``beta = 1``, i.e. accept spectral components scaled by ``eta``.
    """
    kind, A = _approx(kind, n, m)
    beta = 1.0 if unit_beta else optimal_beta(kind, n, m).beta
    D_inv = inverse(gram(A))
    D_inv = (D_inv + D_inv.conj().T) / 2
    fwd = beta * A
    inv = (A.conj().T @ D_inv) / beta
    return ApproxPair(kind, int(n), int(m), Mode.SCALAR_BETA, fwd, inv, beta=beta, d_inv=D_inv)


def build_polar_pair(kind, n: int, m: int) -> ApproxPair:
    """Orthogonalized pair with forward ``S^-1 A`` (unitary)."""
    kind, A = _approx(kind, n, m)
    D = gram(A)
    S_inv = hermitian_inverse_sqrt(D).entries
    fwd = S_inv @ A
    D_inv = S_inv @ S_inv
    return ApproxPair(kind, int(n), int(m), Mode.POLAR_ORTHO, fwd, fwd.conj().T.copy(), s_inv=S_inv, d_inv=D_inv)


def build_pair(kind, n: int, m: int, mode: "Mode | str" = Mode.SCALAR_BETA) -> ApproxPair:
    mode = Mode.parse(mode)
    if mode is Mode.SCALAR_BETA:
        return build_scalar_pair(kind, n, m)
    return build_polar_pair(kind, n, m)


def closeness_comparison(kind, n: int, m: int) -> tuple[float, float]:
    """Frobenius distances ``(||K - S^-1 A||, ||K - beta A||)`` to the exact transform."""
    kind = TransformKind.parse(kind)
    K = exact_matrix(kind, n).entries
    d_polar = frobenius_norm(K - build_polar_pair(kind, n, m).forward)
    d_beta = frobenius_norm(K - build_scalar_pair(kind, n, m).forward)
    return d_polar, d_beta


@dataclass(frozen=True)
class ErrorReport:
    kind: TransformKind
    n: int
    m: int
    epsilon: float
    epsilon1: float
    epsilon_prime: float

    @property
    def epsilon1_bound(self) -> float:
        """Worst-case rounding bound ``2^-(m+1)``, times sqrt(2) for real kinds."""
        c = 1.0 if self.kind is TransformKind.FOURIER else math.sqrt(2)
        return c / 2 ** (self.m + 1)


def error_analysis(kind, n: int, m: int) -> ErrorReport:
    """Perturbation measures of ``A = eta K + E1`` and of its polar factor ``S``.

    ``epsilon1 = ||E1|| / ||eta K||``, ``epsilon = ||S/eta - I|| / ||I||`` and
    ``epsilon_prime = ||eta S^-1 - I|| / ||I||``, all in Frobenius norm.
    """
    kind = TransformKind.parse(kind)
    n = int(n)
    eta = kind.eta(n)
    M = dyadic_matrix(kind, n, m)
    K = exact_matrix(kind, n).entries
    E1 = M.values - eta * K
    eps1 = frobenius_norm(E1) / (eta * math.sqrt(n))
    S, _ = polar_decompose(M.values)
    S_inv = hermitian_inverse_sqrt(gram(M.values)).entries
    I = np.eye(n)
    eps = frobenius_norm(S.entries / eta - I) / math.sqrt(n)
    eps_p = frobenius_norm(eta * S_inv - I) / math.sqrt(n)
    return ErrorReport(kind, n, int(m), eps, eps1, eps_p)


def projection_residual(kind, n: int, m: int) -> float:
    """``||A^H (A A^H)^-1 A - I||_F``, zero whenever ``A`` is invertible."""
    _, A = _approx(kind, n, m)
    P = A.conj().T @ inverse(gram(A)) @ A
    return frobenius_norm(P - np.eye(A.shape[0]))


def unitarity_defect(kind, n: int, m: int) -> float:
    """``||A A^H - eta^2 I||_F / eta^2``; tends to zero as ``m`` grows."""
    kind, A = _approx(kind, n, m)
    e2 = kind.eta(n) ** 2
    return frobenius_norm(gram(A).entries - e2 * np.eye(A.shape[0])) / e2
