"""Dense complex matrix helpers.

Thin wrappers around LAPACK (through numpy/scipy) with the conventions used
throughout the package: Gram matrices are ``K K^H``, square roots are taken
through the Hermitian eigendecomposition, and the polar factor is left-sided,
``A = H U``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy import linalg

__all__ = [
    "HermitianFactor",
    "DecompositionError",
    "frobenius_norm",
    "gram",
    "hermitian_power",
    "hermitian_sqrt",
    "hermitian_inverse_sqrt",
    "inverse",
    "condition_number_2",
    "polar_decompose",
]

_SINGULAR_EIG = 1e-12


class DecompositionError(np.linalg.LinAlgError):
    """Raised when a factorization meets a singular or indefinite matrix."""


@dataclass(frozen=True, eq=False)
class HermitianFactor:
    n: int
    entries: np.ndarray

    def __post_init__(self):
        if self.entries.shape != (self.n, self.n):
            raise ValueError("shape does not match dimension")
        self.entries.setflags(write=False)

    @classmethod
    def of(cls, A) -> "HermitianFactor":
        A = np.array(A, dtype=complex)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError(f"Hermitian factor must be square, got {A.shape}")
        return cls(A.shape[0], A)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


def _square(A) -> np.ndarray:
    A = np.asarray(A.entries if isinstance(A, HermitianFactor) else A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    return A


def frobenius_norm(A) -> float:
    return float(np.linalg.norm(np.asarray(A), "fro"))


def gram(K) -> HermitianFactor:
    """``K K^H``, symmetrised to remove rounding asymmetry."""
    K = _square(K)
    G = K @ K.conj().T
    return HermitianFactor.of((G + G.conj().T) / 2)


def hermitian_power(D, p: float) -> HermitianFactor:
    """``D^p`` for Hermitian positive definite ``D`` via ``eigh``.

    Eigenvalues below 1e-12 are treated as singular and raise
    :class:`DecompositionError` rather than being clipped.
    """
    D = _square(D)
    w, Q = np.linalg.eigh(D)
    if w[0] <= _SINGULAR_EIG:
        raise DecompositionError(f"matrix is singular or indefinite (smallest eigenvalue {w[0]:.3e})")
    X = (Q * w**p) @ Q.conj().T
    return HermitianFactor.of((X + X.conj().T) / 2)


def hermitian_sqrt(D) -> HermitianFactor:
    return hermitian_power(D, 0.5)


def hermitian_inverse_sqrt(D) -> HermitianFactor:
    """``S^-1 = D^(-1/2)``."""
    return hermitian_power(D, -0.5)


def inverse(A) -> np.ndarray:
    """Matrix inverse through LU with partial pivoting."""
    A = _square(A)
    try:
        with warnings.catch_warnings():
            # singularity is reported below as DecompositionError
            warnings.simplefilter("ignore", linalg.LinAlgWarning)
            lu, piv = linalg.lu_factor(A, check_finite=True)
    except (ValueError, linalg.LinAlgError) as exc:
        raise DecompositionError(str(exc)) from exc
    if np.any(np.diag(lu) == 0):
        raise DecompositionError("matrix is singular")
    return linalg.lu_solve((lu, piv), np.eye(A.shape[0], dtype=lu.dtype))


def condition_number_2(A) -> float:
    """``sigma_max / sigma_min``; ``inf`` for a singular matrix."""
    s = np.linalg.svd(_square(A), compute_uv=False)
    if s[-1] == 0 or s[-1] <= s[0] * np.finfo(float).eps:
        return float("inf")
    return float(s[0] / s[-1])


def polar_decompose(A) -> tuple[HermitianFactor, np.ndarray]:
    """Left polar decomposition ``A = H U``.

    Returns
    -------
    hermitian : HermitianFactor
        ``(A A^H)^(1/2)``, positive definite.
    unitary : ndarray
        ``H^-1 A``, the unitary matrix nearest to ``A`` in Frobenius norm.
    """
    A = _square(A)
    D = gram(A)
    H = hermitian_sqrt(D)
    U = hermitian_inverse_sqrt(D).entries @ A
    return H, U
