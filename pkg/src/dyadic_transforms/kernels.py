"""Exact unitary sinusoidal transforms.

Rows of every matrix index the transform (frequency) coefficient and columns
index the input sample, so a forward transform is a plain matrix-vector
product ``K @ v``.

The cosine matrix is the unitary DCT-II::

    C[i, k] = sqrt(2/n) * c_i * cos(pi * (2k + 1) * i / (2n)),   c_0 = 1/sqrt(2)

Angles are evaluated as ``step * i * k`` with the angular step computed
first.  Several kernel values sit exactly on rounding ties (cos(pi/3) = 1/2
for n = 6, 12, 24), so the last bit of the angle decides which way the
dyadic rounding goes; the evaluation order is therefore fixed here and every
consumer goes through :func:`scaled_matrix`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "TransformKind",
    "ExactTransform",
    "kernel_value",
    "scaled_matrix",
    "exact_matrix",
    "apply_forward",
    "apply_inverse_exact",
]


class TransformKind(enum.Enum):
    FOURIER = "fourier"
    HARTLEY = "hartley"
    COSINE = "cosine"

    @classmethod
    def parse(cls, value: "str | TransformKind") -> "TransformKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown transform kind {value!r}") from None

    def eta(self, n: int) -> float:
        """Normalizing factor: sqrt(n) for Fourier, sqrt(n/2) otherwise."""
        _check_n(n)
        return math.sqrt(n) if self is TransformKind.FOURIER else math.sqrt(n / 2)

    @property
    def is_real(self) -> bool:
        return self is not TransformKind.FOURIER


def _check_n(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise ValueError(f"invalid blocklength {n!r}")


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@lru_cache(maxsize=256)
def _scaled(kind: TransformKind, n: int) -> np.ndarray:
    i = np.arange(n)[:, None]
    k = np.arange(n)[None, :]
    if kind is TransformKind.FOURIER:
        out = np.exp(-1j * ((2 * np.pi / n) * i * k))
    elif kind is TransformKind.HARTLEY:
        a = (2 * np.pi / n) * i * k
        out = (np.cos(a) + np.sin(a)) / np.sqrt(2) + 0j
    else:
        c = np.where(np.arange(n) == 0, 1 / np.sqrt(2), 1.0)[:, None]
        out = c * np.cos((np.pi / (2 * n)) * (2 * k + 1) * i) + 0j
    return _readonly(out)


def scaled_matrix(kind: "TransformKind | str", n: int) -> np.ndarray:
    """Return ``eta(kind, n) * K_n`` evaluated directly from the kernel.

    This is the matrix that dyadic rounding acts on.  Entries of the result
    have real and imaginary parts of magnitude at most 1.
    """
    kind = TransformKind.parse(kind)
    _check_n(n)
    return _scaled(kind, int(n))


@lru_cache(maxsize=256)
def _exact(kind: TransformKind, n: int) -> np.ndarray:
    out = _scaled(kind, n) / kind.eta(n)
    return _readonly(out)


@dataclass(frozen=True)
class ExactTransform:
    kind: TransformKind
    n: int
    entries: np.ndarray

    @property
    def eta(self) -> float:
        return self.kind.eta(self.n)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


def exact_matrix(kind: "TransformKind | str", n: int) -> ExactTransform:
    """Unitary transform matrix of the given kind and blocklength."""
    kind = TransformKind.parse(kind)
    _check_n(n)
    return ExactTransform(kind, int(n), _exact(kind, int(n)))


def kernel_value(kind: "TransformKind | str", i: int, k: int, n: int) -> complex:
    """Single kernel entry ``K_n[i, k]`` (row ``i`` is the frequency index)."""
    kind = TransformKind.parse(kind)
    _check_n(n)
    if not (0 <= i < n and 0 <= k < n):
        raise IndexError(f"kernel index ({i}, {k}) out of range for n={n}")
    return complex(_exact(kind, int(n))[i, k])


def _as_matrix(T) -> np.ndarray:
    if isinstance(T, ExactTransform):
        return T.entries
    return np.asarray(T)


def apply_forward(T, v) -> np.ndarray:
    """Forward transform ``T @ v``."""
    M = _as_matrix(T)
    v = np.asarray(v)
    if M.ndim != 2 or M.shape[1] != v.shape[0]:
        raise ValueError(f"shape mismatch: matrix {M.shape}, vector {v.shape}")
    return M @ v


def apply_inverse_exact(T, w) -> np.ndarray:
    """Inverse of a unitary transform, ``T^H @ w``."""
    M = _as_matrix(T)
    w = np.asarray(w)
    if M.ndim != 2 or M.shape[0] != w.shape[0]:
        raise ValueError(f"shape mismatch: matrix {M.shape}, vector {w.shape}")
    return M.conj().T @ w
