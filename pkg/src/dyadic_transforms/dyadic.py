"""Nearest-integer and m-th order dyadic rounding.

``[x]_m = [2^m x] / 2^m`` where ``[.]`` rounds half-magnitudes away from
zero.  Complex numbers are rounded componentwise
and matrices entrywise, so an m-th order dyadic matrix is an integer (or
Gaussian-integer) matrix with an implicit ``2^-m`` scale.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .kernels import TransformKind, apply_forward, scaled_matrix

__all__ = [
    "round_nearest",
    "round_array",
    "DyadicScalar",
    "DyadicMatrix",
    "dyadic_round",
    "dyadic_round_complex",
    "dyadic_matrix",
    "apply_dyadic_forward",
]


def round_nearest(x: float) -> int:
    """``sgn(x) * floor(|x| + 1/2)`` evaluated in double precision.

    Half-magnitudes go away from zero.  The sum ``|x| + 1/2`` is formed in
    floating point, so values one ulp below a half (several kernel entries
    land there) round up as well; the tables of optimal corrections depend
    on this.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot round non-finite value {x!r}")
    r = math.floor(abs(x) + 0.5)
    return -r if x < 0 else r


def round_array(x) -> np.ndarray:
    """Vectorized :func:`round_nearest`, returning int64."""
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError("cannot round non-finite values")
    return (np.sign(x) * np.floor(np.abs(x) + 0.5)).astype(np.int64)


@dataclass(frozen=True)
class DyadicScalar:
    """The Gaussian dyadic rational ``(real + j*imag) / 2**order``."""

    real: int
    imag: int = 0
    order: int = 0

    @property
    def numerator(self) -> complex:
        return complex(self.real, self.imag)

    @property
    def value(self) -> complex:
        return complex(self.real, self.imag) / 2**self.order

    def as_fractions(self) -> tuple[Fraction, Fraction]:
        d = 2**self.order
        return Fraction(self.real, d), Fraction(self.imag, d)

    def __complex__(self) -> complex:
        return self.value


def _check_order(m: int) -> None:
    if not isinstance(m, (int, np.integer)) or isinstance(m, bool) or m < 0:
        raise ValueError(f"invalid dyadic order {m!r}")


def dyadic_round(x: float, m: int) -> DyadicScalar:
    _check_order(m)
    return DyadicScalar(round_nearest(2**m * float(x)), 0, int(m))


def dyadic_round_complex(z: complex, m: int) -> DyadicScalar:
    _check_order(m)
    z = complex(z)
    return DyadicScalar(round_nearest(2**m * z.real), round_nearest(2**m * z.imag), int(m))


@dataclass(frozen=True, eq=False)
class DyadicMatrix:
    """Integer numerators of ``K_n^(m)``; the represented matrix is ``(re + j*im) / 2**m``."""

    kind: TransformKind | None
    n: int
    m: int
    re: np.ndarray
    im: np.ndarray

    def __post_init__(self):
        for a in (self.re, self.im):
            if a.shape != (self.n, self.n):
                raise ValueError(f"numerator grid must be {self.n}x{self.n}, got {a.shape}")
            a.setflags(write=False)

    @classmethod
    def from_integers(cls, numerators, m: int = 0, kind: TransformKind | None = None) -> "DyadicMatrix":
        a = np.asarray(numerators)
        re = np.asarray(np.real(a)).astype(np.int64)
        im = np.asarray(np.imag(a)).astype(np.int64)
        if not (np.array_equal(re, np.real(a)) and np.array_equal(im, np.imag(a))):
            raise ValueError("numerators must be Gaussian integers")
        return cls(kind, a.shape[0], int(m), re, im)

    @property
    def numerators(self) -> np.ndarray:
        """Gaussian-integer grid as a complex array (or int array for real grids)."""
        if not self.im.any():
            return self.re.copy()
        return self.re + 1j * self.im

    @property
    def values(self) -> np.ndarray:
        return (self.re + 1j * self.im) / 2**self.m

    @property
    def is_real(self) -> bool:
        return not self.im.any()

    def to_exact(self):
        """The represented matrix over the Gaussian rationals (sympy ``DomainMatrix``)."""
        from .exact import from_numerators

        return from_numerators(self.re, self.im, self.m)

    def __eq__(self, other):
        if not isinstance(other, DyadicMatrix):
            return NotImplemented
        # compare represented values, so 2/2 equals 1/1
        if self.n != other.n:
            return False
        top = max(self.m, other.m)
        a = (self.re << (top - self.m), self.im << (top - self.m))
        b = (other.re << (top - other.m), other.im << (top - other.m))
        return np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])

    __hash__ = None


def dyadic_matrix(kind: "TransformKind | str", n: int, m: int) -> DyadicMatrix:
    """``K_n^(m) = [eta * K_n]_m`` for the chosen transform."""
    kind = TransformKind.parse(kind)
    _check_order(m)
    X = scaled_matrix(kind, n) * 2**m
    return DyadicMatrix(kind, int(n), int(m), round_array(X.real), round_array(X.imag))


def apply_dyadic_forward(M: DyadicMatrix, v) -> np.ndarray:
    """``K_n^(m) v`` as an integer product followed by a single ``2^-m`` scale."""
    v = np.asarray(v)
    if v.shape[0] != M.n:
        raise ValueError(f"shape mismatch: matrix {M.n}x{M.n}, vector {v.shape}")
    # separate re/im products keep integer inputs exact until the final scale
    acc = apply_forward(M.re, v) + 1j * apply_forward(M.im, v)
    return acc / 2**M.m
