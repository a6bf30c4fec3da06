"""Fast algorithms and closed-form inverses for short approximate transforms.

All matrices are held exactly over the Gaussian rationals, so the identities
below are checked with ``==`` rather than a tolerance.  Grids are transcribed
with ``+`` for 1, ``-`` for -1 and ``.`` for 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from sympy.polys.matrices import DomainMatrix

from . import exact
from .dyadic import DyadicMatrix, dyadic_matrix, round_array
from .kernels import TransformKind

__all__ = [
    "SparseFactorization",
    "OpCount",
    "UnsupportedCoefficientError",
    "F8_M1_NUMERATORS",
    "F8_M1_D_INV_TIMES_16",
    "f8_m1_factors",
    "c8_m0_factors",
    "apply_factored",
    "count_ops",
    "f8_squarewave_inverse",
    "h8_squarewave_inverse",
    "h16_m0_matrix",
    "h16_reference_generation",
    "hartley_m0_fast",
    "c8_adjustments",
]


class UnsupportedCoefficientError(ValueError):
    """A factor holds a coefficient that is not 0, a unit, or a power of two times a unit."""


def _grid(rows: list[str]) -> list[list[int]]:
    sym = {"+": 1, "-": -1, ".": 0}
    return [[sym[c] for c in r.split()] for r in rows]


def _int_matrix(rows) -> DomainMatrix:
    return exact.from_entries(rows)


@dataclass(frozen=True, eq=False)
class SparseFactorization:
    """Product ``factors[0] @ factors[1] @ ... @ factors[-1]``, applied right to left.

    ``constant`` is the exact scalar ``c`` with ``product == c * target``.
    """

    label: str
    factors: tuple[DomainMatrix, ...]
    names: tuple[str, ...]
    target: DomainMatrix | None = None
    constant: Fraction | None = None
    metadata: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.factors[0].shape[0]

    def product(self) -> DomainMatrix:
        out = self.factors[-1]
        for f in reversed(self.factors[:-1]):
            out = f * out
        return out.to_dense()

    def dense(self) -> list[np.ndarray]:
        return [exact.to_complex(f) for f in self.factors]


def _resolve_constant(product: DomainMatrix, target: DomainMatrix) -> Fraction:
    for c in (Fraction(1), Fraction(2), Fraction(1, 2)):
        if exact.is_equal(product, exact.scale(target, c)):
            return c
    raise ArithmeticError("factor product is not a fixed multiple of the target")


def _factorization(label, named, target) -> SparseFactorization:
    names = tuple(k for k, _ in named)
    factors = tuple(v for _, v in named)
    probe = SparseFactorization(label, factors, names)
    c = _resolve_constant(probe.product(), target)
    return SparseFactorization(label, factors, names, target, c, {"constant": str(c)})


# numerators of 2 * F_8^(1) as complex literals
_F8_ROWS = [
    "2 2 2 2 2 2 2 2",
    "2 1-1j -2j -1-1j -2 -1+1j 2j 1+1j",
    "2 -2j -2 2j 2 -2j -2 2j",
    "2 -1-1j 2j 1-1j -2 1+1j -2j -1+1j",
    "2 -2 2 -2 2 -2 2 -2",
    "2 -1+1j -2j 1+1j -2 1-1j 2j -1-1j",
    "2 2j -2 -2j 2 2j -2 -2j",
    "2 1+1j 2j -1+1j -2 -1-1j -2j 1-1j",
]
F8_M1_NUMERATORS = np.array([[complex(c) for c in r.split()] for r in _F8_ROWS])

F8_M1_D_INV_TIMES_16 = np.array(
    [
        [2, 0, 0, 0, 0, 0, 0, 0],
        [0, 3, 0, 0, 0, -1, 0, 0],
        [0, 0, 2, 0, 0, 0, 0, 0],
        [0, 0, 0, 3, 0, 0, 0, -1],
        [0, 0, 0, 0, 2, 0, 0, 0],
        [0, -1, 0, 0, 0, 3, 0, 0],
        [0, 0, 0, 0, 0, 0, 2, 0],
        [0, 0, 0, -1, 0, 0, 0, 3],
    ]
)

_A1 = [
    "+ . . . + . . .",
    ". + . . . + . .",
    ". . + . . . + .",
    ". . . + . . . +",
    "+ . . . - . . .",
    ". + . . . - . .",
    ". . + . . . - .",
    ". . . + . . . -",
]
_A2 = [
    "+ . + . . . . .",
    ". + . + . . . .",
    "+ . - . . . . .",
    ". + . - . . . .",
    ". . . . + . . .",
    ". . . . . + . +",
    ". . . . . . + .",
    ". . . . . + . -",
]
_A3 = [
    "+ . . . . . . .",
    ". + . . . . . .",
    ". . + . . . . .",
    ". . . + . . . .",
    ". . . . + . + .",
    ". . . . . + . +",
    ". . . . + . - .",
    ". . . . . + . -",
]
_A4 = [
    "+ + . . . . . .",
    "+ - . . . . . .",
    ". . + + . . . .",
    ". . + - . . . .",
    ". . . . + + . .",
    ". . . . + - . .",
    ". . . . . . + +",
    ". . . . . . + -",
]
_P8 = [
    "+ . . . . . . .",
    ". . . . + . . .",
    ". . + . . . . .",
    ". . . . . . + .",
    ". + . . . . . .",
    ". . . . . + . .",
    ". . . + . . . .",
    ". . . . . . . +",
]
_T8 = [1, 1, 1, (0, -1), 1, (0, Fraction(-1, 2)), (0, -1), Fraction(1, 2)]


def _exact_diag(values) -> DomainMatrix:
    n = len(values)
    return exact.from_entries([[values[a] if a == b else 0 for b in range(n)] for a in range(n)])


def f8_m1_factors() -> SparseFactorization:
    """Six sparse factors ``P A4 A3 T A2 A1`` of the first-order 8-point DFT approximation."""
    target = exact.from_numerators(F8_M1_NUMERATORS.real.astype(int), F8_M1_NUMERATORS.imag.astype(int), 1)
    named = [
        ("P", _int_matrix(_grid(_P8))),
        ("A4", _int_matrix(_grid(_A4))),
        ("A3", _int_matrix(_grid(_A3))),
        ("T", _exact_diag(_T8)),
        ("A2", _int_matrix(_grid(_A2))),
        ("A1", _int_matrix(_grid(_A1))),
    ]
    return _factorization("F8^(1)", named, target)


# C_8^(0) = P * E * B: butterfly, then direct evaluation of even and odd halves
_C8_BUTTERFLY = [
    "+ . . . . . . +",
    ". + . . . . + .",
    ". . + . . + . .",
    ". . . + + . . .",
    "+ . . . . . . -",
    ". + . . . . - .",
    ". . + . . - . .",
    ". . . + - . . .",
]
# inputs (s0..s3, d0..d3); outputs in the order of rows 0, 2, 4, 6, 1, 3, 5, 7
_C8_HALVES = [
    "+ + + + . . . .",
    "+ . . - . . . .",
    "+ - - + . . . .",
    ". - + . . . . .",
    ". . . . + + + .",
    ". . . . + . - -",
    ". . . . + - . +",
    ". . . . . - + -",
]
_C8_PERM = [
    "+ . . . . . . .",
    ". . . . + . . .",
    ". + . . . . . .",
    ". . . . . + . .",
    ". . + . . . . .",
    ". . . . . . + .",
    ". . . + . . . .",
    ". . . . . . . +",
]


def c8_m0_factors() -> SparseFactorization:
    """Butterfly plus direct half evaluation of the zeroth-order 8-point DCT approximation."""
    target = dyadic_matrix(TransformKind.COSINE, 8, 0).to_exact()
    named = [
        ("P", _int_matrix(_grid(_C8_PERM))),
        ("E", _int_matrix(_grid(_C8_HALVES))),
        ("B", _int_matrix(_grid(_C8_BUTTERFLY))),
    ]
    return _factorization("C8^(0)", named, target)


def apply_factored(F: SparseFactorization, v) -> np.ndarray:
    """Apply the factors right to left.

    Dyadic-rational inputs give exact results since every factor entry is a
    unit times a power of two.
    """
    v = np.asarray(v, dtype=complex)
    if v.shape[0] != F.n:
        raise ValueError(f"shape mismatch: factorization of size {F.n}, vector {v.shape}")
    for M in reversed(F.dense()):
        v = M @ v
    return v


@dataclass(frozen=True)
class OpCount:
    additions: int = 0
    shifts: int = 0
    multiplications: int = 0

    def __add__(self, other: "OpCount") -> "OpCount":
        return OpCount(
            self.additions + other.additions,
            self.shifts + other.shifts,
            self.multiplications + other.multiplications,
        )


def _classify(v) -> str:
    """``free`` for units, ``shift`` for units times ``2^k`` (k != 0), else ``mult``."""
    re, im = Fraction(int(v.x.numerator), int(v.x.denominator)), Fraction(int(v.y.numerator), int(v.y.denominator))
    if re != 0 and im != 0:
        return "mult"
    mag = abs(re or im)
    num, den = mag.numerator, mag.denominator
    if num == 1 and den == 1:
        return "free"
    if (num == 1 and den & (den - 1) == 0) or (den == 1 and num & (num - 1) == 0):
        return "shift"
    return "mult"


def _count_matrix(M: DomainMatrix, strict: bool) -> OpCount:
    adds = shifts = mults = 0
    zero = M.domain.zero
    for row in M.to_list():
        nz = [v for v in row if v != zero]
        if len(nz) >= 2:
            adds += len(nz) - 1
        for v in nz:
            kind = _classify(v)
            if kind == "shift":
                shifts += 1
            elif kind == "mult":
                if strict:
                    raise UnsupportedCoefficientError(f"coefficient {v} needs a multiplier")
                mults += 1
    return OpCount(adds, shifts, mults)


def count_ops(F, *, strict: bool = True) -> OpCount:
    """Operation count of a factorization (or a single exact matrix).

    A row with ``z`` nonzeros costs ``z - 1`` additions; a coefficient of
    magnitude ``2^k`` with ``k != 0`` costs one shift; units and permutations
    are free.  With ``strict`` any other coefficient raises, otherwise it is
    counted as a multiplication.
    """
    factors = F.factors if isinstance(F, SparseFactorization) else (F,)
    total = OpCount()
    for M in factors:
        total = total + _count_matrix(M, strict)
    return total


def f8_squarewave_inverse() -> DomainMatrix:
    """``(1/8) (F_8^(0))^H``, the exact inverse of ``F_8^(1)``."""
    F0 = dyadic_matrix(TransformKind.FOURIER, 8, 0).to_exact()
    return exact.scale(exact.conj_transpose(F0), Fraction(1, 8))


def h8_squarewave_inverse() -> DomainMatrix:
    """``(1/4) H_8^(0)``, the exact inverse of ``H_8^(1)``."""
    H0 = dyadic_matrix(TransformKind.HARTLEY, 8, 0).to_exact()
    return exact.scale(H0, Fraction(1, 4))


_H16 = [
    "+ + + + + + + + + + + + + + + +",
    "+ + + + + + . - - - - - - - . +",
    "+ + + . - - - . + + + . - - - .",
    "+ + . - - + + + - - . + + - - -",
    "+ + - - + + - - + + - - + + - -",
    "+ + - + + - . + - - + - - + . -",
    "+ . - + - . + - + . - + - . + -",
    "+ - . + - + - + - + . - + - + -",
    "+ - + - + - + - + - + - + - + -",
    "+ - + - + - . + - + - + - + . -",
    "+ - + . - + - . + - + . - + - .",
    "+ - . + - - + - - + . - + + - +",
    "+ - - + + - - + + - - + + - - +",
    "+ - - - + + . - - + + + - - . +",
    "+ . - - - . + + + . - - - . + +",
    "+ + . - - - - - - - . + + + + +",
]


def h16_m0_matrix() -> DyadicMatrix:
    """Hard-coded zeroth-order 16-point Hartley approximation."""
    return DyadicMatrix.from_integers(np.array(_grid(_H16)), 0, TransformKind.HARTLEY)


def h16_reference_generation() -> DyadicMatrix:
    """``[cas(2 pi i k / 16)]``, rounding the unnormalized kernel.

    The grid of :func:`h16_m0_matrix` follows this rule, which differs from
    ``dyadic_matrix(HARTLEY, 16, 0) = [cas(.) / sqrt(2)]`` in 32 entries.
    """
    i = np.arange(16)[:, None]
    k = np.arange(16)[None, :]
    a = (2 * np.pi / 16) * i * k
    return DyadicMatrix(TransformKind.HARTLEY, 16, 0, round_array(np.cos(a) + np.sin(a)), np.zeros((16, 16), np.int64))


def hartley_m0_fast(x, top: DyadicMatrix | None = None) -> tuple[np.ndarray, dict[int, np.ndarray]]:
    """Decimation-in-time evaluation of a zeroth-order Hartley approximation.

    Even-index columns of ``H_{2N}^(0)`` repeat ``H_N^(0)``, so the even
    samples go through the half-length transform recursively and only the
    odd-sample block is applied directly.

    Parameters
    ----------
    x : array_like
        Input of power-of-two length.
    top : DyadicMatrix, optional
        Matrix to realise at the outermost level (defaults to the generated
        one); inner levels always use the generated approximations.

    Returns
    -------
    y : ndarray
        Transform of ``x``.
    intermediates : dict
        Output of each embedded shorter transform keyed by its length.
    """
    x = np.asarray(x)
    n = x.shape[0]
    if n < 1 or n & (n - 1):
        raise ValueError("length must be a power of two")
    inter: dict[int, np.ndarray] = {}

    def rec(v, M):
        N = v.shape[0]
        if N == 1:
            return v.copy()
        if M is None:
            M = dyadic_matrix(TransformKind.HARTLEY, N, 0)
        cols = M.re
        half = N // 2
        sub = dyadic_matrix(TransformKind.HARTLEY, half, 0).re
        if not np.array_equal(cols[:, 0::2], np.vstack([sub, sub])):
            raise ArithmeticError(f"even columns of the {N}-point matrix do not embed the {half}-point one")
        u = rec(v[0::2], None)
        inter[half] = u
        return np.concatenate([u, u]) + cols[:, 1::2] @ v[1::2]

    y = rec(x, top)
    return y, inter


def c8_adjustments() -> tuple[np.ndarray, np.ndarray]:
    """Diagonals of ``S^-1`` and ``D^-1`` for the zeroth-order 8-point DCT approximation."""
    d = np.array([8, 6, 4, 6, 8, 6, 4, 6], dtype=float)
    return 1 / np.sqrt(d), 1 / d
