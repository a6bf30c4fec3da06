"""Exact matrices over the Gaussian rationals ``Q(i)``.

Everything here is a thin layer over sympy's ``DomainMatrix`` with domain
``QQ_I``; results are always returned dense so that ``==`` compares values.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np
from sympy import QQ, Rational
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

__all__ = [
    "gaussian",
    "from_numerators",
    "from_entries",
    "identity",
    "diagonal",
    "conj_transpose",
    "exact_inverse",
    "to_complex",
    "is_equal",
    "scale",
    "to_sympy",
]


def gaussian(re, im=0):
    """Element of ``QQ_I`` from rational-like real and imaginary parts."""
    r = Fraction(re)
    i = Fraction(im)
    return QQ_I(QQ(r.numerator, r.denominator), QQ(i.numerator, i.denominator))


def from_numerators(re, im, m: int) -> DomainMatrix:
    """``(re + j*im) / 2**m`` for integer grids ``re`` and ``im``."""
    re = np.asarray(re)
    im = np.asarray(im)
    n, k = re.shape
    d = 2**m
    rows = [[gaussian(Fraction(int(re[a, b]), d), Fraction(int(im[a, b]), d)) for b in range(k)] for a in range(n)]
    return DomainMatrix(rows, (n, k), QQ_I).to_dense()


def from_entries(rows) -> DomainMatrix:
    """From nested rows whose items are ints, Fractions, or ``(re, im)`` pairs."""
    out = []
    for row in rows:
        cells = []
        for v in row:
            if isinstance(v, tuple):
                cells.append(gaussian(*v))
            elif isinstance(v, complex):
                raise TypeError("pass complex entries as exact (re, im) pairs")
            else:
                cells.append(gaussian(v))
        out.append(cells)
    return DomainMatrix(out, (len(out), len(out[0])), QQ_I).to_dense()


def identity(n: int) -> DomainMatrix:
    return DomainMatrix.eye(n, QQ_I).to_dense()


def diagonal(values) -> DomainMatrix:
    n = len(values)
    rows = [[gaussian(values[a]) if a == b else QQ_I.zero for b in range(n)] for a in range(n)]
    return DomainMatrix(rows, (n, n), QQ_I).to_dense()


def conj_transpose(M: DomainMatrix) -> DomainMatrix:
    n, k = M.shape
    rows = M.to_list()
    # GaussianRational has no conjugate(); rebuild from parts
    out = [[QQ_I(rows[a][b].x, -rows[a][b].y) for a in range(n)] for b in range(k)]
    return DomainMatrix(out, (k, n), QQ_I).to_dense()


def scale(M: DomainMatrix, re, im=0) -> DomainMatrix:
    """``c * M`` for the exact Gaussian rational ``c = re + j*im``."""
    c = gaussian(re, im)
    n, k = M.shape
    rows = [[c * v for v in row] for row in M.to_list()]
    return DomainMatrix(rows, (n, k), QQ_I).to_dense()


def exact_inverse(M: DomainMatrix) -> DomainMatrix:
    return M.to_dense().inv().to_dense()


def to_complex(M: DomainMatrix) -> np.ndarray:
    rows = M.to_list()
    return np.array([[complex(float(v.x), float(v.y)) for v in row] for row in rows])


def to_sympy(M: DomainMatrix):
    return M.to_Matrix()


def is_equal(A: DomainMatrix, B: DomainMatrix) -> bool:
    if A.shape != B.shape:
        return False
    return A.to_dense().convert_to(QQ_I) == B.to_dense().convert_to(QQ_I)


def rational(v) -> Rational:
    f = Fraction(v)
    return Rational(f.numerator, f.denominator)
