"""Dyadic rational integer approximations of the DFT, DHT and DCT.

The package builds m-th order dyadic approximations of the unitary Fourier,
Hartley and cosine matrices, fits their scalar and matrix corrections,
orthogonalizes them by polar decomposition and evaluates them on a
first-order Markov source.
"""
from .kernels import TransformKind, ExactTransform, exact_matrix, kernel_value
from .dyadic import DyadicMatrix, DyadicScalar, dyadic_matrix, dyadic_round
from .scalaropt import optimal_alpha, optimal_beta, optimal_beta_markov
from .ortho import Mode, ApproxPair, build_polar_pair, build_scalar_pair, error_analysis

__version__ = "0.1.0"

__all__ = [
    "TransformKind",
    "ExactTransform",
    "exact_matrix",
    "kernel_value",
    "DyadicMatrix",
    "DyadicScalar",
    "dyadic_matrix",
    "dyadic_round",
    "optimal_alpha",
    "optimal_beta",
    "optimal_beta_markov",
    "Mode",
    "ApproxPair",
    "build_scalar_pair",
    "build_polar_pair",
    "error_analysis",
]
