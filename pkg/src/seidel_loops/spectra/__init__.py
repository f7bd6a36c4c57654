"""Symmetric eigensolver, exact polynomial oracle, and matrix energy."""
from ._kernel import KERNEL
from .matrix import (
    ConvergenceError,
    DEFAULT_TOL,
    Spectrum,
    SymmetricMatrix,
    as_symmetric,
    eigenvalues_2x2,
    fan_inequality_check,
    fiedler_spectrum,
    jacobi_eigenvalues,
    matrix_energy,
    singular_values_symmetric,
)
from .oracle import charpoly_coefficients, charpoly_eigen_oracle

__all__ = [
    "KERNEL",
    "ConvergenceError",
    "DEFAULT_TOL",
    "Spectrum",
    "SymmetricMatrix",
    "as_symmetric",
    "charpoly_coefficients",
    "charpoly_eigen_oracle",
    "eigenvalues_2x2",
    "fan_inequality_check",
    "fiedler_spectrum",
    "jacobi_eigenvalues",
    "matrix_energy",
    "singular_values_symmetric",
]
