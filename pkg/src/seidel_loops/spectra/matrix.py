"""Dense symmetric matrices, sorted spectra, and the cyclic Jacobi eigensolver."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from . import _kernel

DEFAULT_TOL = 1e-9
JACOBI_REL_TOL = 1e-12
MAX_SWEEPS = 100


class ConvergenceError(ArithmeticError):
    """Jacobi iteration hit the sweep cap before the off-diagonal part vanished."""


class SymmetricMatrix:
    """Immutable real symmetric matrix backed by a read-only float64 array.

    Construction rejects anything that is not square, finite and exactly
    symmetric, so ``m[i, j] == m[j, i]`` bit for bit.
    """

    __slots__ = ("_a",)

    def __init__(self, values):
        a = np.array(values, dtype=np.float64)
        if a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ValueError("matrix has non-finite entries")
        if not np.array_equal(a, a.T):
            raise ValueError("matrix is not symmetric")
        a.setflags(write=False)
        self._a = a

    @classmethod
    def from_upper(cls, n: int, upper: Sequence[float]) -> "SymmetricMatrix":
        """Build from the row-major upper triangle including the diagonal."""
        a = np.zeros((n, n))
        iu = np.triu_indices(n)
        a[iu] = upper
        a.T[iu] = upper
        return cls(a)

    @classmethod
    def identity(cls, n: int) -> "SymmetricMatrix":
        return cls(np.eye(n))

    @classmethod
    def diagonal(cls, d: Iterable[float]) -> "SymmetricMatrix":
        return cls(np.diag(np.asarray(list(d), dtype=np.float64)))

    @property
    def n(self) -> int:
        return self._a.shape[0]

    @property
    def array(self) -> np.ndarray:
        return self._a

    def __array__(self, dtype=None, copy=None):
        return self._a if dtype is None else self._a.astype(dtype)

    def __getitem__(self, idx):
        return self._a[idx]

    def trace(self) -> float:
        return float(np.trace(self._a))

    def frobenius(self) -> float:
        return float(np.linalg.norm(self._a))

    def shift(self, c: float) -> "SymmetricMatrix":
        """``M + c I``."""
        return SymmetricMatrix(self._a + c * np.eye(self.n))

    def _other(self, other) -> np.ndarray:
        o = other._a if isinstance(other, SymmetricMatrix) else np.asarray(other, dtype=np.float64)
        if o.shape != self._a.shape:
            raise ValueError(f"order mismatch: {self._a.shape} vs {o.shape}")
        return o

    def __add__(self, other) -> "SymmetricMatrix":
        return SymmetricMatrix(self._a + self._other(other))

    def __sub__(self, other) -> "SymmetricMatrix":
        return SymmetricMatrix(self._a - self._other(other))

    def __neg__(self) -> "SymmetricMatrix":
        return SymmetricMatrix(-self._a)

    def __mul__(self, c: float) -> "SymmetricMatrix":
        return SymmetricMatrix(self._a * float(c))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymmetricMatrix):
            return NotImplemented
        return np.array_equal(self._a, other._a)

    def __hash__(self):
        return hash((self.n, self._a.tobytes()))

    def __repr__(self) -> str:
        return f"SymmetricMatrix({self._a.tolist()})"


MatrixLike = Union[SymmetricMatrix, np.ndarray, Sequence[Sequence[float]]]


def as_symmetric(m: MatrixLike) -> SymmetricMatrix:
    return m if isinstance(m, SymmetricMatrix) else SymmetricMatrix(m)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset, stored sorted in descending order.

    Two spectra match when they have equal length and every pair of
    same-rank values differs by at most ``tol``.
    """

    values: tuple[float, ...]
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        vals = tuple(sorted((float(x) for x in self.values), reverse=True))
        object.__setattr__(self, "values", vals)
        if self.tol < 0:
            raise ValueError("tolerance must be non-negative")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.float64)

    def distance(self, other: Union["Spectrum", Iterable[float]]) -> float:
        """Largest same-rank gap; ``inf`` when lengths differ."""
        other_vals = other.values if isinstance(other, Spectrum) else Spectrum(tuple(other)).values
        if len(other_vals) != len(self.values):
            return math.inf
        return max((abs(a - b) for a, b in zip(self.values, other_vals)), default=0.0)

    def matches(self, other, tol: Optional[float] = None) -> bool:
        return self.distance(other) <= (self.tol if tol is None else tol)

    def without(self, value: float, tol: Optional[float] = None) -> "Spectrum":
        """Copy with one value within ``tol`` of ``value`` removed (the closest one)."""
        tol = self.tol if tol is None else tol
        if not self.values:
            raise ValueError(f"{value!r} not in empty spectrum")
        k = min(range(len(self.values)), key=lambda i: abs(self.values[i] - value))
        if abs(self.values[k] - value) > tol:
            raise ValueError(f"{value!r} not in spectrum within {tol:g}")
        return Spectrum(self.values[:k] + self.values[k + 1:], self.tol)

    def abs_sum(self) -> float:
        return math.fsum(abs(x) for x in self.values)


def jacobi_eigenvalues(m: MatrixLike, *, vectors: bool = False,
                       rel_tol: float = JACOBI_REL_TOL, max_sweeps: int = MAX_SWEEPS,
                       kernel=None):
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Iterates until the off-diagonal Frobenius norm drops to
    ``rel_tol * ||M||_F``.  With ``vectors=True`` also returns the orthogonal
    matrix ``Q`` whose columns follow the sorted eigenvalues, so that
    ``M = Q diag(values) Q^T``.

    Raises ConvergenceError after ``max_sweeps`` sweeps.
    """
    m = as_symmetric(m)
    n = m.n
    a = np.array(m.array, dtype=np.float64, order="C")
    v = np.eye(n) if vectors else None
    tol = rel_tol * float(np.linalg.norm(a))
    kernel = kernel or _kernel.jacobi_kernel
    if kernel(a, v, tol, max_sweeps) < 0:
        raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (order {n})")
    d = np.diagonal(a).copy()
    spec = Spectrum(tuple(d.tolist()))
    if not vectors:
        return spec
    order = np.argsort(-d, kind="stable")
    return spec, v[:, order]


def singular_values_symmetric(m: MatrixLike) -> list[float]:
    """Singular values of a symmetric matrix, i.e. absolute eigenvalues, descending."""
    return sorted((abs(x) for x in jacobi_eigenvalues(m)), reverse=True)


def matrix_energy(m: MatrixLike) -> float:
    """Sum of singular values."""
    return math.fsum(singular_values_symmetric(m))


def eigenvalues_2x2(a: float, b: float, c: float) -> tuple[float, float]:
    """Eigenvalues of ``[[a, b], [b, c]]``, larger first."""
    mid = 0.5 * (a + c)
    rad = math.hypot(0.5 * (a - c), b)
    return mid + rad, mid - rad


def fiedler_spectrum(alpha1: float, rest_a: Iterable[float], beta1: float,
                     rest_b: Iterable[float], rho: float) -> Spectrum:
    """Spectrum of ``[[A, rho u v^T], [rho v u^T, B]]`` from the block spectra.

    ``alpha1``/``beta1`` are the eigenvalues of ``A``/``B`` belonging to the
    unit eigenvectors ``u``/``v`` used in the coupling; ``rest_a``/``rest_b``
    are the remaining eigenvalues.  The result is ``rest_a + rest_b`` plus the
    two eigenvalues of ``[[alpha1, rho], [rho, beta1]]``.
    """
    g1, g2 = eigenvalues_2x2(alpha1, rho, beta1)
    return Spectrum(tuple(rest_a) + tuple(rest_b) + (g1, g2))


def fan_inequality_check(a: MatrixLike, b: MatrixLike) -> float:
    """Slack ``E(A) + E(B) - E(A + B)``; non-negative up to rounding."""
    a, b = as_symmetric(a), as_symmetric(b)
    if a.n != b.n:
        raise ValueError(f"order mismatch: {a.n} vs {b.n}")
    return matrix_energy(a) + matrix_energy(b) - matrix_energy(a + b)
