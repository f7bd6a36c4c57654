"""Seidel matrices, spectra and energies of looped graphs."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .graph import LoopedGraph, VertexSet, add_loops, disjoint_union, join, regularity
from .spectra import Spectrum, SymmetricMatrix, jacobi_eigenvalues

HALF = 0.5
HYPOTHESIS_TOL = 1e-9


class NotRegularError(ValueError):
    pass


class HypothesisViolation(ValueError):
    """A non-regular Seidel eigenvalue has magnitude below one half."""

    def __init__(self, eigenvalue: float):
        self.eigenvalue = eigenvalue
        super().__init__(f"eigenvalue {eigenvalue:.10g} has magnitude {abs(eigenvalue):.10g} < 1/2")


def adjacency_matrix(g: LoopedGraph) -> np.ndarray:
    """0/1 adjacency of the loop-free part."""
    n = g.n
    a = np.zeros((n, n))
    m = n * (n - 1) // 2
    if m:
        raw = g.adj.to_bytes((m + 7) // 8, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:m]
        cols = np.repeat(np.arange(n), np.arange(n))
        rows = np.concatenate([np.arange(j) for j in range(n)])
        a[rows, cols] = bits
        a[cols, rows] = bits
    return a


def loop_vector(g: LoopedGraph) -> np.ndarray:
    return np.array([g.loops >> v & 1 for v in range(g.n)], dtype=np.float64)


def seidel_matrix(g: LoopedGraph) -> SymmetricMatrix:
    """``S(G_W) = J - I - 2A - I_W``: -1 on edges, +1 on non-edges, -1 on loops."""
    n = g.n
    s = np.ones((n, n)) - np.eye(n) - 2.0 * adjacency_matrix(g)
    s -= np.diag(loop_vector(g))
    return SymmetricMatrix(s)


def shifted_seidel(g: LoopedGraph) -> SymmetricMatrix:
    """``S(G_W) + (sigma/n) I``, the matrix whose energy is the Seidel energy."""
    if g.n == 0:
        raise ValueError("the shift sigma/n is undefined for the order-0 graph")
    return seidel_matrix(g).shift(g.sigma / g.n)


def seidel_spectrum(g: LoopedGraph) -> Spectrum:
    return jacobi_eigenvalues(seidel_matrix(g))


@dataclass(frozen=True)
class EnergyReport:
    n: int
    sigma: int
    shift: float
    shifted_eigenvalues: Spectrum
    energy: float


def seidel_energy(g: LoopedGraph) -> EnergyReport:
    """Seidel energy ``sum |theta_i + sigma/n|``, computed on the shifted matrix.

    With no loops this is the classic Seidel energy.  The order-0 graph has
    energy 0.
    """
    if g.n == 0:
        return EnergyReport(0, 0, 0.0, Spectrum(()), 0.0)
    spec = jacobi_eigenvalues(shifted_seidel(g))
    return EnergyReport(g.n, g.sigma, g.sigma / g.n, spec, spec.abs_sum())


def regular_seidel_spectrum(n: int, r: int, adjacency_spectrum: Union[Spectrum, Iterable[float]],
                            tol: float = 1e-9) -> Spectrum:
    """Seidel spectrum of an ``r``-regular graph from its adjacency spectrum.

    The eigenvalue ``r`` (all-ones eigenvector) maps to ``n - 1 - 2r``; every
    other adjacency eigenvalue ``lam`` maps to ``-1 - 2 lam``.
    """
    adj = adjacency_spectrum if isinstance(adjacency_spectrum, Spectrum) else Spectrum(tuple(adjacency_spectrum))
    if len(adj) != n:
        raise ValueError(f"adjacency spectrum has {len(adj)} values for order {n}")
    if n == 0:
        return Spectrum(())
    if abs(adj[0] - r) > tol:
        raise ValueError(f"degree {r} is not the largest adjacency eigenvalue ({adj[0]:.10g})")
    rest = adj.without(r, tol)
    return Spectrum((n - 1 - 2 * r,) + tuple(-1 - 2 * lam for lam in rest))


def regular_eigenvalue(n: int, r: int) -> int:
    """Seidel eigenvalue on the all-ones vector of an ``r``-regular graph."""
    return n - 1 - 2 * r


def looped_copy(g: LoopedGraph) -> LoopedGraph:
    return add_loops(g, VertexSet.full(g.n))


def union_graph(g: LoopedGraph) -> LoopedGraph:
    """``G ∪ G'`` with ``G'`` a copy of ``G`` looped at every vertex."""
    return disjoint_union(g, looped_copy(g))


def join_graph(g: LoopedGraph) -> LoopedGraph:
    """``G ∇ G'``."""
    return join(g, looped_copy(g))


def split_regular(g: LoopedGraph, tol: float = 1e-9) -> tuple[int, float, Spectrum]:
    """``(r, theta_reg, rest)`` for a regular graph.

    ``rest`` is the Seidel spectrum with one copy of ``theta_reg = n-1-2r``
    removed; the all-ones eigenvalue need not be the largest one.
    """
    r = regularity(g)
    if r is None:
        raise NotRegularError("graph is not regular")
    theta_reg = regular_eigenvalue(g.n, r)
    rest = seidel_spectrum(g).without(theta_reg, tol)
    return r, theta_reg, rest


def union_energy_formula(g: LoopedGraph) -> float:
    """Closed-form Seidel energy of ``G ∪ G'`` for a loopless regular ``G``.

    ``2 SE(G) + 2 (max(|theta_reg|, R) - |theta_reg|)`` with
    ``R = sqrt(n^2 + 1/4)``.  Requires every other Seidel eigenvalue to have
    magnitude at least 1/2.

    Raises NotRegularError or HypothesisViolation.
    """
    if g.sigma:
        raise ValueError("union formula needs a graph without loops")
    if g.n == 0:
        raise ValueError("union formula needs at least one vertex")
    _, theta_reg, rest = split_regular(g)
    for theta in rest:
        if abs(theta) < HALF - HYPOTHESIS_TOL:
            raise HypothesisViolation(theta)
    radius = math.sqrt(g.n ** 2 + 0.25)
    se = seidel_energy(g).energy
    return 2 * se + 2 * (max(abs(theta_reg), radius) - abs(theta_reg))
