"""Checks of the looped Seidel energy results over enumerated and random graphs.

Each checker returns a flat record; :func:`scan` streams them over every
labeled graph of an order (exhaustive) or over seeded random instances.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Union

import numpy as np

from .energy import (
    HypothesisViolation,
    NotRegularError,
    seidel_energy,
    seidel_matrix,
    seidel_spectrum,
    shifted_seidel,
    split_regular,
    union_energy_formula,
    union_graph,
    join_graph,
)
from .formats import emit_graph6
from .graph import (
    LoopedGraph,
    VertexLike,
    VertexSet,
    add_loops,
    all_vertex_sets,
    complement,
    num_pairs,
    regularity,
    seidel_switch,
    _coerce,
)
from .spectra import fiedler_spectrum, jacobi_eigenvalues

TOL = 1e-9
UNION_FORMULA_TOL = 1e-8
EXHAUSTIVE_MAX_N = 6
THEOREMS = ("bounds", "complement", "switching", "union")
JOBS_ENV = "SEIDEL_LOOPS_JOBS"


class ScanTooLargeError(ValueError):
    pass


def bound_width(n: int, sigma: int) -> float:
    """``2 sigma (1 - sigma/n)``, the half-width of the energy bracket."""
    return 0.0 if n == 0 else 2 * sigma * (1 - sigma / n)


def exact_bound_width(n: int, sigma: int) -> Fraction:
    return Fraction(0) if n == 0 else 2 * sigma * (1 - Fraction(sigma, n))


def perturbation_diagonal(n: int, loops: int) -> list[Fraction]:
    """Diagonal of ``E`` in ``S(G_W) + (sigma/n) I = S(G) + E``."""
    sigma = loops.bit_count()
    return [Fraction(sigma, n) - (loops >> v & 1) for v in range(n)]


def perturbation_energy_exact(n: int, loops: int) -> Fraction:
    """Sum of singular values of the diagonal matrix ``E``, in exact arithmetic."""
    return sum((abs(x) for x in perturbation_diagonal(n, loops)), Fraction(0))


@dataclass(frozen=True)
class BoundRecord:
    graph: str
    n: int
    sigma: int
    base_energy: float
    value: float
    lower: float
    upper: float
    slack_low: float
    slack_high: float
    equality_low: bool
    equality_high: bool
    nonempty: bool
    review: bool
    violation: bool
    e_residual: float
    moment_residual: float
    passed: bool


@dataclass(frozen=True)
class TheoremRecord:
    theorem: str
    instance: str
    deltas: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)
    values: dict = field(default_factory=dict)
    passed: bool = True
    status: str = "pass"
    seed: Optional[int] = None
    index: Optional[int] = None


def _theorem_record(theorem, instance, deltas, tolerances, values=None, status=None,
                    seed=None, index=None) -> TheoremRecord:
    passed = all(not (d > tolerances[k]) for k, d in deltas.items() if not math.isnan(d))
    if status is None:
        status = "pass" if passed else "fail"
    elif not passed:
        status = "fail"
    return TheoremRecord(theorem, instance, dict(deltas), dict(tolerances), dict(values or {}),
                         passed, status, seed, index)


def _moment_residual(g: LoopedGraph, spec) -> float:
    """Worst normalized deviation of the first two spectral moments of the shifted matrix."""
    n, sigma = g.n, g.sigma
    if n == 0:
        return 0.0
    frob2 = n * (n - 1) + sigma * (1 - sigma / n)
    scale = max(1.0, math.sqrt(frob2))
    vals = spec.values
    return max(abs(math.fsum(vals)), abs(math.fsum(x * x for x in vals) - frob2)) / scale


def check_bounds(g_simple: LoopedGraph, W: VertexLike, *, base_energy: Optional[float] = None,
                 tol: float = TOL) -> BoundRecord:
    """Compare ``SE(G_W)`` with the bracket ``SE(G) -/+ 2 sigma (1 - sigma/n)``."""
    if g_simple.loops:
        raise ValueError("check_bounds expects a loopless graph")
    gw = add_loops(g_simple, VertexSet(g_simple.n, _coerce(g_simple.n, W)))
    n, sigma = gw.n, gw.sigma
    if base_energy is None:
        base_energy = seidel_energy(g_simple).energy
    report = seidel_energy(gw)
    width = bound_width(n, sigma)
    lower, upper = base_energy - width, base_energy + width
    slack_low, slack_high = report.energy - lower, upper - report.energy
    eq_low, eq_high = abs(slack_low) <= tol, abs(slack_high) <= tol
    nonempty = g_simple.num_edges > 0
    interior = 0 < sigma < n
    review = nonempty and interior and min(slack_low, slack_high) <= tol
    violation = slack_low < -tol or slack_high < -tol
    if n:
        # E is diagonal, so its singular values are the absolute diagonal entries
        shift = sigma / n
        e_sum = math.fsum(abs(shift - (gw.loops >> v & 1)) for v in range(n))
        e_residual = abs(e_sum - width)
        moment = _moment_residual(gw, report.shifted_eigenvalues)
    else:
        e_residual = moment = 0.0
    passed = not violation and e_residual <= tol and moment <= tol
    return BoundRecord(emit_graph6(gw), n, sigma, base_energy, report.energy, lower, upper,
                       slack_low, slack_high, eq_low, eq_high, nonempty, review, violation,
                       e_residual, moment, passed)


def check_complement_invariance(g: LoopedGraph, *, tol: float = TOL, seed=None, index=None) -> TheoremRecord:
    """Looped complement keeps the Seidel energy and maps each ``theta`` to ``-theta - 1``."""
    c = complement(g)
    e_g, e_c = seidel_energy(g).energy, seidel_energy(c).energy
    spec_g, spec_c = seidel_spectrum(g), seidel_spectrum(c)
    mapped = [-x - 1 for x in spec_g]
    s_g, s_c = seidel_matrix(g).array, seidel_matrix(c).array
    identity = float(np.max(np.abs(s_c - (-s_g - np.eye(g.n))), initial=0.0))
    deltas = {"energy": abs(e_c - e_g), "spectral_map": spec_c.distance(mapped), "identity": identity}
    return _theorem_record("complement", emit_graph6(g), deltas, dict.fromkeys(deltas, tol),
                           {"energy": e_g, "energy_complement": e_c}, seed=seed, index=index)


def switching_matrix(n: int, X: VertexLike) -> np.ndarray:
    """``D_X``: -1 on the diagonal at ``X``, +1 elsewhere."""
    mask = _coerce(n, X)
    return np.diag([-1.0 if mask >> v & 1 else 1.0 for v in range(n)])


def check_switching_cospectral(g: LoopedGraph, X: VertexLike, *, tol: float = TOL,
                               seed=None, index=None) -> TheoremRecord:
    """Switching is the similarity ``D_X S D_X``: same spectrum, same energy."""
    xs = VertexSet(g.n, _coerce(g.n, X))
    h = seidel_switch(g, xs)
    d = switching_matrix(g.n, xs)
    similar = d @ seidel_matrix(g).array @ d
    similarity = float(np.max(np.abs(seidel_matrix(h).array - similar), initial=0.0))
    e_g, e_h = seidel_energy(g).energy, seidel_energy(h).energy
    deltas = {
        "spectrum": seidel_spectrum(g).distance(seidel_spectrum(h)),
        "energy": abs(e_h - e_g),
        "similarity": similarity,
    }
    tols = dict.fromkeys(deltas, tol)
    tols["similarity"] = 0.0
    instance = f"{emit_graph6(g)}|X={','.join(map(str, xs))}"
    return _theorem_record("switching", instance, deltas, tols, {"energy": e_g}, seed=seed, index=index)


def union_fiedler_spectrum(g: LoopedGraph):
    """Spectrum of ``S(G ∪ G') + I/2`` assembled from the Seidel spectrum of ``G``."""
    _, theta_reg, rest = split_regular(g)
    n = g.n
    return fiedler_spectrum(theta_reg + 0.5, [x + 0.5 for x in rest],
                            theta_reg - 0.5, [x - 0.5 for x in rest], float(n))


def check_union_theorem(g: LoopedGraph, *, tol: float = TOL,
                        formula_tol: float = UNION_FORMULA_TOL) -> TheoremRecord:
    """Union energy formula, Fiedler assembly, and union/join cospectrality.

    A failed eigenvalue hypothesis is recorded with status
    ``hypothesis-violation``; the other two checks still run.

    Raises NotRegularError for non-regular input.
    """
    if g.loops:
        raise ValueError("union check expects a loopless graph")
    if regularity(g) is None:
        raise NotRegularError(f"{emit_graph6(g)} is not regular")
    n = g.n
    u, j = union_graph(g), join_graph(g)
    direct = seidel_energy(u).energy
    values = {"direct": direct, "formula": math.nan, "violating_eigenvalue": math.nan}
    status = None
    try:
        formula = union_energy_formula(g)
        values["formula"] = formula
        formula_delta = abs(formula - direct)
    except HypothesisViolation as exc:
        status = "hypothesis-violation"
        values["violating_eigenvalue"] = exc.eigenvalue
        formula_delta = math.nan
    direct_m = jacobi_eigenvalues(shifted_seidel(u))
    switched = seidel_switch(u, VertexSet(2 * n, (1 << n) - 1))
    deltas = {
        "formula": formula_delta,
        "fiedler": union_fiedler_spectrum(g).distance(direct_m),
        "cospectral": seidel_spectrum(u).distance(seidel_spectrum(j)),
        "switch_identity": 0.0 if switched == j else 1.0,
    }
    tols = {"formula": formula_tol, "fiedler": tol, "cospectral": tol, "switch_identity": 0.0}
    return _theorem_record("union", emit_graph6(g), deltas, tols, values, status=status)


# scanning -------------------------------------------------------------------

Record = Union[BoundRecord, TheoremRecord]


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _bounds_block(n: int, start: int, stop: int) -> list[BoundRecord]:
    out = []
    for adj in range(start, stop):
        g = LoopedGraph(n, adj)
        base = seidel_energy(g).energy
        for W in all_vertex_sets(n):
            out.append(check_bounds(g, W, base_energy=base))
    return out


def _complement_block(n: int, start: int, stop: int) -> list[TheoremRecord]:
    return [check_complement_invariance(LoopedGraph(n, adj, loops))
            for adj in range(start, stop) for loops in range(1 << n)]


def _switching_block(n: int, start: int, stop: int) -> list[TheoremRecord]:
    return [check_switching_cospectral(LoopedGraph(n, adj, loops), VertexSet(n, x))
            for adj in range(start, stop) for loops in range(1 << n) for x in range(1 << n)]


def _union_block(n: int, start: int, stop: int) -> list[TheoremRecord]:
    out = []
    for adj in range(start, stop):
        g = LoopedGraph(n, adj)
        if regularity(g) is not None:
            out.append(check_union_theorem(g))
    return out


_BLOCKS = {
    "bounds": _bounds_block,
    "complement": _complement_block,
    "switching": _switching_block,
    "union": _union_block,
}


def random_instance(seed: int, index: int, n_max: int, n_min: int = 1):
    """Seeded ``(g, W, X)``: G(n, 1/2) adjacency, uniform loop and switching sets.

    Each instance draws from its own generator keyed by ``(seed, index)``, so
    any single instance can be regenerated without replaying the stream.
    """
    rng = np.random.default_rng([seed, index])
    n = int(rng.integers(n_min, n_max + 1))
    bits = rng.integers(0, 2, size=num_pairs(n))
    adj = sum(int(b) << k for k, b in enumerate(bits))
    loops = sum(int(b) << v for v, b in enumerate(rng.integers(0, 2, size=n)))
    x = sum(int(b) << v for v, b in enumerate(rng.integers(0, 2, size=n)))
    return LoopedGraph(n, adj, 0), VertexSet(n, loops), VertexSet(n, x)


def _random_record(theorem: str, seed: int, index: int, n_max: int, n_min: int) -> Record:
    g, W, X = random_instance(seed, index, n_max, n_min)
    if theorem == "bounds":
        return check_bounds(g, W)
    gw = add_loops(g, W)
    if theorem == "complement":
        return check_complement_invariance(gw, seed=seed, index=index)
    return check_switching_cospectral(gw, X, seed=seed, index=index)


def _random_block(theorem: str, seed: int, start: int, stop: int, n_max: int, n_min: int) -> list[Record]:
    return [_random_record(theorem, seed, i, n_max, n_min) for i in range(start, stop)]


def _chunks(total: int, size: int):
    for start in range(0, total, size):
        yield start, min(start + size, total)


def scan(n_max: int, mode: str = "exhaustive", sample: int = 1000, seed: int = 0, *,
         theorem: str = "bounds", n_min: Optional[int] = None,
         workers: Optional[int] = None) -> Iterator[Record]:
    """Stream verification records.

    Exhaustive mode walks every labeled graph of each order in
    ``n_min..n_max`` (``n_min`` defaults to ``n_max``) and, depending on the
    theorem, every loop set and switching set.  Random mode draws ``sample``
    seeded instances with orders in ``n_min..n_max`` (``n_min`` defaults to 1).
    Output order is canonical regardless of ``workers``.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}")
    workers = default_workers() if workers is None else max(1, workers)
    if mode == "exhaustive":
        if n_max > EXHAUSTIVE_MAX_N:
            raise ScanTooLargeError(f"exhaustive scans are limited to n <= {EXHAUSTIVE_MAX_N}")
        lo = n_max if n_min is None else n_min
        block = _BLOCKS[theorem]
        tasks = []
        for n in range(lo, n_max + 1):
            total = 1 << num_pairs(n)
            size = max(1, total // (8 * workers)) if workers > 1 else total
            tasks += [(block, n, a, b) for a, b in _chunks(total, size)]
    elif mode == "random":
        if theorem == "union":
            raise ValueError("the union check is only run on enumerated regular graphs")
        lo = 1 if n_min is None else n_min
        size = max(1, sample // (8 * workers)) if workers > 1 else max(sample, 1)
        tasks = [(_random_block, theorem, seed, a, b, n_max, lo) for a, b in _chunks(sample, size)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if workers == 1:
        for fn, *args in tasks:
            yield from fn(*args)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *args) for fn, *args in tasks]
        for fut in futures:
            yield from fut.result()


@dataclass
class ScanSummary:
    """Order-independent tallies over a record stream; ``merge`` is associative."""

    records: int = 0
    failures: int = 0
    violations: int = 0
    review: int = 0
    hypothesis_violations: int = 0
    equality_sigma_0: int = 0
    equality_sigma_n: int = 0
    equality_interior: int = 0
    min_interior_slack: dict = field(default_factory=dict)

    def add(self, rec: Record) -> None:
        self.records += 1
        if isinstance(rec, BoundRecord):
            self.failures += not rec.passed
            self.violations += rec.violation
            self.review += rec.review
            if rec.equality_low or rec.equality_high:
                if rec.sigma == 0:
                    self.equality_sigma_0 += 1
                elif rec.sigma == rec.n:
                    self.equality_sigma_n += 1
                else:
                    self.equality_interior += 1
            if rec.nonempty and 0 < rec.sigma < rec.n:
                slack = min(rec.slack_low, rec.slack_high)
                prev = self.min_interior_slack.get(rec.n, math.inf)
                self.min_interior_slack[rec.n] = min(prev, slack)
        else:
            self.failures += not rec.passed
            self.hypothesis_violations += rec.status == "hypothesis-violation"

    def merge(self, other: "ScanSummary") -> "ScanSummary":
        out = ScanSummary()
        for name in ("records", "failures", "violations", "review", "hypothesis_violations",
                     "equality_sigma_0", "equality_sigma_n", "equality_interior"):
            setattr(out, name, getattr(self, name) + getattr(other, name))
        for src in (self.min_interior_slack, other.min_interior_slack):
            for n, s in src.items():
                out.min_interior_slack[n] = min(out.min_interior_slack.get(n, math.inf), s)
        return out

    @property
    def ok(self) -> bool:
        return self.failures == 0


def summarize(records) -> ScanSummary:
    summary = ScanSummary()
    for rec in records:
        summary.add(rec)
    return summary
