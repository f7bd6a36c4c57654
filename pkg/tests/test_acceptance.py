"""Acceptance criteria; each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""
import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from seidel_loops.cli import main as cli_main
from seidel_loops.energy import seidel_energy, seidel_spectrum, union_energy_formula, union_graph, join_graph
from seidel_loops.formats import emit_graph6, parse_graph6
from seidel_loops.graph import (
    LoopedGraph,
    VertexSet,
    complete_graph,
    cycle_graph,
    from_edge_list,
    num_pairs,
    petersen_graph,
    seidel_switch,
)
from seidel_loops.spectra import (
    charpoly_eigen_oracle,
    fan_inequality_check,
    jacobi_eigenvalues,
)
from seidel_loops.verify import (
    check_complement_invariance,
    check_union_theorem,
    exact_bound_width,
    perturbation_energy_exact,
    scan,
    summarize,
    union_fiedler_spectrum,
)
from seidel_loops.energy import shifted_seidel

TOL = 1e-9
SEED = 20240601


@pytest.fixture
def report(capsys):
    def _report(label, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        assert ok, f"{label}: {detail}"
    return _report


@pytest.fixture(scope="module")
def bounds_scan():
    t0 = time.perf_counter()
    records = list(scan(5, n_min=2, workers=1))
    return records, time.perf_counter() - t0


def union_family():
    return ([complete_graph(n) for n in range(2, 9)]
            + [cycle_graph(n) for n in (4, 5, 6)] + [petersen_graph()])


def test_c01_closed_form_energy(report):
    t0 = time.perf_counter()
    k2l = seidel_energy(from_edge_list(2, [(0, 1)], [0])).energy
    err_k2 = abs(k2l - math.sqrt(5))
    err_kn = max(abs(seidel_energy(complete_graph(n)).energy - 2 * (n - 1)) for n in range(2, 11))
    elapsed = time.perf_counter() - t0
    ok = err_k2 <= 1e-12 and err_kn <= 1e-9 and elapsed < 1.0
    report("C1 closed-form energies", ok,
           f"|SE(K2 looped)-sqrt5|={err_k2:.1e} max|SE(Kn)-2(n-1)|={err_kn:.1e} time={elapsed:.3f}s")


def test_c02_bounds_exhaustive(report, bounds_scan):
    records, elapsed = bounds_scan
    expected = sum((1 << num_pairs(n)) * (1 << n) for n in range(2, 6))
    s = summarize(records)
    bad_equality = [r for r in records
                    if r.nonempty and (r.equality_low or r.equality_high) and 0 < r.sigma < r.n]
    ok = (len(records) == expected == 33864 and s.violations == 0 and not bad_equality
          and s.review == 0 and elapsed < 120)
    report("C2 energy bracket, exhaustive n=2..5", ok,
           f"records={len(records)} violations={s.violations} interior-equalities={len(bad_equality)} "
           f"review={s.review} min-interior-slack={min(s.min_interior_slack.values()):.3f} time={elapsed:.1f}s")


def test_c03_complement(report):
    exhaustive = [check_complement_invariance(LoopedGraph(n, adj, w))
                  for n in range(0, 6) for adj in range(1 << num_pairs(n)) for w in range(1 << n)]
    randomized = list(scan(12, "random", 1000, seed=SEED, theorem="complement"))
    recs = exhaustive + randomized
    worst_e = max(r.deltas["energy"] for r in recs)
    worst_map = max(r.deltas["spectral_map"] for r in recs)
    ok = all(r.passed for r in recs) and worst_e <= TOL and worst_map <= TOL and len(randomized) == 1000
    report("C3 complement invariance", ok,
           f"instances={len(recs)} max|dSE|={worst_e:.1e} max map residual={worst_map:.1e}")


def test_c04_switching(report):
    recs = list(scan(12, "random", 1000, seed=SEED, theorem="switching"))
    worst = max(r.deltas["spectrum"] for r in recs)
    exact = all(r.deltas["similarity"] == 0 for r in recs)
    ok = len(recs) == 1000 and all(r.passed for r in recs) and worst <= TOL and exact
    report("C4 switching cospectrality", ok,
           f"instances={len(recs)} max spectral distance={worst:.1e} similarity exact={exact}")


def test_c05_union_formula(report):
    worst = 0.0
    for g in union_family():
        direct = float(np.abs(np.linalg.eigvalsh(shifted_seidel(union_graph(g)).array)).sum())
        worst = max(worst, abs(union_energy_formula(g) - direct), abs(seidel_energy(union_graph(g)).energy - direct))
    specific = {
        "K2": (complete_graph(2), 2 + math.sqrt(17)),
        "C4": (cycle_graph(4), 10 + math.sqrt(65)),
        "Petersen": (petersen_graph(), 54 + math.sqrt(401)),
    }
    spec_err = max(abs(union_energy_formula(g) - v) for g, v in specific.values())
    c7 = check_union_theorem(cycle_graph(7))
    ok = worst <= 1e-8 and spec_err <= 1e-8 and c7.status == "hypothesis-violation" and c7.passed
    report("C5 union energy formula", ok,
           f"max|formula-direct|={worst:.1e} max|specific|={spec_err:.1e} C7 status={c7.status}")


def test_c06_union_join_cospectral(report):
    worst = 0.0
    same_graph = True
    for g in union_family():
        u, j = union_graph(g), join_graph(g)
        worst = max(worst, seidel_spectrum(u).distance(seidel_spectrum(j)))
        same_graph &= seidel_switch(u, VertexSet(2 * g.n, (1 << g.n) - 1)) == j
    ok = worst <= TOL and same_graph
    report("C6 union/join cospectral", ok, f"max spectral distance={worst:.1e} switch(U,V(G))==J: {same_graph}")


def test_c07_eigensolver_quality(report, bounds_scan):
    rng = np.random.default_rng(SEED)
    worst_oracle = worst_recon = 0.0
    for _ in range(1000):
        n = int(rng.integers(1, 9))
        a = rng.standard_normal((n, n))
        a = (a + a.T) / 2
        spec, q = jacobi_eigenvalues(a, vectors=True)
        worst_oracle = max(worst_oracle, spec.distance(charpoly_eigen_oracle(a)))
        recon = np.linalg.norm(q @ np.diag(spec.as_array()) @ q.T - a) / max(1.0, np.linalg.norm(a))
        worst_recon = max(worst_recon, recon)
    records, _ = bounds_scan
    worst_moment = max(r.moment_residual for r in records)
    ok = worst_oracle <= 1e-9 and worst_recon <= 1e-8 and worst_moment <= 1e-9
    report("C7 eigensolver quality", ok,
           f"max|jacobi-oracle|={worst_oracle:.1e} max recon={worst_recon:.1e} "
           f"max moment residual={worst_moment:.1e} over {len(records)} Seidel matrices")


def test_c08_fan(report):
    rng = np.random.default_rng(SEED + 1)
    worst = math.inf
    for _ in range(10000):
        n = int(rng.integers(1, 9))
        a, b = rng.standard_normal((n, n)), rng.standard_normal((n, n))
        worst = min(worst, fan_inequality_check((a + a.T) / 2, (b + b.T) / 2))
    exact_ok = all(perturbation_energy_exact(n, w) == exact_bound_width(n, bin(w).count("1"))
                   for n in range(1, 13) for w in range(1 << n))
    formula_ok = all(exact_bound_width(n, s) == 2 * s * (1 - Fraction(s, n))
                     for n in range(1, 13) for s in range(n + 1))
    ok = worst >= -1e-9 and exact_ok and formula_ok
    report("C8 Fan inequality", ok, f"min slack={worst:.3e} exact E energy for n<=12: {exact_ok and formula_ok}")


def test_c09_fiedler_route(report):
    worst = max(union_fiedler_spectrum(g).distance(jacobi_eigenvalues(shifted_seidel(union_graph(g))))
                for g in union_family())
    report("C9 Fiedler route", worst <= TOL, f"max distance={worst:.1e}")


def test_c10_io(report, capsys):
    rng = random.Random(SEED)
    mismatches = 0
    for _ in range(10000):
        n = rng.randint(0, 30)
        g = LoopedGraph(n, rng.getrandbits(num_pairs(n)) if n > 1 else 0, rng.getrandbits(n) if n else 0)
        mismatches += parse_graph6(emit_graph6(g)) != g
    fixtures = [
        (["energy", "A_:0"], 0),
        (["spectrum", "ZZ:x"], 2),
        (["verify", "--theorem", "bounds", "--max-n", "4"], 0),
        (["verify", "--theorem", "union"], 0),
        (["verify", "--theorem", "switching", "--sample", "10", "--seed", "3", "--max-n", "6"], 0),
        (["not-a-command"], 2),
        (["verify", "--theorem", "bounds", "--max-n", "8"], 2),
    ]
    codes = [(argv, cli_main(argv), want) for argv, want in fixtures]
    capsys.readouterr()
    wrong = [(a, got, want) for a, got, want in codes if got != want]
    report("C10 graph6 round trip and CLI exit codes", mismatches == 0 and not wrong,
           f"round-trip mismatches={mismatches}/10000 exit-code mismatches={wrong}")
