import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seidel_loops.energy import (
    HypothesisViolation,
    NotRegularError,
    adjacency_matrix,
    regular_seidel_spectrum,
    seidel_energy,
    seidel_matrix,
    seidel_spectrum,
    shifted_seidel,
    union_energy_formula,
    union_graph,
)
from seidel_loops.graph import (
    LoopedGraph,
    add_loops,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edge_list,
    path_graph,
    petersen_graph,
    relabel,
    underlying,
)

from strategies import graph_and_perm, looped_graphs

SQRT5 = math.sqrt(5)


def lapack_union_energy(g):
    """Independent route: LAPACK eigenvalues of the assembled shifted union matrix."""
    s = seidel_matrix(g).array
    n = g.n
    m = np.block([[s + 0.5 * np.eye(n), np.ones((n, n))], [np.ones((n, n)), s - 0.5 * np.eye(n)]])
    return float(np.abs(np.linalg.eigvalsh(m)).sum())


def test_seidel_matrix_examples():
    assert seidel_matrix(complete_graph(2)).array.tolist() == [[0, -1], [-1, 0]]
    assert seidel_matrix(from_edge_list(2, [(0, 1)], [0])).array.tolist() == [[-1, -1], [-1, 0]]
    assert np.array_equal(seidel_matrix(empty_graph(3)).array, np.ones((3, 3)) - np.eye(3))


@given(looped_graphs())
def test_seidel_entry_domain(g):
    s = seidel_matrix(g).array
    off = s[~np.eye(g.n, dtype=bool)]
    assert set(off.tolist()) <= {-1.0, 1.0}
    assert set(np.diag(s).tolist()) <= {-1.0, 0.0}
    assert np.trace(s) == -g.sigma


@given(looped_graphs(loops=False))
def test_seidel_is_j_minus_i_minus_2a(g):
    n = g.n
    assert np.array_equal(seidel_matrix(g).array, np.ones((n, n)) - np.eye(n) - 2 * adjacency_matrix(g))


def test_adjacency_against_networkx():
    nx = pytest.importorskip("networkx")
    g = petersen_graph()
    ref = nx.to_numpy_array(nx.petersen_graph(), nodelist=range(10))
    assert np.array_equal(adjacency_matrix(g), ref)


def test_shifted_seidel_examples():
    g = cycle_graph(5)
    assert shifted_seidel(g) == seidel_matrix(g)
    assert shifted_seidel(from_edge_list(2, [(0, 1)], [0])).array.tolist() == [[-0.5, -1], [-1, 0.5]]
    assert shifted_seidel(LoopedGraph(1, 0, 1)).array.tolist() == [[0.0]]
    with pytest.raises(ValueError):
        shifted_seidel(LoopedGraph(0))


@given(looped_graphs(min_n=1))
def test_shifted_moments(g):
    n, sigma = g.n, g.sigma
    m = shifted_seidel(g).array
    # off-diagonal entries contribute n(n-1); the diagonal sigma*(1-sigma/n)^2 + (n-sigma)(sigma/n)^2
    assert abs(np.trace(m)) <= 1e-12 * n
    assert abs(np.sum(m * m) - (n * (n - 1) + sigma * (1 - sigma / n))) <= 1e-9 * n * n
    rep = seidel_energy(g)
    assert abs(sum(rep.shifted_eigenvalues)) <= 1e-9 * n


def test_seidel_spectrum_examples():
    assert seidel_spectrum(complete_graph(3)).matches([1, 1, -2], tol=1e-12)
    assert seidel_spectrum(path_graph(3)).matches([2, -1, -1], tol=1e-12)
    k2l = from_edge_list(2, [(0, 1)], [0])
    assert seidel_spectrum(k2l).matches([(-1 + SQRT5) / 2, (-1 - SQRT5) / 2], tol=1e-12)


def test_seidel_energy_examples():
    assert seidel_energy(complete_graph(2)).energy == pytest.approx(2, abs=1e-14)
    rep = seidel_energy(from_edge_list(2, [(0, 1)], [0]))
    assert rep.energy == pytest.approx(SQRT5, abs=1e-12)
    assert rep.shifted_eigenvalues.matches([SQRT5 / 2, -SQRT5 / 2], tol=1e-12)
    assert (rep.n, rep.sigma, rep.shift) == (2, 1, 0.5)
    assert seidel_energy(LoopedGraph(1, 0, 1)).energy == 0
    assert seidel_energy(complete_graph(4)).energy == pytest.approx(6, abs=1e-12)
    assert seidel_energy(LoopedGraph(0)).energy == 0


@given(looped_graphs(min_n=1))
def test_energy_equals_per_eigenvalue_route(g):
    theta = np.linalg.eigvalsh(seidel_matrix(g).array)
    direct = float(np.abs(theta + g.sigma / g.n).sum())
    assert seidel_energy(g).energy == pytest.approx(direct, abs=1e-9)


@given(graph_and_perm())
def test_energy_relabel_invariant(gp):
    g, perm = gp
    assert abs(seidel_energy(relabel(g, perm)).energy - seidel_energy(g).energy) <= 1e-9


@given(looped_graphs(min_n=1, loops=False))
def test_no_loops_or_all_loops_keep_energy(g):
    base = seidel_energy(g).energy
    assert abs(seidel_energy(add_loops(g, range(g.n))).energy - base) <= 1e-9
    assert abs(seidel_energy(underlying(g)).energy - base) <= 1e-9


def test_regular_seidel_spectrum_examples():
    c4 = regular_seidel_spectrum(4, 2, [2, 0, 0, -2])
    assert c4.matches([3, -1, -1, -1], tol=1e-12)
    assert c4.matches(seidel_spectrum(cycle_graph(4)))

    for n in range(2, 8):
        ks = regular_seidel_spectrum(n, n - 1, [n - 1] + [-1] * (n - 1))
        assert ks.matches([-(n - 1)] + [1] * (n - 1), tol=1e-12)

    pet = regular_seidel_spectrum(10, 3, [3] + [1] * 5 + [-2] * 4)
    assert pet.matches([3] * 4 + [-3] * 5 + [3], tol=1e-12)
    assert pet.matches(seidel_spectrum(petersen_graph()))

    with pytest.raises(ValueError):
        regular_seidel_spectrum(4, 1, [2, 0, 0, -2])


@pytest.mark.parametrize("n", range(3, 10))
def test_regular_map_on_cycles(n):
    adj = [2 * math.cos(2 * math.pi * k / n) for k in range(n)]
    assert regular_seidel_spectrum(n, 2, adj).matches(seidel_spectrum(cycle_graph(n)))


@pytest.mark.parametrize("g,expected", [
    (complete_graph(2), 2 + math.sqrt(17)),
    (cycle_graph(4), 10 + math.sqrt(65)),
    (petersen_graph(), 54 + math.sqrt(401)),
])
def test_union_formula_values(g, expected):
    assert lapack_union_energy(g) == pytest.approx(expected, abs=1e-9)
    assert union_energy_formula(g) == pytest.approx(expected, abs=1e-8)
    assert seidel_energy(union_graph(g)).energy == pytest.approx(expected, abs=1e-8)


def test_union_formula_c7_hypothesis():
    with pytest.raises(HypothesisViolation) as info:
        union_energy_formula(cycle_graph(7))
    expected = -1 - 4 * math.cos(4 * math.pi / 7)
    assert info.value.eigenvalue == pytest.approx(expected, abs=1e-9)
    assert abs(expected) == pytest.approx(0.1099, abs=1e-4)


def test_union_formula_errors():
    with pytest.raises(NotRegularError):
        union_energy_formula(path_graph(3))
    with pytest.raises(ValueError):
        union_energy_formula(add_loops(cycle_graph(4), {0}))


@pytest.mark.parametrize("g", [complete_graph(n) for n in range(1, 9)]
                         + [cycle_graph(n) for n in (4, 5, 6)] + [petersen_graph()])
def test_union_formula_matches_direct(g):
    assert union_energy_formula(g) == pytest.approx(lapack_union_energy(g), abs=1e-8)


def test_union_formula_regular_eigenvalue_not_largest():
    # C_6: theta_reg = 6 - 1 - 4 = 1 while the largest Seidel eigenvalue is 3
    g = cycle_graph(6)
    assert max(seidel_spectrum(g)) == pytest.approx(3)
    assert union_energy_formula(g) == pytest.approx(lapack_union_energy(g), abs=1e-8)


@settings(max_examples=300)
@given(st.floats(-1e6, 1e6), st.floats(0, 1e6))
def test_abs_max_identity(a, delta):
    assert abs(a + delta) + abs(a - delta) == pytest.approx(2 * max(abs(a), delta), rel=1e-12, abs=1e-9)
