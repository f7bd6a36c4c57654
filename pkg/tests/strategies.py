import hypothesis.strategies as st

from seidel_loops.graph import LoopedGraph, VertexSet, num_pairs


@st.composite
def looped_graphs(draw, min_n=0, max_n=8, loops=True):
    n = draw(st.integers(min_n, max_n))
    adj = draw(st.integers(0, (1 << num_pairs(n)) - 1))
    w = draw(st.integers(0, (1 << n) - 1)) if loops else 0
    return LoopedGraph(n, adj, w)


@st.composite
def graph_and_set(draw, min_n=0, max_n=8):
    g = draw(looped_graphs(min_n, max_n))
    x = draw(st.integers(0, (1 << g.n) - 1))
    return g, VertexSet(g.n, x)


@st.composite
def graph_and_perm(draw, min_n=0, max_n=8):
    g = draw(looped_graphs(min_n, max_n))
    perm = draw(st.permutations(range(g.n)))
    return g, list(perm)
