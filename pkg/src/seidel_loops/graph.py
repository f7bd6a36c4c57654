"""Finite simple graphs with optional self-loops.

Adjacency is stored as a Python integer used as a bitset over the upper
triangle, in the column-major pair order used by graph6::

    (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...

so the pair ``(i, j)`` with ``i < j`` lives at bit ``j*(j-1)//2 + i``.  The
loop set is a second integer bitmask over the vertices.  Python integers are
unbounded, so the same representation covers every order.

Degrees never count loops; loops only enter the Seidel matrix through its
diagonal.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence, Union


def pair_index(i: int, j: int) -> int:
    """Bit position of the unordered pair ``{i, j}`` (``i != j``)."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(n) for i in range(j))


def _full(n: int) -> int:
    return (1 << num_pairs(n)) - 1


def _mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _members(mask: int) -> Iterator[int]:
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``{0, ..., n-1}`` tied to a graph order."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative order {self.n}")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"vertex set {self.mask:#x} not contained in 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int] = ()) -> "VertexSet":
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for order {n}")
        return cls(n, _mask_of(vertices))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __contains__(self, v: int) -> bool:
        return bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return _members(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, self.mask ^ ((1 << self.n) - 1))


VertexLike = Union[VertexSet, Iterable[int]]


def _coerce(n: int, vertices: VertexLike) -> int:
    if isinstance(vertices, VertexSet):
        if vertices.n != n:
            raise ValueError(f"vertex set bound to order {vertices.n}, graph has order {n}")
        return vertices.mask
    return VertexSet.of(n, vertices).mask


@dataclass(frozen=True)
class LoopedGraph:
    """Graph ``G_W``: order ``n``, adjacency bitset ``adj``, loop bitmask ``loops``.

    Instances are immutable and compare bitwise.
    """

    n: int
    adj: int = 0
    loops: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative order {self.n}")
        if self.adj < 0 or self.adj >> num_pairs(self.n):
            raise ValueError("adjacency bits beyond the upper triangle")
        if self.loops < 0 or self.loops >> self.n:
            raise ValueError(f"loop set not contained in 0..{self.n - 1}")

    @property
    def sigma(self) -> int:
        return self.loops.bit_count()

    @property
    def num_edges(self) -> int:
        return self.adj.bit_count()

    @property
    def loop_set(self) -> VertexSet:
        return VertexSet(self.n, self.loops)

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return bool(self.adj >> pair_index(i, j) & 1)

    def has_loop(self, v: int) -> bool:
        return bool(self.loops >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [p for k, p in enumerate(_pairs(self.n)) if self.adj >> k & 1]

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, j in self.edges():
            deg[i] += 1
            deg[j] += 1
        return deg

    def adjacency_bits(self) -> list[int]:
        """Upper-triangle bits in pair order (length ``n(n-1)/2``)."""
        return [self.adj >> k & 1 for k in range(num_pairs(self.n))]

    def __repr__(self) -> str:
        loops = list(_members(self.loops))
        return f"LoopedGraph(n={self.n}, edges={self.edges()}, loops={loops})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]], loops: VertexLike = ()) -> LoopedGraph:
    """Build a graph from unordered pairs; duplicate pairs collapse."""
    adj = 0
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-pair ({u}, {v}) in edge list; pass loops separately")
        adj |= 1 << pair_index(u, v)
    return LoopedGraph(n, adj, _coerce(n, loops))


def complement(g: LoopedGraph) -> LoopedGraph:
    """Looped complement: toggles every distinct pair and every loop.

    Defined for every loop set, including the empty one.
    """
    return LoopedGraph(g.n, g.adj ^ _full(g.n), g.loops ^ ((1 << g.n) - 1))


@lru_cache(maxsize=4096)
def cut_mask(n: int, x_mask: int) -> int:
    """Bitset of pairs with exactly one endpoint in ``x_mask``."""
    mask = 0
    for k, (i, j) in enumerate(_pairs(n)):
        if (x_mask >> i ^ x_mask >> j) & 1:
            mask |= 1 << k
    return mask


def seidel_switch(g: LoopedGraph, X: VertexLike) -> LoopedGraph:
    """Flip adjacency across the cut ``(X, V \\ X)``; loops are untouched."""
    return LoopedGraph(g.n, g.adj ^ cut_mask(g.n, _coerce(g.n, X)), g.loops)


def _shifted_adj(g: LoopedGraph, offset: int) -> int:
    adj = 0
    for i, j in g.edges():
        adj |= 1 << pair_index(i + offset, j + offset)
    return adj


def disjoint_union(g: LoopedGraph, h: LoopedGraph) -> LoopedGraph:
    """``g`` on vertices ``0..n_g-1`` followed by ``h`` on ``n_g..``."""
    n = g.n + h.n
    # g's pairs keep their indices: pair order is prefix-stable in j.
    return LoopedGraph(n, g.adj | _shifted_adj(h, g.n), g.loops | h.loops << g.n)


def join(g: LoopedGraph, h: LoopedGraph) -> LoopedGraph:
    u = disjoint_union(g, h)
    cross = cut_mask(u.n, (1 << g.n) - 1)
    return LoopedGraph(u.n, u.adj | cross, u.loops)


def add_loops(g: LoopedGraph, W: VertexLike) -> LoopedGraph:
    """Replace the loop set of ``g`` with ``W``."""
    return LoopedGraph(g.n, g.adj, _coerce(g.n, W))


def underlying(g: LoopedGraph) -> LoopedGraph:
    return LoopedGraph(g.n, g.adj, 0)


def regularity(g: LoopedGraph) -> Optional[int]:
    """Common degree ``r`` if every vertex has degree ``r``, else ``None``.

    The order-0 graph is reported as 0-regular.
    """
    deg = g.degrees()
    if not deg:
        return 0
    return deg[0] if all(d == deg[0] for d in deg) else None


def relabel(g: LoopedGraph, perm: Sequence[int]) -> LoopedGraph:
    """Graph whose vertex ``perm[v]`` plays the role of ``v`` in ``g``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertex set")
    edges = [(perm[i], perm[j]) for i, j in g.edges()]
    return from_edge_list(g.n, edges, [perm[v] for v in _members(g.loops)])


# Named families -------------------------------------------------------------

def empty_graph(n: int) -> LoopedGraph:
    return LoopedGraph(n)


def complete_graph(n: int) -> LoopedGraph:
    return LoopedGraph(n, _full(n))


def path_graph(n: int) -> LoopedGraph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> LoopedGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> LoopedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def all_graphs(n: int) -> Iterator[LoopedGraph]:
    """Every labeled loopless graph on ``n`` vertices, in bitset order."""
    for adj in range(1 << num_pairs(n)):
        yield LoopedGraph(n, adj)


def all_vertex_sets(n: int) -> Iterator[VertexSet]:
    for mask in range(1 << n):
        yield VertexSet(n, mask)
