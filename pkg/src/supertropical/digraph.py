"""Weighted digraph of a square matrix: reduction to cycle edges, multicycles,
cyclic covers and Hall-condition certificates."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import networkx as nx
from networkx.algorithms import bipartite

from .element import BOTTOM, Element, s_prod
from .matrix import Matrix, _require_square, det_value, tropical_det

__all__ = [
    "Digraph",
    "Multicycle",
    "from_matrix",
    "reduced",
    "best_k_multicycle",
    "has_cyclic_cover",
    "hall_violation",
    "perfect_matching",
    "disjoint_cyclic_covers",
    "average_weight",
    "best_multicycle",
    "cycles_of",
    "DEFAULT_MAX_SUBSETS_N",
]

DEFAULT_MAX_SUBSETS_N = 12


@dataclass(frozen=True)
class Digraph:
    """Vertices ``0..n-1``; one edge ``(i, j, a_ij)`` per non-bottom entry."""

    n: int
    edges: tuple[tuple[int, int, Element], ...]

    def to_matrix(self) -> Matrix:
        rows = [[BOTTOM] * self.n for _ in range(self.n)]
        for i, j, w in self.edges:
            rows[i][j] = w
        return Matrix(rows)

    def edge_set(self) -> set[tuple[int, int]]:
        return {(i, j) for i, j, _ in self.edges}

    def out_degree(self, v: int) -> int:
        return sum(1 for i, _, _ in self.edges if i == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for _, j, _ in self.edges if j == v)

    def as_dict(self) -> dict:
        return {
            "vertices": list(range(self.n)),
            "edges": [{"source": i, "target": j, "weight": w} for i, j, w in self.edges],
        }


@dataclass(frozen=True)
class Multicycle:
    """Vertex-disjoint simple cycles, each a tuple of vertices in traversal order."""

    cycles: tuple[tuple[int, ...], ...]
    weight: Element

    @property
    def length(self) -> int:
        return sum(len(c) for c in self.cycles)


def from_matrix(A: Matrix) -> Digraph:
    n = _require_square(A, "digraph")
    edges = tuple((i, j, A[i, j]) for i in range(n) for j in range(n) if not A[i, j].is_bottom)
    return Digraph(n, edges)


def _scc_index(G: Digraph) -> dict[int, int]:
    g = nx.DiGraph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from((i, j) for i, j, _ in G.edges)
    comp = {}
    for k, scc in enumerate(nx.strongly_connected_components(g)):
        for v in scc:
            comp[v] = k
    return comp


def reduced(G: Digraph) -> Digraph:
    """Keep only edges lying on some cycle, i.e. inside one strongly connected component."""
    comp = _scc_index(G)
    return Digraph(G.n, tuple(e for e in G.edges if comp[e[0]] == comp[e[1]]))


def best_k_multicycle(G: Digraph, k: int, max_n: int = DEFAULT_MAX_SUBSETS_N) -> Element:
    """Supertropical sum of the weights of all k-multicycles.

    Aggregates the determinants of the principal k x k submatrices of the
    reduced digraph's matrix; ties between different vertex sets become ghosts.
    """
    if not 1 <= k <= G.n:
        raise ValueError(f"k must lie in 1..{G.n}, got {k}")
    if G.n > max_n:
        raise ValueError(f"principal-subset enumeration capped at n <= {max_n}, got n = {G.n}")
    A = reduced(G).to_matrix()
    total = BOTTOM
    for S in combinations(range(G.n), k):
        total = total + det_value(A.submatrix(S, S))
    return total


def best_multicycle(G: Digraph, k: int, max_n: int = DEFAULT_MAX_SUBSETS_N) -> Multicycle | None:
    """One k-multicycle of highest weight (lexicographically first vertex set),
    weighted by the full supertropical sum so that ties show as a ghost."""
    total = best_k_multicycle(G, k, max_n)
    if total.is_bottom:
        return None
    A = reduced(G).to_matrix()
    for S in combinations(range(G.n), k):
        d = tropical_det(A.submatrix(S, S))
        if d.value.value == total.value:
            cycles = tuple(tuple(S[t] for t in c) for c in cycles_of(d.witness))
            return Multicycle(cycles, total)
    raise AssertionError("no subset attains the best multicycle weight")


def _bipartite(G: Digraph) -> tuple[nx.Graph, list]:
    b = nx.Graph()
    top = [("r", i) for i in range(G.n)]
    b.add_nodes_from(top, bipartite=0)
    b.add_nodes_from((("c", j) for j in range(G.n)), bipartite=1)
    b.add_edges_from((("r", i), ("c", j)) for i, j, _ in G.edges)
    return b, top


def perfect_matching(G: Digraph) -> tuple[int, ...] | None:
    """A cyclic cover as a permutation (``perm[i]`` = successor of ``i``), if one exists."""
    b, top = _bipartite(G)
    m = bipartite.hopcroft_karp_matching(b, top_nodes=top)
    if sum(1 for v in top if v in m) < G.n:
        return None
    return tuple(m[("r", i)][1] for i in range(G.n))


def has_cyclic_cover(G: Digraph) -> bool:
    return perfect_matching(G) is not None


def hall_violation(G: Digraph) -> tuple[set[int], set[int]] | None:
    """Rows ``S`` and their neighbourhood ``N(S)`` with ``|N(S)| < |S|``, or ``None``.

    ``S`` is the set of rows reachable from unmatched rows by alternating paths
    of a maximum matching (the Konig cut), so it is maximal.
    """
    b, top = _bipartite(G)
    m = bipartite.hopcroft_karp_matching(b, top_nodes=top)
    if sum(1 for v in top if v in m) == G.n:
        return None
    cover = bipartite.to_vertex_cover(b, m, top_nodes=top)
    S = {i for i in range(G.n) if ("r", i) not in cover}
    N = {j for i, j, _ in G.edges if i in S}
    return S, N


def disjoint_cyclic_covers(G: Digraph) -> list[tuple[int, ...]]:
    """Greedily peel off edge-disjoint cyclic covers until none is left."""
    remaining = set(G.edge_set())
    weights = {(i, j): w for i, j, w in G.edges}
    covers = []
    while True:
        H = Digraph(G.n, tuple((i, j, weights[i, j]) for i, j in sorted(remaining)))
        perm = perfect_matching(H)
        if perm is None:
            return covers
        covers.append(perm)
        remaining -= set(enumerate(perm))


def cycles_of(perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    seen = set()
    out = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc = []
        v = start
        while v not in seen:
            seen.add(v)
            cyc.append(v)
            v = perm[v]
        out.append(tuple(cyc))
    return tuple(out)


def average_weight(A: Matrix, cycle: Sequence[int]) -> Element:
    """Weight of a closed path divided by its length (the length-th root)."""
    w = s_prod(A[cycle[t], cycle[(t + 1) % len(cycle)]] for t in range(len(cycle)))
    if w.is_bottom:
        return w
    return Element(w.value / len(cycle), w.layer)
