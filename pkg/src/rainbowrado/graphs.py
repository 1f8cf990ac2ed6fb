"""Oriented multigraphs, their incidence matrices and integer flows.

Sign convention: M[v, e] = +1 if v is the tail of e and -1 if it is the
head, so ker(M) is exactly the space of circulations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional, Sequence

import networkx as nx

from .colorings import Coloring
from .linalg import Matrix, rank
from .regularity import is_rainbow_regular
from .search import find_rainbow

FLOW_BOUND = 5


@dataclass(frozen=True)
class OrientedGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "OrientedGraph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def reoriented(self, flips: Sequence[bool]) -> "OrientedGraph":
        return OrientedGraph(
            self.n, tuple((v, u) if f else (u, v) for (u, v), f in zip(self.edges, flips))
        )

    def without_edges(self, drop) -> "OrientedGraph":
        drop = set(drop)
        return OrientedGraph(self.n, tuple(e for i, e in enumerate(self.edges) if i not in drop))

    def to_networkx(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges)
        return G


def component_count(G: OrientedGraph) -> int:
    return nx.number_connected_components(G.to_networkx())


def incidence_matrix(G: OrientedGraph) -> Matrix:
    rows = [[0] * G.m for _ in range(G.n)]
    for e, (u, v) in enumerate(G.edges):
        rows[u][e] = 1
        rows[v][e] = -1
    M = Matrix.from_rows(rows, G.m)
    c = component_count(G)
    if rank(M) != G.n - c:
        raise AssertionError(f"rank {rank(M)} != n - c = {G.n - c}")
    return M


def components_3_edge_connected(G: OrientedGraph) -> bool:
    """No component is split by deleting one or two of its edges."""
    c = component_count(G)
    for size in (1, 2):
        for drop in combinations(range(G.m), size):
            if component_count(G.without_edges(drop)) != c:
                return False
    return True


def incidence_rank_test(G: OrientedGraph) -> bool:
    """Deleting any two columns (any single one when m = 1) keeps rank(M)."""
    M = incidence_matrix(G)
    r = rank(M)
    keep_size = max(G.m - 2, 0)
    for keep in combinations(range(G.m), keep_size):
        if rank(M.select_columns(keep)) != r:
            return False
    return True


def _fundamental_cycles(G: OrientedGraph):
    """Spanning forest plus one signed cycle vector per non-tree edge."""
    parent: dict[int, Optional[tuple[int, int]]] = {}
    tree = set()
    adj = [[] for _ in range(G.n)]
    for e, (u, v) in enumerate(G.edges):
        adj[u].append((v, e))
        adj[v].append((u, e))
    for root in range(G.n):
        if root in parent:
            continue
        parent[root] = None
        stack = [root]
        while stack:
            u = stack.pop()
            for v, e in adj[u]:
                if v not in parent:
                    parent[v] = (u, e)
                    tree.add(e)
                    stack.append(v)

    def path_to_root(x):
        out = []
        while parent[x] is not None:
            p, e = parent[x]
            out.append((x, p, e))
            x = p
        return out

    cycles = []
    for e, (u, v) in enumerate(G.edges):
        if e in tree:
            continue
        # u -> v along e, then v up to the root and back down to u; the
        # part above their common ancestor is walked both ways and cancels.
        vec = [0] * G.m
        vec[e] = 1
        pu, pv = path_to_root(u), path_to_root(v)
        for x, p, te in pv:
            vec[te] += 1 if G.edges[te] == (x, p) else -1
        for x, p, te in pu:
            vec[te] += 1 if G.edges[te] == (p, x) else -1
        cycles.append((e, vec))
    return cycles


def nowhere_zero_flow(G: OrientedGraph, bound: int = FLOW_BOUND) -> Optional[tuple[int, ...]]:
    """An integer circulation with 1 <= |phi(e)| <= bound on every edge.

    The value on each non-tree edge equals its fundamental-cycle coefficient,
    so those coefficients range over +-1..+-bound; the search deepens the
    largest allowed |coefficient| one step at a time.
    """
    if G.m == 0:
        return ()
    if _has_bridge(G):
        # A bridge carries zero net flow in every circulation.
        return None
    cycles = _fundamental_cycles(G)
    if not cycles:
        return None
    for b in range(1, bound + 1):
        # Positive values first so an already positive flow needs no flips.
        values = [s * v for v in range(1, b + 1) for s in (1, -1)]
        for coeffs in product(values, repeat=len(cycles)):
            if max(abs(c) for c in coeffs) != b:
                continue
            phi = [0] * G.m
            for c, (_, vec) in zip(coeffs, cycles):
                for e, x in enumerate(vec):
                    if x:
                        phi[e] += c * x
            if all(0 < abs(x) <= bound for x in phi):
                return tuple(phi)
    return None


def _has_bridge(G: OrientedGraph) -> bool:
    c = component_count(G)
    return any(component_count(G.without_edges([e])) != c for e in range(G.m))


def positive_flow(G: OrientedGraph) -> Optional[tuple[tuple[bool, ...], tuple[int, ...]]]:
    """Reorientation flags and a flow with every value in 1..5 on the
    reoriented graph, or None if G has no nowhere-zero 6-flow."""
    phi = nowhere_zero_flow(G)
    if phi is None:
        return None
    flips = tuple(x < 0 for x in phi)
    return flips, tuple(abs(x) for x in phi)


def rainbow_flow(G: OrientedGraph, c: Coloring) -> Optional[tuple[int, ...]]:
    """A circulation on G's own orientation with values in [1..N] whose edge
    values get pairwise distinct colors."""
    if G.m == 0:
        return None
    rep = find_rainbow(incidence_matrix(G), c)
    return rep.witness if rep.found else None


class CorollaryMismatch(AssertionError):
    pass


def check_corollary(G: OrientedGraph) -> dict:
    """3-edge-connected components against the rank test plus a positive
    flow; on success the reoriented incidence matrix must be rainbow regular."""
    lhs = components_3_edge_connected(G)
    report = {
        "n": G.n,
        "m": G.m,
        "components": component_count(G),
        "rank": rank(incidence_matrix(G)) if G.m else 0,
        "three_edge_connected": lhs,
    }
    if G.m == 0:
        # Edgeless: no cut, empty flow; both sides hold vacuously.
        report.update(rank_test=True, positive_flow=[], flips=[], rhs=True, rainbow_regular=None)
        return report
    rank_ok = incidence_rank_test(G)
    pf = positive_flow(G)
    rhs = rank_ok and pf is not None
    report.update(
        rank_test=rank_ok,
        positive_flow=list(pf[1]) if pf else None,
        flips=[int(f) for f in pf[0]] if pf else None,
        rhs=rhs,
        rainbow_regular=None,
    )
    if lhs != rhs:
        raise CorollaryMismatch(f"3-edge-connected = {lhs} but rank test / flow side = {rhs}: {G}")
    if lhs:
        H = G.reoriented(pf[0])
        M = incidence_matrix(H)
        if any(x != 0 for x in M.apply(pf[1])):
            raise CorollaryMismatch("positive flow is not a circulation")
        verdict = is_rainbow_regular(M)
        if not verdict.regular:
            raise CorollaryMismatch(f"reoriented incidence matrix not rainbow regular: {verdict.reason}")
        report["rainbow_regular"] = True
    return report


def complete_graph(n: int) -> OrientedGraph:
    return OrientedGraph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> OrientedGraph:
    return OrientedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> OrientedGraph:
    return OrientedGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def prism_graph() -> OrientedGraph:
    return OrientedGraph.from_edges(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    )


def disjoint_union(G: OrientedGraph, H: OrientedGraph) -> OrientedGraph:
    return OrientedGraph(G.n + H.n, G.edges + tuple((u + G.n, v + G.n) for u, v in H.edges))


def from_networkx(G: nx.Graph) -> OrientedGraph:
    nodes = sorted(G.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return OrientedGraph.from_edges(len(nodes), sorted((min(index[u], index[v]), max(index[u], index[v])) for u, v in G.edges()))
