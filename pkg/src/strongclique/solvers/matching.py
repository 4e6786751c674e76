"""Matchings: maximum matching, a Tutte--Berge cross-check, and matchings whose edges are pairwise joined."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import networkx as nx

from ..core import Multigraph, Pair, SimpleGraph, bits, underlying_simple
from .clique import max_clique
from .colouring import InstanceTooLarge

DEFAULT_TUTTE_BERGE_LIMIT = 16
DEFAULT_JOINED_LIMIT = 400


class InconsistentResult(AssertionError):
    """Two independent computations of the same quantity disagree."""


def _simple(g: Multigraph | SimpleGraph) -> SimpleGraph:
    return underlying_simple(g) if isinstance(g, Multigraph) else g


def matching_number(g: Multigraph | SimpleGraph) -> tuple[int, list[Pair]]:
    """Maximum matching of the underlying simple graph (blossom algorithm)."""
    h = _simple(g)
    nxg = nx.Graph()
    nxg.add_nodes_from(range(h.n))
    nxg.add_edges_from(h.sorted_edges())
    m = nx.max_weight_matching(nxg, maxcardinality=True)
    witness = sorted((min(a, b), max(a, b)) for a, b in m)
    return len(witness), witness


def odd_components(h: SimpleGraph, removed: int) -> int:
    """Number of odd-order components of ``h`` minus the vertex mask ``removed``."""
    left = ((1 << h.n) - 1) & ~removed
    odd = 0
    adj = h.adj
    while left:
        low = left & -left
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= left & ~comp
            comp |= nxt
            frontier = nxt
        left &= ~comp
        odd += comp.bit_count() & 1
    return odd


def tutte_berge_verify(g: Multigraph | SimpleGraph, limit: int = DEFAULT_TUTTE_BERGE_LIMIT) -> tuple[int, list[int]]:
    """Minimise ``(|U| - o(G-U) + |V|) / 2`` over all ``U`` and check it equals the matching number.

    Returns ``(mu, U)`` where ``U`` is the minimiser with the smallest bitmask.
    """
    h = _simple(g)
    if h.n > limit:
        raise InstanceTooLarge("vertex set", h.n, limit)
    best = None
    best_u = 0
    for u in range(1 << h.n):
        val = u.bit_count() - odd_components(h, u) + h.n
        if best is None or val < best:
            best, best_u = val, u
    if best is None:
        best = 0
    mu_tb = Fraction(best, 2)
    mu, _ = matching_number(h)
    if mu_tb != mu:
        raise InconsistentResult(f"Tutte-Berge gives {mu_tb} but maximum matching has {mu} edges")
    return mu, bits(best_u)


def joined_graph(h: SimpleGraph) -> SimpleGraph:
    """Graph on the edges of ``h``: two edges adjacent iff disjoint and joined by an edge."""
    pairs = h.sorted_edges()
    edges = []
    for i, j in combinations(range(len(pairs)), 2):
        a, b = pairs[i]
        c, d = pairs[j]
        if len({a, b, c, d}) < 4:
            continue
        reach = h.adj[a] | h.adj[b]
        if reach >> c & 1 or reach >> d & 1:
            edges.append((i, j))
    return SimpleGraph.from_edges(len(pairs), edges, tuple(pairs))


def pairwise_joined_matching_number(
    g: Multigraph | SimpleGraph, limit: int = DEFAULT_JOINED_LIMIT
) -> tuple[int, list[Pair]]:
    """Largest set of vertex-disjoint edges every two of which are joined by an edge."""
    h = _simple(g)
    m = len(h.edges)
    if m > limit:
        raise InstanceTooLarge("edge set", m, limit)
    if m == 0:
        return 0, []
    aux = joined_graph(h)
    size, witness = max_clique(aux)
    return size, [aux.labels[i] for i in witness]
