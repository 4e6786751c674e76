from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import assume, given, settings

from conftest import brute_chromatic, brute_clique, complete, cycle, multigraphs, nx_graph, nx_line_square, petersen, simple_graphs
from strongclique.core import Multigraph, SimpleGraph, bits, is_strong_clique, line_graph_square, underlying_simple
from strongclique.solvers import (
    InstanceTooLarge,
    LPError,
    chromatic_number,
    clique_number,
    colour_classes,
    fractional_chromatic,
    fractional_strong_chromatic_index,
    fractional_strong_chromatic_index_direct,
    fractional_strong_colouring,
    is_proper_edge_colouring,
    matching_number,
    max_clique,
    maximal_stable_sets,
    pairwise_joined_matching_number,
    solve_cover,
    strong_chromatic_index,
    strong_clique_number,
    tutte_berge_verify,
    vizing_edge_colouring,
    weighted_fractional_chromatic,
)

# ----------------------------------------------------------------- clique


@settings(max_examples=120, deadline=None)
@given(simple_graphs(max_n=10))
def test_max_clique_matches_networkx(h):
    size, witness = max_clique(h)
    assert size == brute_clique(nx_graph(h))
    assert len(witness) == size and h.is_clique(witness)


def test_clique_number_known():
    assert clique_number(complete(6)) == 6
    assert clique_number(cycle(5)) == 2
    assert clique_number(petersen()) == 2


# ----------------------------------------------------------------- colouring


@settings(max_examples=80, deadline=None)
@given(simple_graphs(max_n=7))
def test_chromatic_number_matches_brute_force(h):
    k, col = chromatic_number(h)
    assert col.is_proper(h) and col.count == k
    assert k == brute_chromatic(nx_graph(h))


@pytest.mark.parametrize("h,k", [(cycle(5), 3), (cycle(6), 2), (complete(5), 5), (petersen(), 3)])
def test_chromatic_number_known(h, k):
    assert chromatic_number(h)[0] == k


def test_chromatic_limit():
    with pytest.raises(InstanceTooLarge):
        chromatic_number(complete(5), limit=4)


# ----------------------------------------------------------------- LP / fractional


def test_solve_cover_small():
    # rows 0,1,2; columns {0,1}, {1,2}, {0,2}: the triangle cover costs 3/2
    sol = solve_cover([0b011, 0b110, 0b101], [1, 1, 1])
    assert sol.value == Fraction(3, 2)
    assert sum(sol.dual) == sol.value


def test_solve_cover_uncovered_row():
    with pytest.raises(LPError):
        solve_cover([0b01], [1, 1])


def _certify_fractional(h, val, col, dual):
    assert col.is_valid(h)
    assert col.total == val
    assert sum(dual) == val
    for s in maximal_stable_sets(h):
        assert sum(dual[v] for v in bits(s)) <= 1


@settings(max_examples=60, deadline=None)
@given(simple_graphs(max_n=8))
def test_fractional_chromatic_certified(h):
    assume(h.n > 0)
    val, col, dual = weighted_fractional_chromatic(h, [1] * h.n)
    _certify_fractional(h, val, col, dual)
    alpha = max(len(s) for s in nx.find_cliques(nx.complement(nx_graph(h))))
    assert Fraction(h.n, alpha) <= val <= chromatic_number(h)[0]
    assert clique_number(h) <= val


@pytest.mark.parametrize(
    "h,value",
    [(cycle(5), Fraction(5, 2)), (cycle(7), Fraction(7, 3)), (petersen(), Fraction(5, 2)), (complete(4), Fraction(4))],
)
def test_fractional_chromatic_known(h, value):
    assert fractional_chromatic(h)[0] == value


def test_weighted_demand():
    val, col, dual = weighted_fractional_chromatic(cycle(5), [2, 2, 2, 2, 2])
    assert val == 5
    assert col.is_valid(cycle(5), [2] * 5)


# ----------------------------------------------------------------- Vizing


@settings(max_examples=100, deadline=None)
@given(simple_graphs(max_n=10))
def test_vizing_colouring(h):
    col = vizing_edge_colouring(h)
    assert set(col) == set(h.edges)
    assert is_proper_edge_colouring(h, col)
    assert len(set(col.values())) <= h.max_degree() + 1
    classes = colour_classes(col)
    assert sum(len(c) for c in classes) == len(h.edges)


def test_vizing_petersen_needs_four():
    col = vizing_edge_colouring(petersen())
    assert len(set(col.values())) == 4  # Petersen is class two


# ----------------------------------------------------------------- matchings


@settings(max_examples=100, deadline=None)
@given(simple_graphs(max_n=9))
def test_matching_number_and_tutte_berge(h):
    mu, witness = matching_number(h)
    assert mu == len(nx.max_weight_matching(nx_graph(h), maxcardinality=True))
    assert len(witness) == mu
    assert len({v for e in witness for v in e}) == 2 * mu
    mu2, _ = tutte_berge_verify(h)
    assert mu2 == mu


@settings(max_examples=60, deadline=None)
@given(simple_graphs(max_n=7))
def test_pairwise_joined_matching_brute_force(h):
    assume(len(h.edges) <= 12)
    size, witness = pairwise_joined_matching_number(h)
    es = h.sorted_edges()

    def ok(sub):
        verts = [v for e in sub for v in e]
        if len(set(verts)) != len(verts):
            return False
        return all(
            any(h.has_edge(x, y) for x in a for y in b) for a, b in combinations(sub, 2)
        )

    best = max((r for r in range(len(es) + 1) for sub in combinations(es, r) if ok(sub)), default=0)
    assert size == best
    assert ok(witness) and len(witness) == size


# ----------------------------------------------------------------- strong parameters


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_n=6, max_mult=3))
def test_strong_clique_number_oracle(g):
    assume(g.size > 0)
    size, witness = strong_clique_number(g)
    assert size == brute_clique(nx_line_square(g))
    assert is_strong_clique(g, witness) and len(witness) == size


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_n=6, max_mult=2))
def test_strong_chromatic_index_oracle(g):
    assume(0 < g.size <= 8)
    k, colour = strong_chromatic_index(g)
    assert k == brute_chromatic(nx_line_square(g))
    sq = line_graph_square(g)
    for a, b in sq.edges:
        assert colour[sq.labels[a]] != colour[sq.labels[b]]


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_n=6, max_mult=3))
def test_fractional_strong_compressed_equals_direct(g):
    assume(0 < g.size <= 14)
    compressed = fractional_strong_chromatic_index(g)
    direct, col = fractional_strong_chromatic_index_direct(g)
    assert compressed == direct
    assert strong_clique_number(g)[0] <= compressed <= strong_chromatic_index(g)[0]


def test_fractional_strong_parts_are_induced_matchings():
    g = Multigraph(5, {(0, 1): 2, (1, 2): 1, (2, 3): 3, (3, 4): 1, (0, 4): 1})
    val, parts = fractional_strong_colouring(g)
    h = underlying_simple(g)
    cover = {p: Fraction(0) for p in g.mult}
    for m, w in parts.items():
        assert w > 0
        for a, b in combinations(m, 2):
            assert not set(a) & set(b)
            assert not any(h.has_edge(x, y) for x in a for y in b)
        for e in m:
            cover[e] += w
    assert all(cover[p] >= g.mult[p] for p in g.mult)
    assert sum(parts.values()) == val


def test_strong_anchors(c5):
    assert strong_clique_number(c5)[0] == 5
    assert strong_chromatic_index(c5)[0] == 5
    assert fractional_strong_chromatic_index(c5) == 5
    assert fractional_chromatic(cycle(5))[0] == Fraction(5, 2)


def test_empty_strong():
    g = Multigraph(3, {})
    assert strong_clique_number(g) == (0, [])
    assert strong_chromatic_index(g) == (0, {})
    assert fractional_strong_chromatic_index(g) == 0
