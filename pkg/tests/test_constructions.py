from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import is_k4_minor_free
from strongclique import constructions as C
from strongclique.core import GraphError, is_strong_clique, underlying_simple
from strongclique.solvers import strong_clique_number

import networkx as nx

GKD = [((4, 5), 12), ((4, 7), 18), ((5, 6), 21), ((5, 8), 30), ((6, 7), 30)]


@pytest.mark.parametrize("kd,size", GKD)
def test_gkd_q_is_strong_clique_of_formula_size(kd, size):
    con = C.gkd(*kd)
    q = con.extra["Q"]
    assert C.gkd_q_formula(*kd) == size
    assert len(q) == size
    assert is_strong_clique(con.graph, q)
    assert con.graph.max_degree() == kd[1]


def test_gkd_rejects_bad_parity():
    with pytest.raises(GraphError):
        C.gkd(4, 6)
    with pytest.raises(GraphError):
        C.gkd(3, 6)


def test_gkd_small_clique_is_maximum():
    con = C.gkd(4, 5)
    assert strong_clique_number(con.graph)[0] == 12


@pytest.mark.parametrize("kd", [(5, 6), (5, 7), (6, 7)])
def test_skd_degree_and_closed_form(kd):
    con = C.skd(*kd)
    assert con.graph.max_degree() == kd[1]
    assert con.claims["strong_clique_closed_form"] == C.skd_closed_form(*kd)


def test_skd_closed_form_values():
    assert [C.skd_closed_form(5, 6), C.skd_closed_form(5, 7), C.skd_closed_form(6, 7)] == [17, 21, 23]


def test_blown_c5():
    con = C.blown_c5(2)
    g = con.graph
    assert g.n == 10 and g.size == 20
    assert g.max_degree() == 4
    assert is_strong_clique(g, g.instances())
    assert con.claims["no_minor_of_order"] == Fraction(11, 2)


@pytest.mark.parametrize("k,delta", [(4, 4), (5, 5), (4, 6)])
def test_bipartite_pendant(k, delta):
    con = C.bipartite_pendant(k, delta)
    assert con.graph.max_degree() == delta
    assert strong_clique_number(con.graph)[0] == (k - 1) * (delta - 1) + 1


@pytest.mark.parametrize("k,delta", [(3, 4), (4, 5), (4, 6)])
def test_clique_pendant(k, delta):
    con = C.clique_pendant(k, delta)
    assert con.graph.max_degree() == delta
    assert strong_clique_number(con.graph)[0] == con.claims["strong_clique"]


def test_shannon_triangle():
    con = C.shannon_triangle(3)
    assert con.graph.size == 9 and con.graph.max_degree() == 6
    assert strong_clique_number(con.graph)[0] == 9


@pytest.mark.parametrize("seed", range(30))
def test_random_series_parallel_is_k4_minor_free(seed):
    con = C.random_series_parallel(1 + seed % 15, 5, seed, max_instances=30)
    g = con.graph
    assert g.size <= 30
    assert max(g.mult.values()) <= 5
    h = underlying_simple(g)
    nxg = nx.Graph(list(h.edges))
    assert nx.is_connected(nxg)
    assert is_k4_minor_free(nxg)


def test_random_series_parallel_deterministic():
    a = C.random_series_parallel(10, 3, 7).graph
    b = C.random_series_parallel(10, 3, 7).graph
    assert a == b


def test_random_series_parallel_max_instances_too_small():
    with pytest.raises(GraphError):
        C.random_series_parallel(12, 3, 1, max_instances=1)
