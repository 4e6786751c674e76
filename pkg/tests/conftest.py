"""Shared helpers and independent oracles (networkx or brute force)."""

from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from strongclique.core import Multigraph, SimpleGraph


def nx_line_square(g: Multigraph) -> nx.Graph:
    """L(G)^2 built by networkx: nodes are (u, v, copy)."""
    mg = nx.MultiGraph()
    mg.add_nodes_from(range(g.n))
    for (u, v), m in g.mult.items():
        for c in range(m):
            mg.add_edge(u, v, key=c)
    lg = nx.Graph(nx.line_graph(mg))
    sq = nx.power(lg, 2) if lg.number_of_nodes() else lg
    return nx.relabel_nodes(sq, {x: (min(x[0], x[1]), max(x[0], x[1]), x[2]) for x in sq.nodes})


def nx_graph(h: SimpleGraph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(h.n))
    out.add_edges_from(h.edges)
    return out


def brute_clique(h: nx.Graph) -> int:
    return max((len(c) for c in nx.find_cliques(h)), default=0)


def brute_chromatic(h: nx.Graph) -> int:
    """Plain backtracking over k = 1, 2, ... (no bounds, no heuristics)."""
    nodes = list(h.nodes)
    if not nodes:
        return 0
    nbrs = {v: set(h.neighbors(v)) for v in nodes}

    def extend(i, c, k):
        if i == len(nodes):
            return True
        v = nodes[i]
        for x in range(k):
            if all(c.get(u) != x for u in nbrs[v]):
                c[v] = x
                if extend(i + 1, c, k):
                    return True
                del c[v]
        return False

    k = 1
    while not extend(0, {}, k):
        k += 1
    return k


def is_k4_minor_free(h: nx.Graph) -> bool:
    """Series-parallel reduction: delete degree <= 1, suppress degree 2, merge parallels."""
    g = nx.Graph(h)
    changed = True
    while changed and g.number_of_nodes():
        changed = False
        for v in list(g.nodes):
            d = g.degree(v)
            if d <= 1:
                g.remove_node(v)
                changed = True
            elif d == 2:
                a, b = list(g.neighbors(v))
                g.remove_node(v)
                g.add_edge(a, b)
                changed = True
    return g.number_of_nodes() == 0


@st.composite
def multigraphs(draw, max_n: int = 7, max_mult: int = 3):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(len(pairs), 9)))
    mult = {p: draw(st.integers(1, max_mult)) for p in chosen}
    return Multigraph(n, mult)


@st.composite
def simple_graphs(draw, max_n: int = 8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return SimpleGraph.from_edges(n, chosen)


def cycle(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, itertools.combinations(range(n), 2))


def petersen() -> SimpleGraph:
    p = nx.petersen_graph()
    return SimpleGraph.from_edges(10, p.edges)


@pytest.fixture
def c5() -> Multigraph:
    return Multigraph.from_simple(cycle(5), "C5")


# acceptance lines collected by test_acceptance.py, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
