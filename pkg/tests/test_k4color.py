from __future__ import annotations

import random

import pytest

from conftest import brute_chromatic, nx_line_square
from strongclique import constructions as C
from strongclique.core import EdgeInstance, GraphError, Multigraph, line_graph_square
from strongclique.k4color import (
    ColouringTask,
    parse_subset,
    split_vertex,
    strong_colour_k4,
    v_geq2,
    validate,
)


def proper_on(g, A, colour):
    sq = nx_line_square(g)
    A = set(A)
    return all(colour[a] != colour[b] for a, b in sq.edges if a in A and b in A)


def test_gkd_small():
    g = C.gkd(4, 5).graph
    col = strong_colour_k4(g)
    assert col.delta_a == 5
    assert col.count <= 15
    assert proper_on(g, g.instances(), col.colour)


def test_single_bundle():
    g = Multigraph(2, {(0, 1): 4})
    col = strong_colour_k4(g)
    assert col.count == 4


def test_c5_uses_five():
    g = C.blown_c5(1).graph
    col = strong_colour_k4(g)
    assert col.count == 5 <= 3 * 2


def test_k4_rejected():
    g = Multigraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    with pytest.raises(GraphError, match="precondition"):
        strong_colour_k4(g)


def test_subset_only():
    g = Multigraph(4, {(0, 1): 3, (1, 2): 2, (2, 3): 1})
    A = parse_subset("e 0 1 2\ne 2 3 1\n", g)
    assert A == {EdgeInstance(0, 1, 0), EdgeInstance(0, 1, 1), EdgeInstance(2, 3, 0)}
    col = strong_colour_k4(g, A)
    assert set(col.colour) == A
    assert col.delta_a == 2 and col.count <= 6
    assert validate(g, A, col.colour) == []


def test_subset_rejects_foreign_instance():
    g = Multigraph(3, {(0, 1): 1})
    with pytest.raises(GraphError):
        ColouringTask(g, frozenset({EdgeInstance(0, 1, 1)}))
    with pytest.raises(GraphError):
        parse_subset("e 0 1 2\n", g)


def test_validate_catches_conflict():
    g = Multigraph.from_edges(3, [(0, 1), (1, 2)])
    x, y = g.instances()
    assert validate(g, [x, y], {x: 0, y: 0}) == [(x, y)]


def test_split_vertex():
    g = Multigraph(3, {(0, 1): 2, (1, 2): 3})
    s = split_vertex(g, 1, 0, 2)
    assert s.n == 5
    assert s.mult == {(0, 2): 1, (0, 3): 2, (2, 4): 3}
    assert v_geq2(s) == {0, 2}
    with pytest.raises(GraphError):
        split_vertex(g, 0, 1, 2)


@pytest.mark.parametrize("seed", range(40))
def test_random_sp_within_three_delta(seed):
    g = C.random_series_parallel(1 + seed % 15, 5, seed, max_instances=30).graph
    col = strong_colour_k4(g)
    assert col.count <= 3 * g.max_degree()
    assert proper_on(g, g.instances(), col.colour)


@pytest.mark.parametrize("seed", range(20))
def test_random_sp_random_subset(seed):
    rng = random.Random(seed)
    g = C.random_series_parallel(2 + seed % 10, 4, 1000 + seed, max_instances=25).graph
    A = frozenset(x for x in g.instances() if rng.random() < 0.6)
    col = strong_colour_k4(g, A)
    deg = [0] * g.n
    for x in A:
        deg[x.u] += 1
        deg[x.v] += 1
    assert col.count <= 3 * max(deg, default=0)
    assert proper_on(g, A, col.colour)


@pytest.mark.parametrize("seed", range(10))
def test_exact_index_below_bound(seed):
    g = C.random_series_parallel(1 + seed % 6, 2, 50 + seed, max_instances=9).graph
    assert brute_chromatic(nx_line_square(g)) <= 3 * g.max_degree()


def test_json():
    g = Multigraph(3, {(0, 1): 1, (1, 2): 1})
    out = strong_colour_k4(g).to_json()
    assert out["colours"] == 2 and out["valid"]
    assert len(out["assignment"]) == 2
