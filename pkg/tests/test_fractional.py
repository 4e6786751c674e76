from __future__ import annotations

from fractions import Fraction

import pytest

from strongclique import constructions as C
from strongclique.core import EdgeInstance, GraphError, Multigraph, underlying_simple
from strongclique.decompose import EdgeWeighting
from strongclique.fractional import (
    assemble,
    conjecture51_probe,
    expand_to_instances,
    finite_d_trend,
    is_cycles_and_double_edges,
    multiplicity_weighting,
    parse_part_colouring,
    part_colouring,
    reduce_and_colour,
    reduced_instance,
)
from strongclique.solvers import fractional_strong_chromatic_index


def c5():
    return C.blown_c5(1).graph


def test_c5_assembly():
    g = c5()
    a = assemble(g, reduce_and_colour(g), Fraction(5, 2))
    cert = a.certify()
    assert cert["instance_colouring_valid"] and cert["edge_coverage"] and cert["totals_agree"]
    assert a.total == 5 and a.bound == 5 and cert["within_bound"]


def test_g56_assembly():
    g = C.gkd(5, 6).graph
    parts = reduce_and_colour(g)
    a = assemble(g, parts, Fraction(9, 2))
    cert = a.certify()
    assert cert["instance_colouring_valid"] and cert["edge_coverage"]
    assert a.total <= a.bound == 27
    # never better than the optimum
    assert a.total >= fractional_strong_chromatic_index(g)


def test_double_edge():
    g = Multigraph(2, {(0, 1): 2})
    a = assemble(g, reduce_and_colour(g), 1)
    assert a.total == 2 and a.certify()["instance_colouring_valid"]


@pytest.mark.parametrize("seed", range(12))
def test_random_sp_assembly_certifies(seed):
    g = C.random_series_parallel(1 + seed % 8, 3, seed, max_instances=16).graph
    parts = reduce_and_colour(g)
    lam = max(pc.total for pc in parts) / 2
    a = assemble(g, parts, lam)
    cert = a.certify()
    assert cert["instance_colouring_valid"] and cert["edge_coverage"] and cert["totals_agree"]
    assert a.total >= fractional_strong_chromatic_index(g)


def test_reduced_instance_shape():
    g = Multigraph(5, {(0, 1): 1, (1, 2): 1, (0, 2): 1, (3, 4): 4})
    w = EdgeWeighting(underlying_simple(g), {(0, 1): 2, (1, 2): 2, (0, 2): 2, (3, 4): 4})
    ri = reduced_instance(g, w)
    assert ri.delta == 4
    assert ri.graph.mult == {(0, 1): 1, (0, 2): 1, (1, 2): 1, (3, 4): 2}
    assert len(ri.A) == 5
    assert is_cycles_and_double_edges(ri.graph, ri.A)


def test_reduced_instance_rejects_non_pattern():
    g = Multigraph(3, {(0, 1): 1, (1, 2): 1})
    with pytest.raises(GraphError):
        reduced_instance(g, multiplicity_weighting(g))


def test_assemble_rejects_bad_part():
    g = c5()
    parts = reduce_and_colour(g)
    broken = parse_part_colouring([], parts[0].reduced)
    with pytest.raises(GraphError, match="coverage"):
        assemble(g, [broken], 5)


def test_part_colouring_round_trip():
    g = c5()
    pc = reduce_and_colour(g)[0]
    again = parse_part_colouring(pc.to_json(), pc.reduced)
    assert again.sets == pc.sets and again.problems() == []


def test_expand_splits_copies():
    g = Multigraph(2, {(0, 1): 2})
    col = expand_to_instances(g, {((0, 1),): Fraction(2)})
    assert col.total == 2
    assert set(col.parts) == {(0,), (1,)}


def test_probe_margin_not_asserted():
    g = c5()
    rep = conjecture51_probe(g, g.instances(), 4)
    assert rep.chi_f == 5 and rep.bound == 6 and rep.margin == 1
    assert rep.minor_free
    with pytest.raises(GraphError):
        conjecture51_probe(g, g.instances()[:2], 4)


def test_finite_d_trend_c5():
    g = c5()
    rows = finite_d_trend(g, g.instances(), ds=(2, 4))
    assert [r["ratio"] for r in rows] == [5, 5]
    assert [r["max_degree"] for r in rows] == [4, 8]


def test_cycles_and_double_edges_predicate():
    g = Multigraph(4, {(0, 1): 2, (2, 3): 3})
    A = [EdgeInstance(0, 1, 0), EdgeInstance(0, 1, 1)]
    assert is_cycles_and_double_edges(g, A)
    assert not is_cycles_and_double_edges(g, A[:1])  # single copy of an isolated edge
    assert not is_cycles_and_double_edges(g, [EdgeInstance(2, 3, c) for c in range(3)])
