from __future__ import annotations

import json
from fractions import Fraction

import pytest

from conftest import complete, cycle
from strongclique import constructions as C
from strongclique import verify as V
from strongclique.core import Multigraph, SimpleGraph


def test_registry_statuses():
    assert set(V.REGISTRY) >= {"main_bound", "k4_theorem", "decomposition", "conjecture51_probe"}
    assert V.REGISTRY["conjecture51_probe"].status == "conjecture"
    assert V.REGISTRY["construction_formulas"].status == "construction"
    assert V.REGISTRY["chvatal_hanson"].status == "theorem"


def test_main_bound_pass_and_skips():
    rep = V.check_main_bound(C.gkd(4, 5).graph, 4)
    assert rep.verdict == V.PASS and rep.lhs == 12 and rep.rhs == 15
    assert V.check_main_bound(Multigraph.from_simple(complete(5)), 4).verdict == V.SKIPPED
    assert V.check_main_bound(Multigraph.from_simple(cycle(4)), 3).verdict == V.SKIPPED


def test_k4_theorem_report():
    rep = V.check_k4_theorem(C.gkd(4, 5).graph)
    assert rep.verdict == V.PASS
    assert rep.witnesses["exact"] == 12


def test_chvatal_hanson_rhs():
    # odd cliques attain the bound
    for n in (5, 7, 9):
        mu, delta = n // 2, n - 1
        assert V.chvatal_hanson_rhs(mu, delta) == n * (n - 1) // 2
    assert V.chvatal_hanson_rhs(0, 0) == 0


def test_final_conjecture_rhs():
    assert V.final_conjecture_rhs(3, 4) == Fraction(10)
    assert V.final_conjecture_rhs(3, 5) == 10


def test_isclique_skips_far_edges():
    p = Multigraph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
    assert V.check_isclique_bound(p).verdict == V.SKIPPED


def test_omnibus_on_petersen_like():
    h = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)])
    reps = V.check_omnibus_certifiers(h)
    assert len(reps) == 3 and all(r.verdict == V.PASS for r in reps)


def test_sharpness_all_equal():
    reps = V.sharpness_reports()
    assert len(reps) == 5
    assert all(r.verdict == V.PASS and r.lhs == r.rhs for r in reps)


def test_skd_finding():
    reps = V.skd_reports(5, 6)
    finding = [r for r in reps if r.verdict == V.FINDING]
    assert len(finding) == 1
    assert finding[0].lhs == 21 and finding[0].rhs == 17


def test_blown_c5_finding():
    reps = V.blown_c5_reports(1)
    finding = [r for r in reps if r.verdict == V.FINDING]
    assert len(finding) == 1 and "K_3" in finding[0].instance


def test_findings_are_not_failures():
    reps = V.skd_reports(5, 6) + V.blown_c5_reports(1)
    assert V.theorem_failures(reps) == []


def test_conjecture_failure_not_counted():
    rep = V.ClaimReport("conjecture51_probe", "x", Fraction(9), Fraction(6), False, V.FAIL)
    assert V.theorem_failures([rep]) == []
    rep2 = V.ClaimReport("main_bound", "x", Fraction(9), Fraction(6), False, V.FAIL)
    assert V.theorem_failures([rep2]) == [rep2]


def test_generators_deterministic():
    assert V.random_sp(3, 0) == V.random_sp(3, 0)
    assert V.random_simple(3, 1) == V.random_simple(3, 1)
    assert V.random_weighting(3, 2).weight == V.random_weighting(3, 2).weight


def test_smoke_suite_has_no_theorem_failures():
    reps = V.run_suite("smoke", seed=0)
    assert V.theorem_failures(reps) == []
    counts = V.summary(reps)
    assert counts["construction_formulas"].get(V.FINDING, 0) >= 2
    data = json.loads(V.reports_json(reps))
    assert len(data) == len(reps)
    assert all(isinstance(d["verdict"], str) for d in data)


def test_run_suite_claim_filter_and_errors():
    reps = V.run_suite("smoke", seed=1, claim="chvatal_hanson")
    assert reps and {r.claim for r in reps} == {"chvatal_hanson"}
    with pytest.raises(ValueError):
        V.run_suite("huge")
    with pytest.raises(ValueError):
        V.run_suite("smoke", claim="nope")
