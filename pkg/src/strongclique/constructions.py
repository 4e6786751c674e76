"""Generators for the explicit multigraph families.

Every generator returns a :class:`Construction`: the labelled multigraph plus the
closed-form values claimed for it, so that the verification harness can compare
them with exact solver output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb, floor

from .core import EdgeInstance, GraphError, Multigraph, pair


@dataclass(frozen=True)
class Construction:
    graph: Multigraph
    family: str
    params: dict
    claims: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)


class _Builder:
    def __init__(self) -> None:
        self.labels: dict[str, int] = {}
        self.mult: dict[tuple[int, int], int] = {}

    def vertex(self, name: str) -> int:
        if name not in self.labels:
            self.labels[name] = len(self.labels)
        return self.labels[name]

    def edge(self, a: str, b: str, m: int = 1) -> None:
        if m <= 0:
            return
        p = pair(self.vertex(a), self.vertex(b))
        self.mult[p] = self.mult.get(p, 0) + m

    def clique(self, names: list[str]) -> None:
        for i, a in enumerate(names):
            for b in names[i + 1 :]:
                self.edge(a, b)

    def build(self, name: str) -> Multigraph:
        return Multigraph(len(self.labels), self.mult, name, self.labels)


def gkd_q_formula(k: int, delta: int) -> Fraction:
    return Fraction(3, 2) * (k - 2) * delta - Fraction(3, 2) * (k * k - 7 * k + 14)


def gkd(k: int, delta: int) -> Construction:
    """Three cliques ``A, B, C`` threaded by Shannon triangles, around a triangle with pendant bundles.

    Requires ``k >= 4``, ``delta >= k - 2`` and ``delta + k + 1`` even. The claim
    ``Q`` is every edge instance outside the cliques on ``A``, ``B`` and ``C``.
    """
    if k < 4 or delta < k - 2 or (delta + k + 1) % 2:
        raise GraphError(f"gkd needs k >= 4, delta >= k - 2 and delta + k + 1 even (got k={k}, delta={delta})")
    r = k - 4
    b = _Builder()
    for x in "abc":
        b.vertex(x)
    for x in "abc":
        b.vertex(x + "'")
    for x in "abc":
        for i in range(1, r + 1):
            b.vertex(f"{x}_{i}")
    shannon = (delta - (k - 3)) // 2
    for i in range(1, r + 1):
        ai, bi, ci = f"a_{i}", f"b_{i}", f"c_{i}"
        b.edge(ai, bi, shannon)
        b.edge(bi, ci, shannon)
        b.edge(ai, ci, shannon)
        b.edge(ai, "b")
        b.edge(ai, "c")
        b.edge(bi, "a")
        b.edge(bi, "c")
        b.edge(ci, "a")
        b.edge(ci, "b")
    b.clique(["a", "b", "c"])
    for x in "abc":
        b.clique([f"{x}_{i}" for i in range(1, r + 1)])
    pend = delta - 2 * (k - 3)
    for x in "abc":
        b.edge(x, x + "'", pend)
    g = b.build(f"G_{{{k},{delta}}}")
    inner = set()
    for x in "abc":
        idx = [g.labels[f"{x}_{i}"] for i in range(1, r + 1)]
        inner.update(pair(u, v) for j, u in enumerate(idx) for v in idx[j + 1 :])
    q = [e for e in g.instances() if e.pair not in inner]
    return Construction(
        g,
        "gkd",
        {"k": k, "delta": delta},
        {"q_size": gkd_q_formula(k, delta), "max_degree": delta, "minor_free_k": k},
        {"Q": q},
    )


def skd_closed_form(k: int, delta: int) -> int:
    return ceil((k - Fraction(1, 2)) * delta - comb(k - 1, 2) - k + Fraction(1, 2))


def skd(k: int, delta: int) -> Construction:
    """Clique-minus-an-edge on ``A`` with pendant bundles and a near-Shannon triangle ``a_1 c d``."""
    if k < 5 or delta < k - 2:
        raise GraphError(f"skd needs k >= 5 and delta >= k - 2 (got k={k}, delta={delta})")
    b = _Builder()
    A = [f"a_{i}" for i in range(1, k)]
    for name in A:
        b.vertex(name)
    for i in range(2, k):
        b.vertex(f"b_{i}")
    b.vertex("c")
    b.vertex("d")
    for i, x in enumerate(A):
        for y in A[i + 1 :]:
            if {x, y} != {"a_1", "a_2"}:
                b.edge(x, y)
    for i in range(2, k):
        b.edge(f"a_{i}", f"b_{i}", delta - (k - 1))
    b.edge("a_1", "c", ceil(Fraction(delta - (k - 3), 2)))
    b.edge("a_1", "d", floor(Fraction(delta - (k - 3), 2)))
    b.edge("c", "d", ceil(Fraction(delta - 3, 2)))
    half = (k - 1) // 2
    for i in range(2, 2 + half):
        b.edge("c", f"a_{i}")
    b.edge("d", "a_2")
    for i in range(2 + half, k):
        b.edge("d", f"a_{i}")
    g = b.build(f"S_{{{k},{delta}}}")
    return Construction(
        g,
        "skd",
        {"k": k, "delta": delta},
        {"strong_clique_closed_form": skd_closed_form(k, delta), "max_degree": delta, "minor_free_k": k},
        {"edge_count": g.size},
    )


def blown_c5(t: int) -> Construction:
    """The 5-cycle with every vertex replaced by a stable set of size ``t``."""
    if t < 1:
        raise GraphError("t must be at least 1")
    b = _Builder()
    for i in range(5):
        for j in range(t):
            b.vertex(f"v{i}_{j}")
    for i in range(5):
        for x in range(t):
            for y in range(t):
                b.edge(f"v{i}_{x}", f"v{(i + 1) % 5}_{y}")
    g = b.build(f"C5[{t}]")
    return Construction(
        g,
        "blowc5",
        {"t": t},
        {
            "strong_clique": 5 * t * t,
            "max_degree": 2 * t,
            # no K_{5t/2 + 1/2} minor, claimed for odd t
            "no_minor_of_order": Fraction(5 * t + 1, 2),
        },
    )


def bipartite_pendant(k: int, delta: int) -> Construction:
    """``K_{k-2,delta}`` with ``delta - k + 2`` pendant edges on one vertex of the larger side."""
    if k < 4 or delta < k - 2:
        raise GraphError(f"bipartite_pendant needs k >= 4 and delta >= k - 2 (got k={k}, delta={delta})")
    b = _Builder()
    small = [f"x_{i}" for i in range(1, k - 1)]
    large = [f"y_{j}" for j in range(1, delta + 1)]
    for name in small + large:
        b.vertex(name)
    for x in small:
        for y in large:
            b.edge(x, y)
    for i in range(1, delta - k + 3):
        b.edge("y_1", f"p_{i}")
    g = b.build(f"K_{{{k - 2},{delta}}}+pendants")
    return Construction(
        g,
        "bipartite-pendant",
        {"k": k, "delta": delta},
        {"strong_clique": (k - 1) * (delta - 1) + 1, "max_degree": delta, "minor_free_k": k},
    )


def clique_pendant(k: int, delta: int) -> Construction:
    """``K_k`` with ``delta - k + 1`` pendant edges on every vertex."""
    if k < 1 or delta <= k:
        raise GraphError(f"clique_pendant needs delta > k (got k={k}, delta={delta})")
    b = _Builder()
    core = [f"x_{i}" for i in range(1, k + 1)]
    for name in core:
        b.vertex(name)
    b.clique(core)
    for i, x in enumerate(core, 1):
        for j in range(1, delta - k + 2):
            b.edge(x, f"p_{i}_{j}")
    g = b.build(f"K_{k}+pendants({delta})")
    return Construction(
        g,
        "clique-pendant",
        {"k": k, "delta": delta},
        {"strong_clique": k * (delta - k + 1) + comb(k, 2), "max_degree": delta},
    )


def shannon_triangle(m: int) -> Construction:
    if m < 1:
        raise GraphError("multiplicity must be at least 1")
    b = _Builder()
    b.edge("x", "y", m)
    b.edge("y", "z", m)
    b.edge("x", "z", m)
    g = b.build(f"Shannon({m})")
    return Construction(g, "shannon", {"m": m}, {"strong_clique": 3 * m, "max_degree": 2 * m})


def random_series_parallel(budget: int, max_mult: int, seed: int, max_instances: int | None = None) -> Construction:
    """Random two-terminal series-parallel multigraph.

    The shape is a random composition tree with ``budget`` leaves (single edges).
    Internal nodes are series composition, parallel composition, or a pendant
    composition that glues the second graph onto a terminal of the first by one
    terminal. Multiplicities are then drawn uniformly from ``1..max_mult``. All
    three operations keep the underlying graph free of ``K_4`` minors. With
    ``max_instances`` the multiplicities are lowered (largest first) until the
    instance count fits; it must be at least ``budget``.
    """
    if budget < 1 or max_mult < 1:
        raise GraphError("budget and max_mult must be positive")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    counter = [0]

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    def compose(size: int, s: int, t: int) -> None:
        if size == 1:
            edges.append((s, t))
            return
        left = rng.randint(1, size - 1)
        op = rng.choices(("series", "parallel", "pendant"), weights=(4, 4, 1))[0]
        if op == "series":
            mid = fresh()
            compose(left, s, mid)
            compose(size - left, mid, t)
        elif op == "parallel":
            compose(left, s, t)
            compose(size - left, s, t)
        else:
            compose(left, s, t)
            compose(size - left, rng.choice((s, t)), fresh())

    s0, t0 = fresh(), fresh()
    compose(budget, s0, t0)
    distinct = sorted({pair(u, v) for u, v in edges})
    mult = {p: rng.randint(1, max_mult) for p in distinct}
    if max_instances is not None:
        if max_instances < len(distinct):
            raise GraphError("max_instances is below the number of distinct edges")
        while sum(mult.values()) > max_instances:
            p = max(mult, key=lambda q: (mult[q], q))
            mult[p] -= 1
    g = Multigraph(counter[0], mult, f"sp(budget={budget},m<={max_mult},seed={seed})")
    return Construction(g, "random-sp", {"budget": budget, "max_mult": max_mult, "seed": seed, "max_instances": max_instances})


def instances_of(g: Multigraph, pairs) -> list[EdgeInstance]:
    wanted = {pair(u, v) for u, v in pairs}
    return [e for e in g.instances() if e.pair in wanted]


FAMILIES = {
    "gkd": gkd,
    "skd": skd,
    "blowc5": blown_c5,
    "bipartite-pendant": bipartite_pendant,
    "clique-pendant": clique_pendant,
    "shannon": shannon_triangle,
    "random-sp": random_series_parallel,
}
