"""Fractional strong colourings assembled from odd-cycle / double-edge parts.

A multigraph's multiplicities are decomposed into pattern parts; each part gives
a reduced instance ``(G_i, A_i)`` in which ``A_i`` is a vertex-disjoint union of
odd cycles and double edges. Fractional colourings of ``L(G_i)^2[A_i]`` are then
combined with weights ``Delta(w_i)/2`` into one for ``L(G)^2``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .core import EdgeInstance, GraphError, Multigraph, Pair, line_graph_square, underlying_simple
from .decompose import EdgeWeighting, _cycle_membership, decompose, is_odd_cycles_and_edges, satisfies_pattern
from .minors import DEFAULT_MINOR_BUDGET, has_clique_minor
from .solvers import FractionalColouring, fractional_strong_chromatic_index, weighted_fractional_chromatic


@dataclass
class ReducedInstance:
    graph: Multigraph
    A: list[EdgeInstance]
    delta: Fraction  # Delta(w_i) of the part it came from


@dataclass
class PartColouring:
    """Fractional colouring of ``L(G_i)^2[A_i]``: weights on sets of ``A_i`` instances."""

    reduced: ReducedInstance
    sets: dict[tuple[EdgeInstance, ...], Fraction]

    @property
    def total(self) -> Fraction:
        return sum(self.sets.values(), Fraction(0))

    def problems(self) -> list[str]:
        out = []
        a = set(self.reduced.A)
        sq = line_graph_square(self.reduced.graph)
        index = {x: i for i, x in enumerate(sq.labels)}
        cov = {x: Fraction(0) for x in a}
        for s, wt in self.sets.items():
            if wt <= 0:
                out.append("nonpositive weight")
            if not set(s) <= a:
                out.append("set leaves A_i")
                continue
            if not sq.is_stable(index[x] for x in s):
                out.append(f"set {s} is not stable in L(G_i)^2")
            for x in s:
                cov[x] += wt
        out.extend(f"instance {tuple(x)} covered {c} < 1" for x, c in sorted(cov.items()) if c < 1)
        return out

    def to_json(self) -> list:
        return [{"set": [list(x) for x in s], "weight": _frac_str(w)} for s, w in self.sets.items()]


@dataclass
class Assembled:
    """Fractional strong colouring of a multigraph, with its certificate data."""

    g: Multigraph
    lam: Fraction
    matchings: dict[tuple[Pair, ...], Fraction]
    colouring: FractionalColouring  # on the vertices of line_graph_square(g)
    part_totals: list[Fraction] = field(default_factory=list)

    @property
    def total(self) -> Fraction:
        return sum(self.matchings.values(), Fraction(0))

    @property
    def bound(self) -> Fraction:
        return self.lam * self.g.max_degree()

    def certify(self) -> dict:
        """Exact checks: instance-level validity, coverage of every edge, total versus bound."""
        sq = line_graph_square(self.g)
        valid = self.colouring.is_valid(sq)
        cov: dict[Pair, Fraction] = {}
        for m, wt in self.matchings.items():
            for e in m:
                cov[e] = cov.get(e, Fraction(0)) + wt
        covered = all(cov.get(p, 0) >= mult for p, mult in self.g.mult.items())
        return {
            "instance_colouring_valid": valid,
            "edge_coverage": covered,
            "totals_agree": self.colouring.total == self.total,
            "total": self.total,
            "bound": self.bound,
            "within_bound": self.total <= self.bound,
        }

    def to_json(self) -> dict:
        return {
            "lambda": _frac_str(self.lam),
            "total": _frac_str(self.total),
            "bound": _frac_str(self.bound),
            "stable_sets": [
                {"set": [list(x) for x in s], "weight": _frac_str(w)}
                for s, w in self._instance_sets().items()
            ],
        }

    def _instance_sets(self) -> dict:
        labels = line_graph_square(self.g).labels
        return {tuple(labels[i] for i in s): w for s, w in self.colouring.parts.items()}


def multiplicity_weighting(g: Multigraph) -> EdgeWeighting:
    return EdgeWeighting(underlying_simple(g), {p: Fraction(m) for p, m in g.mult.items()})


def reduced_instance(g: Multigraph, part: EdgeWeighting) -> ReducedInstance:
    """``G_i`` has multiplicity ``max(2 w_i(e) / Delta(w_i), 1)`` on every edge of ``H``;
    ``A_i`` holds ``2 w_i(e) / Delta(w_i)`` copies of ``e``."""
    if not satisfies_pattern(part) or part.is_zero():
        raise GraphError("part does not follow the odd-cycle / single-edge weight pattern")
    h = underlying_simple(g)
    delta = part.max_degree
    mult = {}
    copies = {}
    for p in h.sorted_edges():
        r = 2 * part(p) / delta
        if r.denominator != 1 or r not in (0, 1, 2):
            raise GraphError(f"edge {p}: 2w/Delta = {r} is not in {{0, 1, 2}}")
        mult[p] = max(int(r), 1)
        if r:
            copies[p] = int(r)
    gi = Multigraph(g.n, mult, f"{g.name}/reduced" if g.name else "reduced", g.labels)
    A = [EdgeInstance(p[0], p[1], c) for p, m in sorted(copies.items()) for c in range(m)]
    if not is_cycles_and_double_edges(gi, A):
        raise AssertionError("A_i is not a vertex-disjoint union of odd cycles and double edges")
    return ReducedInstance(gi, A, delta)


def is_cycles_and_double_edges(g: Multigraph, A: Iterable[EdgeInstance]) -> bool:
    """The multiset of pairs of ``A`` forms vertex-disjoint odd cycles (one copy) and double edges."""
    count: dict[Pair, int] = {}
    for x in A:
        if x.copy >= g.multiplicity(x.u, x.v):
            return False
        count[x.pair] = count.get(x.pair, 0) + 1
    if any(c > 2 for c in count.values()):
        return False
    if not is_odd_cycles_and_edges(count):
        return False
    on_cycle = _cycle_membership(EdgeWeighting.on_support(g.n, {p: 1 for p in count}))
    return all((c == 1) == on_cycle[p] for p, c in count.items())


def part_colouring(ri: ReducedInstance, limit: int | None = 60) -> PartColouring:
    """Optimal fractional colouring of ``L(G_i)^2[A_i]`` from the exact LP."""
    sq = line_graph_square(ri.graph)
    index = {x: i for i, x in enumerate(sq.labels)}
    sub = sq.induced([index[x] for x in ri.A])
    _, col, _ = weighted_fractional_chromatic(sub, [1] * sub.n, limit)
    sets = {tuple(sub.labels[i] for i in s): w for s, w in col.parts.items()}
    return PartColouring(ri, sets)


def reduce_and_colour(g: Multigraph, limit: int | None = 60) -> list[PartColouring]:
    d = decompose(multiplicity_weighting(g))
    return [part_colouring(reduced_instance(g, p), limit) for p in d.parts]


def assemble(g: Multigraph, parts: Sequence[PartColouring], lam: Fraction | int | str) -> Assembled:
    """Combine part colourings with weights ``Delta(w_i)/2``; certified exactly."""
    lam = Fraction(lam)
    matchings: dict[tuple[Pair, ...], Fraction] = {}
    totals = []
    for i, pc in enumerate(parts):
        bad = pc.problems()
        if bad:
            raise GraphError(f"part {i} colouring fails its coverage precondition: {bad[0]}")
        scale = pc.reduced.delta / 2
        totals.append(pc.total)
        for s, wt in pc.sets.items():
            key = tuple(sorted({x.pair for x in s}))
            if len(key) != len(s):
                raise AssertionError("stable set holds two copies of one edge")
            matchings[key] = matchings.get(key, Fraction(0)) + scale * wt
    if sum((pc.reduced.delta for pc in parts), Fraction(0)) != g.max_degree():
        raise GraphError("part maximum degrees do not add up to Delta(G)")
    colouring = expand_to_instances(g, matchings)
    return Assembled(g, lam, matchings, colouring, totals)


def expand_to_instances(g: Multigraph, matchings: dict[tuple[Pair, ...], Fraction]) -> FractionalColouring:
    """Turn weights on induced matchings of ``H`` into a fractional colouring of ``L(G)^2``.

    The matchings are laid end to end on a line. Along the line, edge ``e`` is in
    use on a set of measure at least ``mult(e)``; the ``c``-th unit of that measure is
    assigned to copy ``c``. Cutting the line at every unit boundary gives segments
    on which each edge uses a single copy.
    """
    sq = line_graph_square(g)
    index = {x: i for i, x in enumerate(sq.labels)}
    used = {p: Fraction(0) for p in g.mult}
    parts: dict[tuple[int, ...], Fraction] = {}
    for m, wt in sorted(matchings.items()):
        start = Fraction(0)
        while start < wt:
            # next cut: where some edge of m reaches an integer amount of use
            step = wt - start
            for e in m:
                u = used[e]
                if u < g.mult[e]:
                    nxt = (u.numerator // u.denominator + 1) - u
                    step = min(step, nxt)
            verts = []
            for e in m:
                u = used[e]
                if u < g.mult[e]:
                    verts.append(index[EdgeInstance(e[0], e[1], u.numerator // u.denominator)])
            for e in m:
                used[e] += step
            if verts:
                key = tuple(sorted(verts))
                parts[key] = parts.get(key, Fraction(0)) + step
            start += step
    return FractionalColouring(parts)


@dataclass
class ProbeReport:
    chi_f: Fraction
    bound: Fraction
    margin: Fraction
    minor_free: bool
    k: int
    size: int

    def to_json(self) -> dict:
        return {
            "chi_f": _frac_str(self.chi_f),
            "bound": _frac_str(self.bound),
            "margin": _frac_str(self.margin),
            "minor_free": self.minor_free,
            "k": self.k,
            "size": self.size,
        }


def conjecture51_probe(g: Multigraph, A: Iterable[EdgeInstance], k: int, budget: int = DEFAULT_MINOR_BUDGET, limit: int | None = 60) -> ProbeReport:
    """Compute ``chi_f(L(G)^2[A])`` and its margin to ``3(k-2)``; asserts nothing about the sign."""
    A = sorted(set(A))
    if not is_cycles_and_double_edges(g, A):
        raise GraphError("A is not a vertex-disjoint union of odd cycles and double edges")
    minor = has_clique_minor(underlying_simple(g), k, budget)
    sq = line_graph_square(g)
    index = {x: i for i, x in enumerate(sq.labels)}
    sub = sq.induced([index[x] for x in A])
    val, _, _ = weighted_fractional_chromatic(sub, [1] * sub.n, limit)
    bound = Fraction(3 * (k - 2))
    return ProbeReport(val, bound, bound - val, not minor.found, k, len(A))


def finite_d_trend(g: Multigraph, A: Iterable[EdgeInstance], ds: Sequence[int] = (2, 4, 8)) -> list[dict]:
    """``chi_{2,f}'(G_D) / D`` where ``G_D`` replaces every edge of ``A`` by ``D`` parallel copies."""
    per_pair: dict[Pair, int] = {}
    for x in A:
        per_pair[x.pair] = per_pair.get(x.pair, 0) + 1
    out = []
    for d in ds:
        mult = {p: m - per_pair.get(p, 0) + d * per_pair.get(p, 0) for p, m in g.mult.items()}
        gd = Multigraph(g.n, mult, f"{g.name}[D={d}]")
        val = fractional_strong_chromatic_index(gd)
        out.append({"D": d, "chi_2f": val, "ratio": val / d, "max_degree": gd.max_degree()})
    return out


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def assembled_json(a: Assembled) -> str:
    return json.dumps(a.to_json(), indent=2)


def parse_part_colouring(data: list, ri: ReducedInstance) -> PartColouring:
    """Inverse of :meth:`PartColouring.to_json`."""
    sets = {}
    for item in data:
        key = tuple(sorted(EdgeInstance(*x) for x in item["set"]))
        sets[key] = sets.get(key, Fraction(0)) + Fraction(item["weight"])
    return PartColouring(ri, sets)
