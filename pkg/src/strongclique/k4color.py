"""Inductive strong edge-colouring of K4-minor-free multigraphs.

Colours a set ``A`` of edge instances with at most ``3 * Delta_A`` colours, where
``Delta_A`` is the largest number of ``A``-instances at a vertex. The induction
removes a leaf bundle (then colours it greedily) or splits a vertex with exactly
two neighbours into two leaves joined across by a new edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable

from .core import EdgeInstance, GraphError, Multigraph, line_graph_square, underlying_simple
from .minors import DEFAULT_MINOR_BUDGET, has_clique_minor


class ColouringDefect(AssertionError):
    """Raised when an internal invariant of the colouring algorithm breaks."""


@dataclass
class ColouringTask:
    g: Multigraph
    A: frozenset
    delta_a: int = 0

    def __post_init__(self) -> None:
        inst = set(self.g.instances())
        bad = [x for x in self.A if x not in inst]
        if bad:
            raise GraphError(f"{tuple(bad[0])} is not an edge instance of the graph")
        self.A = frozenset(self.A)
        deg = [0] * self.g.n
        for x in self.A:
            deg[x.u] += 1
            deg[x.v] += 1
        self.delta_a = max(deg, default=0)

    @classmethod
    def full(cls, g: Multigraph) -> ColouringTask:
        return cls(g, frozenset(g.instances()))


@dataclass
class StrongColouring:
    colour: dict[EdgeInstance, int]
    delta_a: int
    stats: dict = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(set(self.colour.values()))

    def to_json(self) -> dict:
        return {
            "colours": self.count,
            "assignment": [[x.u, x.v, x.copy, c] for x, c in sorted(self.colour.items())],
            "valid": True,
        }


def v_geq2(g: Multigraph) -> set[int]:
    """Vertices with at least two distinct neighbours."""
    h = underlying_simple(g)
    return {v for v in range(g.n) if h.degree(v) >= 2}


def split_vertex(g: Multigraph, v: int, u1: int, u2: int) -> Multigraph:
    """Replace ``v`` by a leaf on the ``u1`` bundle and a leaf on the ``u2`` bundle, joining ``u1u2``.

    The new leaves are vertices ``n`` (for ``u1``) and ``n + 1`` (for ``u2``); ``v``
    stays behind as an isolated vertex so indices are stable.
    """
    h = underlying_simple(g)
    if set(h.neighbours(v)) != {u1, u2} or u1 == u2:
        raise GraphError(f"vertex {v} does not have exactly the neighbours {u1}, {u2}")
    n = g.n
    mult = {p: m for p, m in g.mult.items() if v not in p}
    mult[(u1, n)] = g.multiplicity(v, u1)
    mult[(u2, n + 1)] = g.multiplicity(v, u2)
    key = (min(u1, u2), max(u1, u2))
    mult.setdefault(key, 1)
    return Multigraph(n + 2, mult, g.name)


# The recursion works on a lightweight graph: ``edges`` maps an edge id to its
# endpoints. Real ids are EdgeInstances; ids added by splitting are ("split", i).


class _Run:
    def __init__(self, palette: int) -> None:
        self.palette = palette
        self.case1 = 0
        self.case2 = 0
        self.max_greedy_conflicts = 0
        self.next_vertex = 0
        self.synthetic = 0

    def solve(self, edges: dict[Hashable, tuple[int, int]], A: set, measure: tuple[int, int] | None) -> dict:
        nbrs: dict[int, set[int]] = {}
        for a, b in edges.values():
            nbrs.setdefault(a, set()).add(b)
            nbrs.setdefault(b, set()).add(a)
        # isolated vertices are simply never materialised
        v2 = sorted(v for v, s in nbrs.items() if len(s) >= 2)
        cur = (len(v2), len(nbrs))
        if measure is not None and not cur < measure:
            raise ColouringDefect(f"recursion measure did not decrease: {measure} -> {cur}")

        if not v2:
            out = {}
            bundles: dict[tuple[int, int], list] = {}
            for eid, (a, b) in edges.items():
                if eid in A:
                    bundles.setdefault((min(a, b), max(a, b)), []).append(eid)
            for ids in bundles.values():
                for c, eid in enumerate(sorted(ids, key=_id_key)):
                    out[eid] = c
            return out

        in_v2 = set(v2)
        v = next((x for x in v2 if len(nbrs[x] & in_v2) <= 2), None)
        if v is None:
            raise ColouringDefect("no vertex with at most two neighbours in V>=2; input has a K4 minor")
        delta_a = _delta(edges, A)

        outside = sorted(nbrs[v] - in_v2)
        if outside:
            # Case 1: w is a leaf hanging off v
            self.case1 += 1
            w = outside[0]
            aw = sorted((eid for eid, e in edges.items() if w in e and eid in A), key=_id_key)
            rest = {eid: e for eid, e in edges.items() if w not in e}
            out = self.solve(rest, A - set(aw), cur)
            reach = {v, w} | nbrs[v] | nbrs[w]
            for eid in aw:
                taken = {out[f] for f, (a, b) in edges.items() if f in out and (a in reach or b in reach)}
                conflicts = sum(1 for f, (a, b) in edges.items() if f in out and (a in reach or b in reach))
                self.max_greedy_conflicts = max(self.max_greedy_conflicts, conflicts)
                if conflicts > 3 * delta_a - 1:
                    raise ColouringDefect(f"greedy step sees {conflicts} coloured neighbours, more than 3*{delta_a}-1")
                c = next(c for c in range(self.palette) if c not in taken)
                out[eid] = c
            return out

        # Case 2: v has exactly two neighbours u1 < u2, both in V>=2
        self.case2 += 1
        u1, u2 = sorted(nbrs[v])
        v1, v2_ = self.next_vertex, self.next_vertex + 1
        self.next_vertex += 2
        new_edges = {}
        for eid, (a, b) in edges.items():
            if v in (a, b):
                other = b if a == v else a
                new_edges[eid] = (other, v1 if other == u1 else v2_)
            else:
                new_edges[eid] = (a, b)
        if u2 not in nbrs[u1]:
            new_edges[("split", self.synthetic)] = (u1, u2)
            self.synthetic += 1
        return self.solve(new_edges, A, cur)


def _id_key(eid) -> tuple:
    if isinstance(eid, EdgeInstance):
        return (0, eid.u, eid.v, eid.copy)
    return (1, eid[1], 0, 0)


def _delta(edges: dict, A: Iterable) -> int:
    deg: dict[int, int] = {}
    for eid in A:
        a, b = edges[eid]
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    return max(deg.values(), default=0)


def validate(g: Multigraph, A: Iterable[EdgeInstance], colour: dict[EdgeInstance, int]) -> list[tuple]:
    """Pairs of ``A``-instances adjacent in ``L(g)^2`` that share a colour (empty when proper)."""
    A = sorted(A)
    if not A:
        return []
    sq = line_graph_square(g)
    index = {x: i for i, x in enumerate(sq.labels)}
    bad = []
    for i, x in enumerate(A):
        if x not in colour:
            bad.append((x, None))
            continue
        for y in A[i + 1 :]:
            if sq.has_edge(index[x], index[y]) and colour[x] == colour.get(y):
                bad.append((x, y))
    return bad


def strong_colour_k4(
    g: Multigraph | ColouringTask,
    A: Iterable[EdgeInstance] | None = None,
    check_precondition: bool = True,
    budget: int = DEFAULT_MINOR_BUDGET,
) -> StrongColouring:
    """Strong-colour the instances ``A`` (default: all) of a K4-minor-free multigraph."""
    if isinstance(g, ColouringTask):
        task = g
    else:
        task = ColouringTask(g, frozenset(g.instances() if A is None else A))
    g = task.g
    if check_precondition and has_clique_minor(underlying_simple(g), 4, budget).found:
        raise GraphError("precondition violated: not K4-minor-free")
    if not task.A:
        return StrongColouring({}, 0)
    run = _Run(3 * task.delta_a)
    run.next_vertex = g.n
    edges = {x: x.pair for x in g.instances()}
    out = run.solve(edges, set(task.A), None)
    colour = {x: out[x] for x in task.A}
    bad = validate(g, task.A, colour)
    if bad:
        raise ColouringDefect(f"colouring is not proper on L(G)^2[A]: {bad[:3]}")
    result = StrongColouring(
        colour,
        task.delta_a,
        {"case1": run.case1, "case2": run.case2, "max_greedy_conflicts": run.max_greedy_conflicts},
    )
    if result.count > 3 * task.delta_a:
        raise ColouringDefect(f"{result.count} colours exceed 3*Delta_A = {3 * task.delta_a}")
    return result


def parse_subset(text: str, g: Multigraph) -> frozenset:
    """Read ``e <u> <v> <m>`` lines: the first ``m`` copies of ``uv`` belong to ``A``."""
    out = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("mg"):
            continue
        tok = line.split()
        if tok[0] != "e" or len(tok) != 4:
            raise GraphError(f"line {lineno}: unrecognised line {line!r}")
        u, v, m = (int(t) for t in tok[1:])
        u, v = min(u, v), max(u, v)
        if m > g.multiplicity(u, v):
            raise GraphError(f"line {lineno}: only {g.multiplicity(u, v)} copies of {u} {v}")
        out.update(EdgeInstance(u, v, c) for c in range(m))
    return frozenset(out)
