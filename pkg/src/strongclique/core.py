"""Multigraphs, their underlying simple graphs, and the square of the line graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or arguments that do not belong to a graph."""


Pair = tuple[int, int]


def pair(u: int, v: int) -> Pair:
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class EdgeInstance(NamedTuple):
    """One copy of a (possibly parallel) edge."""

    u: int
    v: int
    copy: int = 0

    @property
    def pair(self) -> Pair:
        return (self.u, self.v)


@dataclass(frozen=True)
class SimpleGraph:
    """Loopless simple graph on vertices ``0..n-1``.

    ``labels`` optionally names the vertices (for a line graph square these are
    the edge instances of the host multigraph).
    """

    n: int
    edges: frozenset[Pair]
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"bad edge ({u}, {v}) for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> SimpleGraph:
        return cls(n, frozenset(pair(u, v) for u, v in edges), labels)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def neighbours(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def sorted_edges(self) -> list[Pair]:
        return sorted(self.edges)

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def is_stable(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return not any(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def complement(self) -> SimpleGraph:
        return SimpleGraph(
            self.n,
            frozenset(p for p in combinations(range(self.n), 2) if p not in self.edges),
            self.labels,
        )

    def induced(self, vertices: Iterable[int]) -> SimpleGraph:
        """Induced subgraph, relabelled to ``0..k-1`` in the given order."""
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        labels = tuple(self.labels[v] for v in vs) if self.labels is not None else tuple(vs)
        return SimpleGraph(
            len(vs),
            frozenset(pair(index[u], index[v]) for u, v in self.edges if u in index and v in index),
            labels,
        )

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(_bits(comp))
        return comps

    def is_connected_set(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        if not vs:
            return False
        mask = _mask(vs)
        reach = 1 << vs[0]
        frontier = reach
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v] & mask
            frontier = nxt & ~reach
            reach |= nxt
        return reach == mask


@dataclass(frozen=True, eq=False)
class Multigraph:
    """Loopless multigraph on ``0..n-1`` with a multiplicity per vertex pair.

    ``labels`` maps vertex names (``"a"``, ``"a_1"``, ...) to indices.
    """

    n: int
    mult: Mapping[Pair, int]
    name: str = ""
    labels: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[Pair, int] = {}
        for (u, v), m in self.mult.items():
            p = pair(u, v)
            if not (0 <= p[0] and p[1] < self.n):
                raise GraphError(f"edge {p} out of range for n={self.n}")
            if not isinstance(m, int) or m < 1:
                raise GraphError(f"multiplicity of {p} must be a positive integer, got {m!r}")
            if p in clean:
                raise GraphError(f"duplicate pair {p}")
            clean[p] = m
        object.__setattr__(self, "mult", dict(sorted(clean.items())))
        object.__setattr__(self, "labels", dict(self.labels))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], name: str = "", labels=None) -> Multigraph:
        """Build from ``(u, v)`` or ``(u, v, mult)`` items; repeated pairs add up."""
        acc: dict[Pair, int] = {}
        for e in edges:
            u, v = e[0], e[1]
            m = e[2] if len(e) > 2 else 1
            p = pair(u, v)
            acc[p] = acc.get(p, 0) + m
        return cls(n, acc, name, labels or {})

    @classmethod
    def from_simple(cls, h: SimpleGraph, name: str = "") -> Multigraph:
        return cls(h.n, {p: 1 for p in h.edges}, name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and dict(self.mult) == dict(other.mult)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Multigraph{label} n={self.n} pairs={len(self.mult)} instances={self.size}>"

    @cached_property
    def size(self) -> int:
        """Total number of edge instances."""
        return sum(self.mult.values())

    def pairs(self) -> list[Pair]:
        return list(self.mult)

    def instances(self) -> list[EdgeInstance]:
        return [EdgeInstance(u, v, c) for (u, v), m in self.mult.items() for c in range(m)]

    def multiplicity(self, u: int, v: int) -> int:
        return self.mult.get(pair(u, v), 0)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for (u, v), m in self.mult.items():
            deg[u] += m
            deg[v] += m
        return tuple(deg)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def vertex(self, label: str) -> int:
        return self.labels[label]

    def relabel_name(self, name: str) -> Multigraph:
        return Multigraph(self.n, self.mult, name, self.labels)


def underlying_simple(g: Multigraph) -> SimpleGraph:
    return SimpleGraph(g.n, frozenset(g.mult))


def _pair_square(h: SimpleGraph, pairs: Sequence[Pair]) -> list[int]:
    """Bitmask adjacency between the given edges of ``h`` at edge-distance <= 2.

    Two edges are adjacent when one is incident to the closed neighbourhood of the
    other's endpoints.
    """
    incident = [0] * h.n
    for i, (u, v) in enumerate(pairs):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    out = []
    for i, (u, v) in enumerate(pairs):
        reach = 0
        for x in _bits(h.adj[u] | h.adj[v] | (1 << u) | (1 << v)):
            reach |= incident[x]
        out.append(reach & ~(1 << i))
    return out


def line_graph_square(g: Multigraph) -> SimpleGraph:
    """L(G)^2: vertices are the edge instances of ``g`` in sorted order."""
    if g.size == 0:
        raise GraphError("no edges")
    h = underlying_simple(g)
    pairs = g.pairs()
    near = _pair_square(h, pairs)
    inst = g.instances()
    first: list[int] = []
    pos = 0
    for p in pairs:
        first.append(pos)
        pos += g.mult[p]
    edges = set()
    for i, p in enumerate(pairs):
        block = range(first[i], first[i] + g.mult[p])
        edges.update(combinations(block, 2))
        for j in _bits(near[i]):
            if j <= i:
                continue
            for a in block:
                for b in range(first[j], first[j] + g.mult[pairs[j]]):
                    edges.add((a, b))
    return SimpleGraph(len(inst), frozenset(edges), tuple(inst))


def simple_line_graph_square(h: SimpleGraph) -> SimpleGraph:
    """L(H)^2 of a simple graph; vertex ``i`` is ``h.sorted_edges()[i]``."""
    pairs = h.sorted_edges()
    near = _pair_square(h, pairs)
    edges = {(i, j) for i in range(len(pairs)) for j in _bits(near[i]) if i < j}
    return SimpleGraph(len(pairs), frozenset(edges), tuple(pairs))


def edge_diameter_at_most_two(g: Multigraph) -> bool:
    """True iff every two edges are incident, parallel, or joined by an edge."""
    if g.size < 2:
        return True
    return line_graph_square(g).is_complete()


def is_strong_clique(g: Multigraph, s: Iterable[EdgeInstance | Sequence[int]]) -> bool:
    items = [EdgeInstance(*x) if not isinstance(x, EdgeInstance) else x for x in s]
    for x in items:
        if x.u >= x.v or not (0 <= x.copy < g.multiplicity(x.u, x.v)):
            raise GraphError(f"{tuple(x)} is not an edge instance of the graph")
    h = underlying_simple(g)
    closed = [h.adj[v] | (1 << v) for v in range(g.n)]
    for a, b in combinations(items, 2):
        if a.pair == b.pair:
            continue
        reach = closed[a.u] | closed[a.v]
        if not (reach >> b.u & 1 or reach >> b.v & 1):
            return False
    return True


# ---------------------------------------------------------------- text format


def parse_multigraph(text: str, name: str = "") -> Multigraph:
    """Parse the ``mg <n>`` / ``e <u> <v> <mult>`` line format."""
    n = None
    mult: dict[Pair, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        try:
            if tok[0] == "mg" and len(tok) == 2:
                if n is not None:
                    raise GraphError("repeated header")
                n = int(tok[1])
            elif tok[0] == "e" and len(tok) == 4:
                if n is None:
                    raise GraphError("edge before header")
                u, v, m = (int(t) for t in tok[1:])
                if u == v:
                    raise GraphError("loop")
                if not 0 <= u < v < n:
                    raise GraphError("expected 0 <= u < v < n")
                if m < 1:
                    raise GraphError("multiplicity must be >= 1")
                if (u, v) in mult:
                    raise GraphError(f"duplicate pair {u} {v}")
                mult[(u, v)] = m
            else:
                raise GraphError(f"unrecognised line {line!r}")
        except (GraphError, ValueError) as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
    if n is None:
        raise GraphError("missing 'mg <n>' header")
    return Multigraph(n, mult, name)


def format_multigraph(g: Multigraph) -> str:
    lines = []
    if g.name:
        lines.append(f"# {g.name}")
    for label, v in sorted(g.labels.items(), key=lambda kv: kv[1]):
        lines.append(f"# vertex {v} = {label}")
    lines.append(f"mg {g.n}")
    lines.extend(f"e {u} {v} {m}" for (u, v), m in g.mult.items())
    return "\n".join(lines) + "\n"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


bits = _bits
mask_of = _mask
