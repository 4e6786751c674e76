"""Splitting an edge weighting into odd-cycle / single-edge parts.

A nonnegative weighting ``w`` on a simple graph is written as ``w_1 + ... + w_p``
with ``sum Delta(w_i) = Delta(w)``, where every part is supported on a
vertex-disjoint union of odd cycles and single edges, carrying ``Delta/2`` on
cycle edges and ``Delta`` on isolated edges. Parts are produced by perturbing
along an even cycle, a path between two odd cycles, a path between two leaves,
or a path from a leaf to an odd cycle, and finally by peeling off a uniform
multiple of the terminal pattern.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

import networkx as nx

from .core import GraphError, Pair, SimpleGraph, pair


@dataclass(frozen=True)
class EdgeWeighting:
    host: SimpleGraph
    weight: Mapping[Pair, Fraction]

    def __post_init__(self) -> None:
        clean = {}
        for e, x in self.weight.items():
            p = pair(*e)
            x = Fraction(x)
            if x < 0:
                raise GraphError(f"negative weight {x} on {p}")
            if p not in self.host.edges:
                raise GraphError(f"{p} is not an edge of the host graph")
            if x:
                clean[p] = x
        object.__setattr__(self, "weight", dict(sorted(clean.items())))

    @classmethod
    def on_support(cls, n: int, weight: Mapping[Pair, Fraction | int]) -> EdgeWeighting:
        """Weighting whose host is its own support."""
        return cls(SimpleGraph.from_edges(n, weight.keys()), weight)

    def __call__(self, e: Pair) -> Fraction:
        return self.weight.get(pair(*e), Fraction(0))

    @property
    def support(self) -> list[Pair]:
        return list(self.weight)

    def degree(self, v: int) -> Fraction:
        return sum((x for (a, b), x in self.weight.items() if v in (a, b)), Fraction(0))

    def degrees(self) -> list[Fraction]:
        d = [Fraction(0)] * self.host.n
        for (a, b), x in self.weight.items():
            d[a] += x
            d[b] += x
        return d

    @property
    def max_degree(self) -> Fraction:
        return max(self.degrees(), default=Fraction(0))

    @property
    def total(self) -> Fraction:
        return sum(self.weight.values(), Fraction(0))

    def is_zero(self) -> bool:
        return not self.weight

    def scaled(self, c: Fraction) -> EdgeWeighting:
        return EdgeWeighting(self.host, {e: c * x for e, x in self.weight.items()})

    def plus(self, other: Mapping[Pair, Fraction], c: Fraction = Fraction(1)) -> EdgeWeighting:
        out = dict(self.weight)
        for e, x in other.items():
            out[e] = out.get(e, Fraction(0)) + c * x
        return EdgeWeighting(self.host, out)

    def to_json(self) -> dict:
        return {f"{u}-{v}": _frac_str(x) for (u, v), x in self.weight.items()}


@dataclass(frozen=True)
class SignedPerturbation:
    host: SimpleGraph
    value: Mapping[Pair, int]
    case: int

    @property
    def x_t(self) -> set[int]:
        d: dict[int, int] = {}
        for (a, b), x in self.value.items():
            d[a] = d.get(a, 0) + x
            d[b] = d.get(b, 0) + x
        return {v for v, s in d.items() if s}

    def check(self, w: EdgeWeighting) -> None:
        """Raise if the perturbation breaks one of its invariants with respect to ``w``."""
        supp = set(w.support)
        if not set(self.value) <= supp:
            raise AssertionError("perturbation leaves the support")
        if not any(x > 0 for x in self.value.values()) or not any(x < 0 for x in self.value.values()):
            raise AssertionError("perturbation needs a positive and a negative value")
        xt = self.x_t
        deg = _support_degrees(supp)
        for v in xt:
            if deg.get(v, 0) != 1:
                raise AssertionError(f"vertex {v} of X_t is incident to {deg.get(v, 0)} support edges")
        for (a, b), x in self.value.items():
            if x and a in xt and b in xt:
                raise AssertionError("perturbation is nonzero on an edge inside X_t")


@dataclass
class Decomposition:
    original: EdgeWeighting
    parts: list[EdgeWeighting] = field(default_factory=list)
    provenance: list[str] = field(default_factory=list)
    max_depth: int = 0

    def to_json(self) -> dict:
        return {
            "delta": _frac_str(self.original.max_degree),
            "parts": [
                {"weights": p.to_json(), "delta": _frac_str(p.max_degree), "provenance": prov}
                for p, prov in zip(self.parts, self.provenance)
            ],
            "depth": self.max_depth,
        }


# ------------------------------------------------------------ support structure


def _support_degrees(supp: Iterable[Pair]) -> dict[int, int]:
    deg: dict[int, int] = {}
    for a, b in supp:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    return deg


def _adjacency(supp: Iterable[Pair]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for a, b in supp:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    for v in adj:
        adj[v].sort()
    return adj


def _components(adj: Mapping[int, list[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for s in sorted(adj):
        if s in seen:
            continue
        comp = []
        queue = deque([s])
        seen.add(s)
        while queue:
            v = queue.popleft()
            comp.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def _cycles(adj: Mapping[int, list[int]], parity: int | None = None, first_only: bool = False) -> list[list[int]]:
    """Simple cycles as vertex lists starting at their smallest vertex, in DFS order.

    ``parity`` 0 keeps even cycles, 1 odd ones. Each cycle is reported once.
    """
    found: list[list[int]] = []
    seen: set[frozenset] = set()
    for s in sorted(adj):
        path = [s]
        on_path = {s}

        def dfs(v: int) -> bool:
            for u in adj[v]:
                if u == s and len(path) >= 3:
                    if parity is None or len(path) % 2 == parity:
                        key = frozenset(pair(path[i], path[(i + 1) % len(path)]) for i in range(len(path)))
                        if key not in seen:
                            seen.add(key)
                            found.append(list(path))
                            if first_only:
                                return True
                elif u > s and u not in on_path:
                    path.append(u)
                    on_path.add(u)
                    if dfs(u):
                        return True
                    path.pop()
                    on_path.discard(u)
            return False

        if dfs(s):
            break
    return found


def _even_cycle(adj: Mapping[int, list[int]]) -> list[int] | None:
    """An even cycle, or None; polynomial via biconnected blocks.

    A block that is itself a cycle is even or not by length. Any other block has
    a cycle ``C`` and an ear ``P`` between two vertices of ``C``; of the three
    paths of this theta, two have equal parity and form an even cycle.
    """
    g = nx.Graph()
    for v in sorted(adj):
        for u in adj[v]:
            if v < u:
                g.add_edge(v, u)
    blocks = sorted((sorted(b) for b in nx.biconnected_components(g) if len(b) >= 3))
    for block in blocks:
        sub = g.subgraph(block)
        ordered = nx.Graph()
        ordered.add_nodes_from(block)
        ordered.add_edges_from(sorted(pair(a, b) for a, b in sub.edges()))
        cyc = [a for a, _ in nx.find_cycle(ordered, source=block[0])]
        if ordered.number_of_edges() == len(block):
            if len(cyc) % 2 == 0:
                return cyc
            continue
        on_c = set(cyc)
        c_edges = set(_cycle_edges(cyc))
        sub_adj = {v: sorted(ordered.neighbors(v)) for v in block}
        for a in cyc:
            extra = [b for b in sub_adj[a] if pair(a, b) not in c_edges]
            if not extra:
                continue
            b = extra[0]
            if b in on_c:
                ear = [a, b]
            else:
                rest = {v: [u for u in nb if u != a] for v, nb in sub_adj.items() if v != a}
                tail = _bfs_path(rest, [b], on_c - {a})
                ear = [a] + tail
            x, y = ear[0], ear[-1]
            i, j = cyc.index(x), cyc.index(y)
            if i > j:
                cyc_rot = cyc[j:] + cyc[:j]
                ear = ear[::-1]
                x, y = y, x
                i, j = 0, cyc_rot.index(y)
            else:
                cyc_rot = cyc[i:] + cyc[:i]
                j -= i
                i = 0
            arc1 = cyc_rot[: j + 1]  # x .. y
            arc2 = [cyc_rot[0]] + cyc_rot[j:][::-1]  # x .. y the other way
            p_len, l1, l2 = len(ear) - 1, len(arc1) - 1, len(arc2) - 1
            inner = ear[1:-1][::-1]  # y .. x, without endpoints
            if l1 % 2 == p_len % 2:
                return arc1 + inner
            if l2 % 2 == p_len % 2:
                return arc2 + inner
            return arc1 + arc2[1:-1][::-1]
    return None


def _cycle_edges(cycle: list[int]) -> list[Pair]:
    return [pair(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def _bfs_path(adj: Mapping[int, list[int]], sources: Iterable[int], targets: set[int]) -> list[int] | None:
    """Shortest path from any source to any target (ties: smallest neighbours first)."""
    srcs = sorted(set(sources))
    parent: dict[int, int | None] = {s: None for s in srcs}
    queue = deque(srcs)
    while queue:
        v = queue.popleft()
        if v in targets:
            out = [v]
            while parent[out[-1]] is not None:
                out.append(parent[out[-1]])
            return out[::-1]
        for u in adj[v]:
            if u not in parent:
                parent[u] = v
                queue.append(u)
    return None


def _signs_by_edge_distance(start: Pair, edges: list[Pair]) -> dict[Pair, int]:
    """(-1)^d where d is the distance from ``start`` in the line graph of ``edges``."""
    by_vertex: dict[int, list[Pair]] = {}
    for e in edges:
        for x in e:
            by_vertex.setdefault(x, []).append(e)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        e = queue.popleft()
        for x in e:
            for f in by_vertex[x]:
                if f not in dist:
                    dist[f] = dist[e] + 1
                    queue.append(f)
    return {e: (1 if dist[e] % 2 == 0 else -1) for e in edges}


def is_odd_cycles_and_edges(supp: Iterable[Pair]) -> bool:
    """Every component of the support is a single edge or an odd cycle."""
    supp = list(supp)
    adj = _adjacency(supp)
    for comp in _components(adj):
        m = sum(1 for a, b in supp if a in comp)
        if len(comp) == 2 and m == 1:
            continue
        if m == len(comp) and len(comp) % 2 == 1 and all(len(adj[v]) == 2 for v in comp):
            continue
        return False
    return True


def _cycle_membership(w: EdgeWeighting) -> dict[Pair, bool]:
    """For a support of odd cycles and single edges: is each edge on a cycle?"""
    deg = _support_degrees(w.support)
    return {(a, b): not (deg[a] == 1 and deg[b] == 1) for a, b in w.support}


def satisfies_pattern(w: EdgeWeighting) -> bool:
    """Support is odd cycles plus single edges, weighted ``Delta/2`` and ``Delta`` respectively."""
    if w.is_zero():
        return True
    if not is_odd_cycles_and_edges(w.support):
        return False
    delta = w.max_degree
    on_cycle = _cycle_membership(w)
    return all(x == (delta / 2 if on_cycle[e] else delta) for e, x in w.weight.items())


# ------------------------------------------------------------------ operations


def find_perturbation(w: EdgeWeighting) -> SignedPerturbation | None:
    """First applicable perturbation in the fixed case order, or None for odd-cycle/edge supports."""
    supp = w.support
    if not supp:
        return None
    adj = _adjacency(supp)

    # 1: even cycle, alternating +1/-1
    even = _even_cycle(adj)
    if even:
        edges = _cycle_edges(even)
        return SignedPerturbation(w.host, {e: (1 if i % 2 == 0 else -1) for i, e in enumerate(edges)}, 1)

    odd = _cycles(adj, parity=1)
    comp_of = {}
    for i, comp in enumerate(_components(adj)):
        for v in comp:
            comp_of[v] = i

    # 2: path (maybe trivial) between two distinct odd cycles; +-1 on cycles, +-2 on the path
    for i, c in enumerate(odd):
        for c2 in odd[i + 1 :]:
            if comp_of[c[0]] != comp_of[c2[0]]:
                continue
            path = _bfs_path(adj, c, set(c2))
            v0 = path[0]
            k = c.index(v0)
            rot = c[k:] + c[:k]  # rot[0] is the attachment vertex
            half = (len(rot) - 1) // 2
            e0 = pair(rot[half], rot[half + 1])
            pedges = [pair(path[j], path[j + 1]) for j in range(len(path) - 1)]
            cedges = _cycle_edges(c) + _cycle_edges(c2)
            signs = _signs_by_edge_distance(e0, cedges + pedges)
            value = {e: signs[e] for e in cedges}
            value.update({e: 2 * signs[e] for e in pedges})
            return SignedPerturbation(w.host, value, 2)

    deg = {v: len(adj[v]) for v in adj}
    leaves = sorted(v for v in adj if deg[v] == 1)

    # 3: path of length >= 2 between two leaves, alternating from the first leaf
    for i, u in enumerate(leaves):
        for v in leaves[i + 1 :]:
            if comp_of[u] != comp_of[v]:
                continue
            path = _bfs_path(adj, [u], {v})
            if path is None or len(path) < 3:
                continue
            value = {pair(path[j], path[j + 1]): (1 if j % 2 == 0 else -1) for j in range(len(path) - 1)}
            return SignedPerturbation(w.host, value, 3)

    # 4: path from a leaf to an odd cycle; signs by parity of distance from the leaf
    on_cycle = {v for c in odd for v in c}
    for u in leaves:
        path = _bfs_path(adj, [u], on_cycle)
        if path is None or len(path) < 2:
            continue
        x = path[-1]
        cyc = next(c for c in odd if x in c)
        pedges = [pair(path[j], path[j + 1]) for j in range(len(path) - 1)]
        cedges = _cycle_edges(cyc)
        signs = _signs_by_edge_distance(pedges[0], cedges + pedges)
        # odd distance from u -> positive, even -> negative
        value = {e: -2 * signs[e] for e in pedges}
        value.update({e: -signs[e] for e in cedges})
        return SignedPerturbation(w.host, value, 4)
    return None


def split(w: EdgeWeighting, t: SignedPerturbation) -> tuple[EdgeWeighting, EdgeWeighting]:
    """Split ``w`` along ``t`` into two parts with additive maximum degree."""
    pos = [(e, x) for e, x in t.value.items() if x > 0]
    neg = [(e, x) for e, x in t.value.items() if x < 0]
    if not pos or not neg:
        raise GraphError("degenerate perturbation")
    m1 = min(w(e) / -x for e, x in neg)
    m2 = min(w(e) / x for e, x in pos)
    if m1 <= 0 or m2 <= 0:
        raise GraphError("perturbation leaves the support of the weighting")
    tv = {e: Fraction(x) for e, x in t.value.items()}
    w1 = w.plus(tv, m1).scaled(m2 / (m1 + m2))
    w2 = w.plus(tv, -m2).scaled(m1 / (m1 + m2))
    if w1.max_degree + w2.max_degree != w.max_degree:
        raise AssertionError("maximum degree is not additive across the split")
    return w1, w2


def terminal_split(w: EdgeWeighting) -> tuple[EdgeWeighting, EdgeWeighting]:
    """Peel the largest uniform multiple of the (1 on cycles, 2 on edges) pattern off ``w``."""
    if not is_odd_cycles_and_edges(w.support):
        raise GraphError("support is not a disjoint union of odd cycles and single edges")
    if w.is_zero():
        return w, w
    on_cycle = _cycle_membership(w)
    t = {e: Fraction(1 if on_cycle[e] else 2) for e in w.support}
    m = min(w(e) / t[e] for e in w.support)
    w1 = EdgeWeighting(w.host, {e: m * x for e, x in t.items()})
    w2 = w.plus(t, -m)
    return w1, w2


def decompose(w: EdgeWeighting, method: str = "peel") -> Decomposition:
    """Decompose ``w`` into pattern parts.

    ``tree`` applies the split recursively to both halves and returns the leaves;
    the tree can be exponential in the number of edges. ``peel`` (the default)
    follows a single branch of splits down to one pattern part ``y``, removes the
    largest multiple of ``y`` that keeps the remainder nonnegative with additive
    maximum degree, and repeats. Every round either shrinks the support or makes
    one more vertex attain the maximum degree, so there are at most
    ``|E| + |V|`` rounds.
    """
    out = Decomposition(w)
    if w.is_zero():
        return out
    if method == "tree":
        _decompose_tree(w, out)
    elif method == "peel":
        _decompose_peel(w, out)
    else:
        raise ValueError(f"unknown method {method!r}")
    return out


def _descend(w: EdgeWeighting) -> tuple[EdgeWeighting, str, int]:
    """Follow first halves of splits from ``w`` to a pattern part (unscaled)."""
    cur = w
    tags = []
    while not satisfies_pattern(cur):
        t = find_perturbation(cur)
        if t is None:
            cur, _ = terminal_split(cur)
            tags.append("terminal.part")
            break
        t.check(cur)
        w1, _ = split(cur, t)
        cur = w1
        tags.append(f"case{t.case}.w1")
    return cur, "/".join(tags) or "input", len(tags)


def _decompose_peel(w: EdgeWeighting, out: Decomposition) -> None:
    parts: dict[tuple, EdgeWeighting] = {}
    prov: dict[tuple, str] = {}
    rest = w
    while not rest.is_zero():
        delta = rest.max_degree
        y, tag, depth = _descend(rest)
        out.max_depth = max(out.max_depth, depth)
        dy = y.max_degree
        ydeg = y.degrees()
        rdeg = rest.degrees()
        c = min(rest(e) / x for e, x in y.weight.items())
        for v in range(w.host.n):
            if ydeg[v] < dy:
                c = min(c, (delta - rdeg[v]) / (dy - ydeg[v]))
        if c <= 0:
            raise AssertionError("peeling step made no progress")
        piece = y.scaled(c)
        rest = rest.plus(piece.weight, Fraction(-1))
        if rest.max_degree != delta - piece.max_degree:
            raise AssertionError("maximum degree is not additive across the peel")
        key = tuple(piece.support)
        if key in parts:
            parts[key] = parts[key].plus(piece.weight)
        else:
            parts[key] = piece
            prov[key] = tag
    for key, p in parts.items():
        out.parts.append(p)
        out.provenance.append(prov[key])


def _decompose_tree(w: EdgeWeighting, out: Decomposition) -> None:
    stack: list[tuple[EdgeWeighting, str, int]] = [(w, "", 0)]
    while stack:
        cur, prov, depth = stack.pop()
        out.max_depth = max(out.max_depth, depth)
        if cur.is_zero():
            continue
        if satisfies_pattern(cur):
            out.parts.append(cur)
            out.provenance.append(prov or "input")
            continue
        t = find_perturbation(cur)
        if t is not None:
            t.check(cur)
            w1, w2 = split(cur, t)
            tag = f"case{t.case}"
            # second part pushed first so the first part is emitted first
            stack.append((w2, _join(prov, f"{tag}.w2"), depth + 1))
            stack.append((w1, _join(prov, f"{tag}.w1"), depth + 1))
        else:
            w1, w2 = terminal_split(cur)
            stack.append((w2, _join(prov, "terminal.rest"), depth + 1))
            stack.append((w1, _join(prov, "terminal.part"), depth + 1))


def check_decomposition(d: Decomposition) -> list[str]:
    """Return the list of violated properties (empty when all four hold)."""
    problems = []
    total: dict[Pair, Fraction] = {}
    for p in d.parts:
        for e, x in p.weight.items():
            total[e] = total.get(e, Fraction(0)) + x
    if total != dict(d.original.weight):
        problems.append("(i) parts do not sum to the weighting")
    if sum((p.max_degree for p in d.parts), Fraction(0)) != d.original.max_degree:
        problems.append("(ii) maximum degrees are not additive")
    for i, p in enumerate(d.parts):
        if not is_odd_cycles_and_edges(p.support):
            problems.append(f"(iii) part {i} support is not odd cycles and single edges")
        elif not satisfies_pattern(p):
            problems.append(f"(iv) part {i} weights do not follow the Delta/2, Delta pattern")
    return problems


def extremal_part_ratio(d: Decomposition) -> tuple[int, Fraction]:
    """Index of the part maximising total weight over maximum degree (lowest index on ties)."""
    if not d.parts:
        raise GraphError("empty decomposition")
    best, ratio = 0, None
    for i, p in enumerate(d.parts):
        r = p.total / p.max_degree
        if ratio is None or r > ratio:
            best, ratio = i, r
    return best, ratio


def _join(prefix: str, tag: str) -> str:
    return f"{prefix}/{tag}" if prefix else tag


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# ------------------------------------------------------------------- file I/O


def parse_weighting(text: str, host: SimpleGraph | None = None) -> EdgeWeighting:
    """Parse ``w <u> <v> <num>/<den>`` lines (an optional ``n <count>`` line fixes the vertex count)."""
    weights: dict[Pair, Fraction] = {}
    n = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        try:
            if tok[0] == "n" and len(tok) == 2:
                n = int(tok[1])
            elif tok[0] == "w" and len(tok) == 4:
                p = pair(int(tok[1]), int(tok[2]))
                if p in weights:
                    raise GraphError(f"duplicate pair {p}")
                weights[p] = Fraction(tok[3])
            else:
                raise GraphError(f"unrecognised line {line!r}")
        except (ValueError, ZeroDivisionError) as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
    if host is not None:
        return EdgeWeighting(host, weights)
    if n is None:
        n = 1 + max((max(p) for p in weights), default=-1)
    return EdgeWeighting(SimpleGraph.from_edges(n, weights.keys()), weights)


def format_weighting(w: EdgeWeighting) -> str:
    lines = [f"n {w.host.n}"]
    lines.extend(f"w {u} {v} {_frac_str(x)}" for (u, v), x in w.weight.items())
    return "\n".join(lines) + "\n"


def decomposition_json(d: Decomposition) -> str:
    return json.dumps(d.to_json(), indent=2)
