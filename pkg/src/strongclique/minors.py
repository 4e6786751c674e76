"""Clique minors of small simple graphs.

The search works on a contracted graph whose vertices stand for connected sets of
original vertices. At each node one undecided vertex ``v`` is either merged into
an undecided neighbour, frozen as a final branch set, or deleted (deletion is only
tried when no merge is possible, since merging dominates it). Frozen sets must be
pairwise adjacent and keep degree at least ``k - 1``. Failed states are memoised
on their partition, so different merge orders are explored once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .core import GraphError, Pair, SimpleGraph, bits, mask_of, pair
from .solvers.clique import max_clique

DEFAULT_MINOR_BUDGET = 3_000_000


class MinorSearchBudgetExceeded(RuntimeError):
    def __init__(self, k: int, nodes: int) -> None:
        super().__init__(f"minor search budget exceeded (K_{k}, {nodes} nodes)")
        self.k = k
        self.nodes = nodes


@dataclass(frozen=True)
class MinorWitness:
    branch_sets: tuple[tuple[int, ...], ...]

    def check(self, h: SimpleGraph) -> bool:
        """Disjoint, connected, pairwise adjacent; checked directly on ``h``."""
        sets = [tuple(s) for s in self.branch_sets]
        seen: set[int] = set()
        for s in sets:
            if not s or seen.intersection(s) or not all(0 <= v < h.n for v in s):
                return False
            seen.update(s)
            if not h.is_connected_set(s):
                return False
        masks = [mask_of(s) for s in sets]
        for a, b in combinations(range(len(sets)), 2):
            if not any(h.adj[v] & masks[b] for v in sets[a]):
                return False
        return True


@dataclass
class MinorSearchStats:
    nodes: int = 0
    pendant_contractions: int = 0
    suppressed_degree_two: int = 0
    memo_hits: int = 0


@dataclass
class MinorResult:
    found: bool
    witness: MinorWitness | None
    stats: MinorSearchStats = field(default_factory=MinorSearchStats)

    def __bool__(self) -> bool:
        return self.found

    def __iter__(self):
        # allows ``found, witness = has_clique_minor(...)``
        yield self.found
        yield self.witness


class _Search:
    def __init__(self, k: int, budget: int) -> None:
        self.k = k
        self.budget = budget
        self.stats = MinorSearchStats()
        self.failed: set = set()

    def run(self, adj: dict[int, int], sets: dict[int, int]) -> list[int] | None:
        return self._search(adj, sets, 0)

    def _contract(self, adj: dict[int, int], sets: dict[int, int], u: int, v: int) -> tuple[dict, dict]:
        keep, gone = (u, v) if u < v else (v, u)
        adj = dict(adj)
        sets = dict(sets)
        merged = (adj[keep] | adj[gone]) & ~(1 << keep) & ~(1 << gone)
        del adj[gone]
        for w in bits(merged):
            adj[w] = (adj[w] & ~(1 << gone)) | (1 << keep)
        adj[keep] = merged
        sets[keep] |= sets.pop(gone)
        return adj, sets

    @staticmethod
    def _delete(adj: dict[int, int], sets: dict[int, int], v: int) -> tuple[dict, dict]:
        adj = dict(adj)
        sets = dict(sets)
        for w in bits(adj[v]):
            adj[w] &= ~(1 << v)
        del adj[v]
        del sets[v]
        return adj, sets

    def _reduce(self, adj: dict[int, int], sets: dict[int, int], frozen: int):
        """Forced moves on undecided vertices. Returns None when the state is dead."""
        k = self.k
        changed = True
        while changed:
            changed = False
            for v in sorted(adj):
                if frozen >> v & 1:
                    if adj[v].bit_count() < k - 1:
                        return None
                    continue
                nb = adj[v]
                free_nb = nb & ~frozen
                deg = nb.bit_count()
                if deg == 0 or (not free_nb and deg < k - 1):
                    adj, sets = self._delete(adj, sets, v)
                    changed = True
                    break
                if deg < k - 1 and free_nb.bit_count() == 1:
                    u = free_nb.bit_length() - 1
                    if deg == 1:
                        self.stats.pendant_contractions += 1
                    adj, sets = self._contract(adj, sets, v, u)
                    changed = True
                    break
                if k >= 4 and deg == 2 and free_nb == nb:
                    u = bits(nb)[0]
                    self.stats.suppressed_degree_two += 1
                    adj, sets = self._contract(adj, sets, v, u)
                    changed = True
                    break
        return adj, sets, frozen

    def _search(self, adj: dict[int, int], sets: dict[int, int], frozen: int) -> list[int] | None:
        self.stats.nodes += 1
        if self.stats.nodes > self.budget:
            raise MinorSearchBudgetExceeded(self.k, self.stats.nodes)
        k = self.k
        red = self._reduce(adj, sets, frozen)
        if red is None:
            return None
        adj, sets, frozen = red
        if len(adj) < k:
            return None
        if sum(m.bit_count() for m in adj.values()) // 2 < comb(k, 2):
            return None
        fz = bits(frozen)
        if len(fz) > k:
            return None
        for a, b in combinations(fz, 2):
            if not adj[a] >> b & 1:
                return None
        key = (frozen, tuple(sorted(sets.items())))
        if key in self.failed:
            self.stats.memo_hits += 1
            return None

        verts = sorted(adj)
        index = {v: i for i, v in enumerate(verts)}
        cur = SimpleGraph(
            len(verts),
            frozenset((index[u], index[w]) for u in verts for w in bits(adj[u]) if u < w),
        )
        size, clique = max_clique(cur)
        if size >= k:
            return [sets[verts[i]] for i in clique[:k]]
        if len(fz) == k:
            self.failed.add(key)
            return None

        free = [v for v in verts if not frozen >> v & 1]
        # fewest branches first: smallest degree, then lowest index
        v = min(free, key=lambda x: (adj[x].bit_count(), x))
        free_nb = bits(adj[v] & ~frozen)
        for u in free_nb:
            nadj, nsets = self._contract(adj, sets, v, u)
            res = self._search(nadj, nsets, frozen)
            if res is not None:
                return res
        if adj[v].bit_count() >= k - 1 and len(fz) < k:
            res = self._search(adj, sets, frozen | 1 << v)
            if res is not None:
                return res
        if not free_nb:
            nadj, nsets = self._delete(adj, sets, v)
            res = self._search(nadj, nsets, frozen)
            if res is not None:
                return res
        self.failed.add(key)
        return None


def has_clique_minor(h: SimpleGraph, k: int, budget: int = DEFAULT_MINOR_BUDGET) -> MinorResult:
    """Decide whether ``h`` has a ``K_k`` minor, with a witness when it does.

    Raises :class:`MinorSearchBudgetExceeded` rather than guessing.
    """
    if k < 1:
        raise GraphError("k must be at least 1")
    if k == 1:
        ok = h.n >= 1
        return MinorResult(ok, MinorWitness(((0,),)) if ok else None)
    stats = MinorSearchStats()
    for comp in h.components():
        if len(comp) < k:
            continue
        search = _Search(k, budget - stats.nodes)
        adj = {v: h.adj[v] for v in comp}
        sets = {v: 1 << v for v in comp}
        try:
            found = search.run(adj, sets)
        finally:
            _merge_stats(stats, search.stats)
        if found is not None:
            witness = MinorWitness(tuple(sorted(tuple(bits(s)) for s in found)))
            if not witness.check(h):
                raise AssertionError("minor search produced an invalid witness")
            return MinorResult(True, witness, stats)
    return MinorResult(False, None, stats)


def _merge_stats(into: MinorSearchStats, other: MinorSearchStats) -> None:
    into.nodes += other.nodes
    into.pendant_contractions += other.pendant_contractions
    into.suppressed_degree_two += other.suppressed_degree_two
    into.memo_hits += other.memo_hits


def hadwiger_number(h: SimpleGraph, budget: int = DEFAULT_MINOR_BUDGET) -> int:
    """Largest ``k`` such that ``h`` has a ``K_k`` minor (0 for the empty graph)."""
    if h.n == 0:
        return 0
    k = max(max_clique(h)[0], 1)
    while k < h.n and has_clique_minor(h, k + 1, budget).found:
        k += 1
    return k


def contract_matching(h: SimpleGraph, matching: Iterable[Sequence[int]]) -> SimpleGraph:
    """Contract every edge of a matching.

    New vertices are ordered by their smallest original vertex; ``labels`` holds the
    original vertex tuple behind each new vertex.
    """
    edges = [pair(u, v) for u, v in matching]
    used: set[int] = set()
    for u, v in edges:
        if not h.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        if u in used or v in used:
            raise GraphError("not a matching")
        used.update((u, v))
    rep = list(range(h.n))
    for u, v in edges:
        rep[v] = u
    groups: dict[int, list[int]] = {}
    for x in range(h.n):
        groups.setdefault(rep[x], []).append(x)
    order = sorted(groups)
    index = {r: i for i, r in enumerate(order)}
    new_edges = set()
    for a, b in h.edges:
        ra, rb = index[rep[a]], index[rep[b]]
        if ra != rb:
            new_edges.add(pair(ra, rb))
    return SimpleGraph(len(order), frozenset(new_edges), tuple(tuple(groups[r]) for r in order))


def pendant_contracted(h: SimpleGraph) -> tuple[SimpleGraph, int]:
    """Repeatedly contract degree-one vertices into their neighbour.

    Returns the reduced graph and the number of contractions; this never changes
    whether a ``K_k`` minor exists for ``k >= 3``.
    """
    alive = set(range(h.n))
    adj = {v: set(h.neighbours(v)) for v in range(h.n)}
    count = 0
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if len(adj[v]) == 1:
                (u,) = adj[v]
                adj[u].discard(v)
                alive.discard(v)
                adj[v] = set()
                count += 1
                changed = True
    keep = sorted(alive)
    return h.induced(keep), count
