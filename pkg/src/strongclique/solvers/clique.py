"""Exact maximum clique by bitset branch and bound with a greedy-colouring bound."""

from __future__ import annotations

from ..core import SimpleGraph, bits


def _colour_bound(adj: tuple[int, ...], cand: int, order: list[int]) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of ``cand``; returns vertices and their colour numbers.

    The lists are sorted by colour so the last vertex has the largest bound.
    """
    verts: list[int] = []
    cols: list[int] = []
    uncol = cand
    colour = 0
    while uncol:
        colour += 1
        avail = uncol
        while avail:
            # lowest position in the global order first
            v = next(x for x in order if avail >> x & 1)
            avail &= ~adj[v] & ~(1 << v)
            uncol &= ~(1 << v)
            verts.append(v)
            cols.append(colour)
    return verts, cols


def max_clique(h: SimpleGraph) -> tuple[int, list[int]]:
    """Return ``(size, witness)`` for a maximum clique of ``h``.

    The witness is sorted. Ties are broken deterministically by the search order
    (degree descending, then vertex index).
    """
    n = h.n
    if n == 0:
        return 0, []
    adj = h.adj
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))

    best: list[int] = [order[0]]

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        verts, cols = _colour_bound(adj, cand, order)
        for i in range(len(verts) - 1, -1, -1):
            if len(clique) + cols[i] <= len(best):
                return
            v = verts[i]
            clique.append(v)
            nxt = cand & adj[v]
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], (1 << n) - 1)
    return len(best), sorted(best)


def clique_number(h: SimpleGraph) -> int:
    return max_clique(h)[0]


def is_clique(h: SimpleGraph, vertices) -> bool:
    vs = list(vertices)
    return all(h.adj[a] >> b & 1 for i, a in enumerate(vs) for b in vs[i + 1 :])


def all_maximal_cliques(h: SimpleGraph) -> list[int]:
    """Maximal cliques as bitmasks (Bron--Kerbosch with Tomita pivoting).

    Output is sorted by the sorted vertex tuple of each clique.
    """
    adj = h.adj
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot = max(bits(px), key=lambda u: ((p & adj[u]).bit_count(), -u))
        for v in bits(p & ~adj[pivot]):
            bk(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if h.n:
        bk(0, (1 << h.n) - 1, 0)
    out.sort(key=lambda m: bits(m))
    return out
