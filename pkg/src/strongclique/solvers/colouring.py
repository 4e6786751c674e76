"""Exact vertex colouring (DSATUR branch and bound)."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import SimpleGraph, bits
from .clique import max_clique

DEFAULT_COLOUR_LIMIT = 64


class InstanceTooLarge(ValueError):
    """Raised when an exact solver is asked for more than its configured limit."""

    def __init__(self, what: str, size: int, limit: int) -> None:
        super().__init__(f"instance too large: {what} has size {size} > limit {limit}")
        self.size = size
        self.limit = limit


@dataclass(frozen=True)
class ProperColouring:
    colour: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(set(self.colour))

    def is_proper(self, h: SimpleGraph) -> bool:
        return len(self.colour) == h.n and all(self.colour[u] != self.colour[v] for u, v in h.edges)

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colour):
            out.setdefault(c, []).append(v)
        return [out[c] for c in sorted(out)]


def _dsatur_greedy(h: SimpleGraph) -> list[int]:
    n = h.n
    adj = h.adj
    colour = [-1] * n
    sat = [0] * n  # bitmask of neighbouring colours
    for _ in range(n):
        v = max(
            (u for u in range(n) if colour[u] < 0),
            key=lambda u: (sat[u].bit_count(), adj[u].bit_count(), -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colour[v] = c
        for u in bits(adj[v]):
            sat[u] |= 1 << c
    return colour


def chromatic_number(h: SimpleGraph, limit: int = DEFAULT_COLOUR_LIMIT) -> tuple[int, ProperColouring]:
    """Exact chromatic number with an optimal colouring as witness."""
    n = h.n
    if n > limit:
        raise InstanceTooLarge("graph", n, limit)
    if n == 0:
        return 0, ProperColouring(())
    adj = h.adj
    lower, clique = max_clique(h)
    best = _dsatur_greedy(h)
    best_k = max(best) + 1
    if best_k == lower:
        return best_k, ProperColouring(tuple(best))

    colour = [-1] * n
    # per vertex, per colour: number of coloured neighbours with that colour
    count = [[0] * n for _ in range(n)]
    sat = [0] * n

    def assign(v: int, c: int) -> None:
        colour[v] = c
        for u in bits(adj[v]):
            count[u][c] += 1
            sat[u] |= 1 << c

    def unassign(v: int, c: int) -> None:
        colour[v] = -1
        for u in bits(adj[v]):
            count[u][c] -= 1
            if count[u][c] == 0:
                sat[u] &= ~(1 << c)

    for i, v in enumerate(clique):
        assign(v, i)

    def search(done: int, used: int) -> bool:
        nonlocal best, best_k
        if done == n:
            best = list(colour)
            best_k = used
            return best_k == lower
        v = -1
        key = None
        for u in range(n):
            if colour[u] < 0:
                k = (sat[u].bit_count(), adj[u].bit_count())
                if key is None or k > key:
                    key, v = k, u
        for c in range(min(used + 1, best_k - 1)):
            if c >= best_k - 1:
                break
            if sat[v] >> c & 1:
                continue
            assign(v, c)
            if search(done + 1, max(used, c + 1)):
                return True
            unassign(v, c)
            if best_k == lower:
                return True
        return False

    search(len(clique), len(clique))
    return best_k, ProperColouring(tuple(best))
