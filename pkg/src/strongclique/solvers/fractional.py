"""Exact fractional chromatic number over maximal stable sets."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from ..core import SimpleGraph, bits
from .clique import all_maximal_cliques
from .colouring import InstanceTooLarge
from .lp import solve_cover

DEFAULT_FRACTIONAL_LIMIT = 30


@dataclass(frozen=True)
class FractionalColouring:
    """Weights on stable sets (as sorted vertex tuples) of a target graph."""

    parts: Mapping[tuple[int, ...], Fraction]

    @property
    def total(self) -> Fraction:
        return sum(self.parts.values(), Fraction(0))

    def coverage(self, n: int) -> list[Fraction]:
        cov = [Fraction(0)] * n
        for s, w in self.parts.items():
            for v in s:
                cov[v] += w
        return cov

    def is_valid(self, h: SimpleGraph, demand: Sequence | None = None) -> bool:
        need = [Fraction(1)] * h.n if demand is None else [Fraction(d) for d in demand]
        if any(w <= 0 for w in self.parts.values()):
            return False
        if not all(h.is_stable(s) for s in self.parts):
            return False
        cov = self.coverage(h.n)
        return all(cov[v] >= need[v] for v in range(h.n))


def maximal_stable_sets(h: SimpleGraph) -> list[int]:
    """All maximal stable sets as bitmasks (pivoting Bron--Kerbosch on the complement)."""
    return all_maximal_cliques(h.complement())


def weighted_fractional_chromatic(
    h: SimpleGraph, demand: Sequence[int | Fraction], limit: int | None = None
) -> tuple[Fraction, FractionalColouring, tuple[Fraction, ...]]:
    """Least total weight on stable sets covering each vertex ``v`` at least ``demand[v]`` times.

    Returns the optimum, an optimal weighting, and a dual certificate (vertex
    weights summing to the optimum with every stable set weighing at most 1).
    """
    if limit is not None and h.n > limit:
        raise InstanceTooLarge("graph", h.n, limit)
    if h.n == 0:
        return Fraction(0), FractionalColouring({}), ()
    cols = maximal_stable_sets(h)
    sol = solve_cover(cols, demand)
    parts = {tuple(bits(cols[j])): w for j, w in sol.primal.items()}
    return sol.value, FractionalColouring(parts), sol.dual


def fractional_chromatic(h: SimpleGraph, limit: int = DEFAULT_FRACTIONAL_LIMIT) -> tuple[Fraction, FractionalColouring]:
    value, colouring, _ = weighted_fractional_chromatic(h, [1] * h.n, limit)
    return value, colouring
