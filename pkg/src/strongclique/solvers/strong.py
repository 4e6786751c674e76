"""Strong edge-colouring parameters of multigraphs."""

from __future__ import annotations

from fractions import Fraction

from ..core import EdgeInstance, Multigraph, Pair, line_graph_square, simple_line_graph_square, underlying_simple
from .clique import max_clique
from .colouring import InstanceTooLarge, chromatic_number
from .fractional import FractionalColouring, weighted_fractional_chromatic

DEFAULT_STRONG_LIMIT = 40


def strong_clique_number(g: Multigraph) -> tuple[int, list[EdgeInstance]]:
    if g.size == 0:
        return 0, []
    sq = line_graph_square(g)
    size, witness = max_clique(sq)
    return size, [sq.labels[i] for i in witness]


def strong_chromatic_index(g: Multigraph, limit: int = DEFAULT_STRONG_LIMIT) -> tuple[int, dict[EdgeInstance, int]]:
    """Exact chi(L(G)^2) with an optimal partition into induced matchings."""
    if g.size > limit:
        raise InstanceTooLarge("edge-instance set", g.size, limit)
    if g.size == 0:
        return 0, {}
    sq = line_graph_square(g)
    count, colouring = chromatic_number(sq, limit=max(limit, sq.n))
    return count, {sq.labels[i]: c for i, c in enumerate(colouring.colour)}


def fractional_strong_colouring(g: Multigraph, limit: int | None = None) -> tuple[Fraction, dict[tuple[Pair, ...], Fraction]]:
    """Optimal fractional strong colouring on induced matchings of the underlying graph.

    Each edge must be covered as many times as its multiplicity; this LP has one row
    per distinct edge, whatever the multiplicities.
    """
    if g.size == 0:
        return Fraction(0), {}
    h = underlying_simple(g)
    sq = simple_line_graph_square(h)
    demand = [g.mult[p] for p in sq.labels]
    value, colouring, _ = weighted_fractional_chromatic(sq, demand, limit)
    parts = {tuple(sq.labels[i] for i in s): w for s, w in colouring.parts.items()}
    return value, parts


def fractional_strong_chromatic_index(g: Multigraph, limit: int | None = None) -> Fraction:
    return fractional_strong_colouring(g, limit)[0]


def fractional_strong_chromatic_index_direct(g: Multigraph, limit: int = 30) -> tuple[Fraction, FractionalColouring]:
    """chi_f of L(G)^2 computed on the edge instances themselves (small inputs)."""
    from .fractional import fractional_chromatic

    return fractional_chromatic(line_graph_square(g), limit)
