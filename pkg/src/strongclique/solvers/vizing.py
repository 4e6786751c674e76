"""Misra--Gries constructive proof of Vizing's theorem."""

from __future__ import annotations

from ..core import Pair, SimpleGraph


def vizing_edge_colouring(h: SimpleGraph) -> dict[Pair, int]:
    """Proper edge colouring with at most ``Delta + 1`` colours.

    Edges are processed in sorted order; colours are ``0..Delta``.
    """
    delta = h.max_degree()
    palette = range(delta + 1)
    col: dict[int, dict[int, int]] = {v: {} for v in range(h.n)}  # col[u][w] = colour of uw
    at: dict[int, dict[int, int]] = {v: {} for v in range(h.n)}  # at[u][c] = neighbour via colour c

    def free(v: int, c: int) -> bool:
        return c not in at[v]

    def first_free(v: int) -> int:
        return next(c for c in palette if c not in at[v])

    def set_colour(u: int, w: int, c: int) -> None:
        col[u][w] = col[w][u] = c
        at[u][c] = w
        at[w][c] = u

    def clear(u: int, w: int) -> None:
        c = col[u].pop(w)
        del col[w][u]
        del at[u][c]
        del at[w][c]

    for u, v in h.sorted_edges():
        # maximal fan at u starting with the uncoloured edge uv
        fan = [v]
        in_fan = {v}
        grown = True
        while grown:
            grown = False
            last = fan[-1]
            for w in sorted(col[u]):
                if w not in in_fan and free(last, col[u][w]):
                    fan.append(w)
                    in_fan.add(w)
                    grown = True
                    break
        c = first_free(u)
        d = first_free(fan[-1])
        if c != d:
            # invert the cd-path through u; c is free at u so the path starts with d
            path = [u]
            cur, want = u, d
            while want in at[cur]:
                nxt = at[cur][want]
                path.append(nxt)
                cur = nxt
                want = c if want == d else d
            edges = list(zip(path, path[1:]))
            old = [col[a][b] for a, b in edges]
            for a, b in edges:
                clear(a, b)
            for (a, b), k in zip(edges, old):
                set_colour(a, b, c if k == d else d)
        # shortest prefix that is still a fan and has d free at its end
        end = None
        for i, w in enumerate(fan):
            if i > 0 and (fan[i] not in col[u] or not free(fan[i - 1], col[u][fan[i]])):
                break
            if free(w, d):
                end = i
                break
        if end is None:
            raise AssertionError("Misra-Gries invariant broken: no fan prefix ends at a d-free vertex")
        # rotate the prefix
        for i in range(end):
            k = col[u][fan[i + 1]]
            clear(u, fan[i + 1])
            set_colour(u, fan[i], k)
        set_colour(u, fan[end], d)

    return {(a, b): col[a][b] for a, b in h.sorted_edges()}


def is_proper_edge_colouring(h: SimpleGraph, colouring: dict[Pair, int]) -> bool:
    if set(colouring) != set(h.edges):
        return False
    seen: dict[tuple[int, int], Pair] = {}
    for (a, b), c in colouring.items():
        for x in (a, b):
            if (x, c) in seen:
                return False
            seen[(x, c)] = (a, b)
    return True


def colour_classes(colouring: dict[Pair, int]) -> list[list[Pair]]:
    out: dict[int, list[Pair]] = {}
    for e, c in sorted(colouring.items()):
        out.setdefault(c, []).append(e)
    return [out[c] for c in sorted(out)]
