"""Exact rational covering LP.

Solves ``min sum(x)`` subject to ``sum_{j : v in S_j} x_j >= demand[v]`` and
``x >= 0`` where each column ``S_j`` is a set of rows given as a bitmask. The
method is a revised dual simplex over :class:`fractions.Fraction`: the all-surplus
basis is dual feasible from the start (every column costs 1), so no phase one is
needed, and the final basis yields both a primal solution and a dual certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..core import bits


class LPError(RuntimeError):
    pass


@dataclass(frozen=True)
class CoverSolution:
    value: Fraction
    primal: dict[int, Fraction]  # column index -> positive weight
    dual: tuple[Fraction, ...]  # one per row


def solve_cover(columns: Sequence[int], demand: Sequence[Fraction | int], max_iter: int = 100_000) -> CoverSolution:
    n = len(demand)
    b = [Fraction(d) for d in demand]
    if any(d < 0 for d in b):
        raise LPError("negative demand")
    covered = 0
    for col in columns:
        covered |= col
    for v in range(n):
        if b[v] > 0 and not covered >> v & 1:
            raise LPError(f"row {v} is not covered by any column")

    m = len(columns)
    col_rows = [bits(c) for c in columns]
    # basic variable per row: ("s", v) surplus or ("x", j) structural
    basis: list[tuple[str, int]] = [("s", v) for v in range(n)]
    # B^{-1}; surplus columns are -e_v so the initial inverse is -I
    binv = [[Fraction(-1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    in_basis_x: set[int] = set()
    in_basis_s: set[int] = set(range(n))

    def column_vector(kind: str, j: int) -> list[Fraction]:
        vec = [Fraction(0)] * n
        if kind == "x":
            for v in col_rows[j]:
                vec[v] = Fraction(1)
        else:
            vec[j] = Fraction(-1)
        return vec

    degenerate = 0
    for _ in range(max_iter):
        xb = [sum((binv[i][k] * b[k] for k in range(n) if b[k]), Fraction(0)) for i in range(n)]
        neg = [i for i in range(n) if xb[i] < 0]
        if not neg:
            break
        if degenerate > 50:
            # Bland's rule: smallest basic variable, smallest entering index
            r = min(neg, key=lambda i: (basis[i][0] == "s", basis[i][1]))
        else:
            r = min(neg, key=lambda i: (xb[i], i))
        cb = [Fraction(1) if kind == "x" else Fraction(0) for kind, _ in basis]
        pi = [sum((cb[i] * binv[i][k] for i in range(n) if cb[i]), Fraction(0)) for k in range(n)]
        rho = binv[r]
        best = None
        best_key = None
        for j in range(m):
            if j in in_basis_x:
                continue
            alpha = sum((rho[v] for v in col_rows[j]), Fraction(0))
            if alpha < 0:
                d = 1 - sum((pi[v] for v in col_rows[j]), Fraction(0))
                key = (d / -alpha, 0, j)
                if best_key is None or key < best_key:
                    best_key, best = key, ("x", j)
        for v in range(n):
            if v in in_basis_s:
                continue
            alpha = -rho[v]
            if alpha < 0:
                key = (pi[v] / -alpha, 1, v)
                if best_key is None or key < best_key:
                    best_key, best = key, ("s", v)
        if best is None:
            raise LPError("covering LP infeasible")
        degenerate = degenerate + 1 if best_key[0] == 0 else 0
        kind, j = best
        col = column_vector(kind, j)
        u = [sum((binv[i][k] * col[k] for k in range(n) if col[k]), Fraction(0)) for i in range(n)]
        piv = u[r]
        row_r = [x / piv for x in binv[r]]
        for i in range(n):
            if i == r or not u[i]:
                continue
            f = u[i]
            binv[i] = [a - f * c for a, c in zip(binv[i], row_r)]
        binv[r] = row_r
        old_kind, old_j = basis[r]
        (in_basis_x if old_kind == "x" else in_basis_s).discard(old_j)
        (in_basis_x if kind == "x" else in_basis_s).add(j)
        basis[r] = (kind, j)
    else:
        raise LPError("iteration limit reached")

    primal: dict[int, Fraction] = {}
    for i, (kind, j) in enumerate(basis):
        if kind == "x" and xb[i] > 0:
            primal[j] = xb[i]
    cb = [Fraction(1) if kind == "x" else Fraction(0) for kind, _ in basis]
    dual = tuple(sum((cb[i] * binv[i][k] for i in range(n) if cb[i]), Fraction(0)) for k in range(n))
    value = sum(primal.values(), Fraction(0))
    certify_cover(columns, b, primal, dual, value)
    return CoverSolution(value, dict(sorted(primal.items())), dual)


def certify_cover(columns, demand, primal, dual, value) -> None:
    """Check primal feasibility, dual feasibility and equal objectives exactly."""
    n = len(demand)
    cover = [Fraction(0)] * n
    for j, x in primal.items():
        if x < 0:
            raise LPError("negative primal weight")
        for v in bits(columns[j]):
            cover[v] += x
    if any(cover[v] < demand[v] for v in range(n)):
        raise LPError("primal solution does not cover every row")
    if any(y < 0 for y in dual):
        raise LPError("negative dual value")
    for col in columns:
        if sum((dual[v] for v in bits(col)), Fraction(0)) > 1:
            raise LPError("dual constraint violated")
    if sum(primal.values(), Fraction(0)) != value or sum(
        (y * d for y, d in zip(dual, demand)), Fraction(0)
    ) != value:
        raise LPError("primal and dual objectives differ")
