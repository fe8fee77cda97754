"""Exact maximum-weight perfect assignment (Hungarian method, O(n^3)).

Weights are Python ints (callers scale rationals to a common denominator);
``None`` marks a forbidden cell.
"""

from __future__ import annotations

from typing import Optional, Sequence

Weights = Sequence[Sequence[Optional[int]]]

_INF = float("inf")


def max_assignment(w: Weights) -> tuple[int, list[int]] | None:
    """Return ``(total, cols)`` maximizing ``sum(w[i][cols[i]])``, or ``None`` if no
    perfect assignment avoids the forbidden cells."""
    n = len(w)
    if n == 0:
        return 0, []
    # Shortest augmenting path on costs -w; u, v are the dual potentials.
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    p = [0] * (n + 1)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [_INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            row = w[i0 - 1]
            ui = u[i0]
            delta = _INF
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                wij = row[j - 1]
                if wij is not None:
                    cur = -wij - ui - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            if delta == _INF:
                return None
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                elif minv[j] != _INF:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    cols = [0] * n
    for j in range(1, n + 1):
        cols[p[j] - 1] = j - 1
    total = sum(w[i][cols[i]] for i in range(n))
    return total, cols


def submatrix(w: Weights, rows: Sequence[int], cols: Sequence[int]) -> list[list[Optional[int]]]:
    return [[w[i][j] for j in cols] for i in rows]


def max_assignment_value(w: Weights, rows: Sequence[int], cols: Sequence[int]) -> int | None:
    res = max_assignment(submatrix(w, rows, cols))
    return None if res is None else res[0]


def optimal_assignments(w: Weights, limit: int | None = None):
    """Yield every optimal assignment in lexicographic order of the column tuple.

    Each branch is pruned by re-solving the remaining subproblem, so the cost is
    polynomial per assignment produced.
    """
    n = len(w)
    best = max_assignment(w)
    if best is None:
        return
    produced = 0

    def extend(row: int, free: list[int], target: int, prefix: list[int]):
        nonlocal produced
        if row == n:
            produced += 1
            yield tuple(prefix)
            return
        for j in free:
            wij = w[row][j]
            if wij is None:
                continue
            rest = [c for c in free if c != j]
            sub = max_assignment_value(w, range(row + 1, n), rest)
            if sub is None or wij + sub != target:
                continue
            prefix.append(j)
            yield from extend(row + 1, rest, target - wij, prefix)
            prefix.pop()
            if limit is not None and produced >= limit:
                return

    yield from extend(0, list(range(n)), best[0], [])
