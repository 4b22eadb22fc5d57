"""Slow, independent determinant oracles for small digraphs.

Both functions work straight from the edge set and share nothing with the
elimination code in :mod:`joindet.linalg`.
"""

from __future__ import annotations

from .errors import PreconditionError
from .graph import Digraph

MAX_ORDER = 10


def _check(g: Digraph):
    if g.order > MAX_ORDER:
        raise PreconditionError(f"oracle refuses order {g.order} > {MAX_ORDER}")
    assert all(u != v for u, v in g.edges), "oracles assume a loop-free graph"


def det_permutations(g: Digraph) -> int:
    """Leibniz expansion: sum of sign(σ) over permutations σ with every (i, σ(i)) an edge."""
    _check(g)
    n = g.order
    out = [[v for v in range(1, n + 1) if (u, v) in g.edges] for u in range(1, n + 1)]
    total = 0
    used = [False] * (n + 1)
    chosen: list[int] = []

    def walk(row: int):
        nonlocal total
        if row > n:
            inversions = sum(1 for a in range(n) for b in range(a + 1, n) if chosen[a] > chosen[b])
            total += -1 if inversions & 1 else 1
            return
        for v in out[row - 1]:
            if not used[v]:
                used[v] = True
                chosen.append(v)
                walk(row + 1)
                chosen.pop()
                used[v] = False

    walk(1)
    return total


def cycle_covers(g: Digraph):
    """Yield every spanning cover of ``g`` by vertex-disjoint directed cycles.

    Each cover is a list of cycles; each cycle is a tuple of vertices that
    starts at its smallest member.  Cycles are grown from the smallest
    uncovered vertex so no cover is produced twice.
    """
    _check(g)
    n = g.order
    succ = {u: [v for v in range(1, n + 1) if (u, v) in g.edges] for u in range(1, n + 1)}
    covered = [False] * (n + 1)

    def extend(cycles):
        start = next((v for v in range(1, n + 1) if not covered[v]), None)
        if start is None:
            yield list(cycles)
            return
        covered[start] = True
        path = [start]

        def grow(tip):
            for w in succ[tip]:
                if w == start and len(path) >= 2:
                    cycles.append(tuple(path))
                    yield from extend(cycles)
                    cycles.pop()
                elif w > start and not covered[w]:
                    covered[w] = True
                    path.append(w)
                    yield from grow(w)
                    path.pop()
                    covered[w] = False

        yield from grow(start)
        covered[start] = False

    yield from extend([])


def det_cycle_covers(g: Digraph) -> int:
    """Harary's expansion: each spanning cycle cover with c cycles contributes (-1)^(n-c)."""
    n = g.order
    return sum(-1 if (n - len(cover)) & 1 else 1 for cover in cycle_covers(g))
