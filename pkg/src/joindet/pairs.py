"""Allowable (R, B) modification pairs and their canonical ordering.

A pair removes the vertices ``R`` from the first ``j`` vertices of a graph
and attaches the handles ``B`` between the survivors.  For a join of arity
``j`` there are exactly ``C(2j, j)`` allowable pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Sequence

from .errors import PreconditionError
from .graph import Handle
from .linalg import IntMatrix


@dataclass(frozen=True)
class ModPair:
    removed: frozenset
    handles: tuple  # of Handle, ascending by source

    @classmethod
    def of(cls, removed=(), handles=()) -> "ModPair":
        hs = tuple(sorted(Handle(*h) for h in handles))
        return cls(frozenset(removed), hs)

    @property
    def sign(self) -> int:
        return -1 if (len(self.removed) + len(self.handles)) & 1 else 1

    def conjugate(self) -> "ModPair":
        """``R* = {-i}`` and ``[c, r] -> [-r, -c]``: negated and reversed."""
        return ModPair.of({-i for i in self.removed},
                          [Handle(-r, -c) for c, r in self.handles])

    def __str__(self):
        r = "{" + ",".join(str(i) for i in sorted(self.removed, key=abs)) + "}" if self.removed else "∅"
        b = "{" + ",".join(f"[{h.source},{h.target}]" for h in self.handles) + "}" if self.handles else "∅"
        return f"({r},{b})"


EMPTY_PAIR = ModPair.of()


def conjugate_pair(p: ModPair) -> ModPair:
    return p.conjugate()


def pair_sign(p: ModPair) -> int:
    return p.sign


def is_allowable(handles: Sequence[Sequence[int]], j: int, removed=()) -> bool:
    """True iff all endpoints lie in {1..j} minus ``removed``, none repeats,
    and every two handles are strictly comparable in both coordinates."""
    free = set(range(1, j + 1)) - set(removed)
    seen: set[int] = set()
    for a, b in handles:
        for x in (a, b):
            if x not in free or x in seen:
                return False
            seen.add(x)
    for (a, b), (c, d) in combinations(list(handles), 2):
        if not ((a < c and b < d) or (a > c and b > d)):
            return False
    return True


def _handle_sets(free: Sequence[int]):
    """All allowable handle sets on ``free`` (sorted by source).

    A comparable set with distinct endpoints is a choice of disjoint sorted
    source and target tuples matched in order.
    """
    free = sorted(free)
    yield ()
    for size in range(1, len(free) // 2 + 1):
        for chosen in combinations(free, 2 * size):
            for sources in combinations(chosen, size):
                targets = tuple(x for x in chosen if x not in sources)
                yield tuple(Handle(s, t) for s, t in zip(sources, targets))


def _mask(removed) -> int:
    return sum(1 << (i - 1) for i in removed)


def canonical_key(p: ModPair):
    """Sort key: fewer handles first, then R as a bitmask, then handles in reverse lexicographic order."""
    return (len(p.handles), _mask(p.removed), tuple(-x for h in p.handles for x in h))


@lru_cache(maxsize=None)
def _table(j: int) -> tuple[ModPair, ...]:
    pairs = []
    universe = range(1, j + 1)
    for r in range(j + 1):
        for removed in combinations(universe, r):
            free = [i for i in universe if i not in removed]
            for hs in _handle_sets(free):
                pairs.append(ModPair.of(removed, hs))
    pairs.sort(key=canonical_key)
    return tuple(pairs)


def enumerate_pairs(j: int) -> tuple[ModPair, ...]:
    """Every allowable pair for arity ``j`` in canonical order; index 0 is (∅, ∅)."""
    if j < 1:
        raise PreconditionError(f"arity must be positive, got {j}")
    return _table(j)


def brute_force_pairs(j: int) -> set[ModPair]:
    """Allowable pairs found by filtering every removal set and every handle list.

    Exponential; only used to cross-check :func:`enumerate_pairs` for small j.
    """
    found = set()
    universe = range(1, j + 1)
    for r in range(j + 1):
        for removed in combinations(universe, r):
            free = [i for i in universe if i not in removed]
            arcs = list(permutations(free, 2))
            for size in range(len(free) // 2 + 1):
                for hs in combinations(arcs, size):
                    if is_allowable(hs, j, removed):
                        found.add(ModPair.of(removed, hs))
    return found


@lru_cache(maxsize=None)
def build_sign_matrix(j: int) -> IntMatrix:
    """The sandwich element: diagonal of pair signs in canonical order."""
    return IntMatrix.diagonal([p.sign for p in enumerate_pairs(j)])
