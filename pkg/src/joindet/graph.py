"""Labeled digraphs and the structural operations used by the join algebra.

Vertices are always labeled ``1..order``.  Negative labels count from the
end: ``-1`` is the last vertex, ``-2`` the one before it, and so on.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import GraphIndexError, PreconditionError


class Handle(NamedTuple):
    """Directed handle ``[source, target]``: a new vertex w with source->w->target."""

    source: int
    target: int


@dataclass(frozen=True)
class Digraph:
    order: int
    edges: frozenset

    def __post_init__(self):
        if self.order < 0:
            raise PreconditionError(f"invalid order {self.order}")
        edges = frozenset((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.order and 1 <= v <= self.order):
                raise GraphIndexError(f"edge ({u}, {v}) outside 1..{self.order}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]] = (),
                   undirected: Iterable[tuple[int, int]] = ()) -> "Digraph":
        es = set(edges)
        for u, v in undirected:
            es.add((u, v))
            es.add((v, u))
        return cls(order, frozenset(es))

    def adjacency(self) -> list[list[int]]:
        a = [[0] * self.order for _ in range(self.order)]
        for u, v in self.edges:
            a[u - 1][v - 1] = 1
        return a

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Send vertex ``i`` to ``perm[i-1]``."""
        if sorted(perm) != list(range(1, self.order + 1)):
            raise PreconditionError("relabeling is not a permutation of 1..order")
        return Digraph(self.order, frozenset((perm[u - 1], perm[v - 1]) for u, v in self.edges))

    def __repr__(self):
        return f"Digraph(order={self.order}, edges={sorted(self.edges)})"


EMPTY = Digraph(0, frozenset())


def make_complete(m: int) -> Digraph:
    if m < 1:
        raise PreconditionError(f"invalid order {m} for complete graph")
    return Digraph(m, frozenset((u, v) for u in range(1, m + 1)
                                for v in range(1, m + 1) if u != v))


def make_path(m: int, labels: Sequence[int] | None = None) -> Digraph:
    """Bidirected path whose i-th position carries ``labels[i]``."""
    if m < 1:
        raise PreconditionError(f"invalid order {m} for path")
    if labels is None:
        labels = range(1, m + 1)
    labels = list(labels)
    if sorted(labels) != list(range(1, m + 1)):
        raise PreconditionError(f"labels {labels} are not a permutation of 1..{m}")
    return Digraph.from_edges(m, undirected=zip(labels, labels[1:]))


def make_edgeless(m: int) -> Digraph:
    return Digraph(m, frozenset())


def random_digraph(order: int, density: float, rng: random.Random) -> Digraph:
    """Each of the order*(order-1) possible arcs is present independently with probability ``density``."""
    return Digraph(order, frozenset(
        (u, v) for u in range(1, order + 1) for v in range(1, order + 1)
        if u != v and rng.random() < density))


def resolve_index(i: int, m: int) -> int:
    if i == 0:
        raise GraphIndexError("vertex index 0 is not a valid label")
    r = i if i > 0 else m + 1 + i
    if not 1 <= r <= m:
        raise GraphIndexError(f"index {i} does not resolve into 1..{m}")
    return r


def _resolve_set(labels: Iterable[int], m: int) -> set[int]:
    out: set[int] = set()
    for i in labels:
        r = resolve_index(i, m)
        if r in out:
            raise GraphIndexError(f"vertex {r} listed twice")
        out.add(r)
    return out


def delete_vertices(g: Digraph, labels: Iterable[int]) -> Digraph:
    """Induced subgraph on the survivors, relabeled contiguously in label order."""
    gone = _resolve_set(labels, g.order)
    if not gone:
        return g
    new = {}
    for v in range(1, g.order + 1):
        if v not in gone:
            new[v] = len(new) + 1
    return Digraph(len(new), frozenset((new[u], new[v]) for u, v in g.edges
                                       if u in new and v in new))


def attach_handles(g: Digraph, handles: Iterable[Sequence[int]]) -> Digraph:
    """Append one handle vertex per entry, in order.

    Signed endpoints are resolved against the order of ``g`` before any
    handle vertex is added.
    """
    m = g.order
    resolved = []
    for h in handles:
        u, v = resolve_index(h[0], m), resolve_index(h[1], m)
        if u == v:
            raise PreconditionError(f"handle endpoints coincide: [{h[0]}, {h[1]}]")
        resolved.append((u, v))
    if not resolved:
        return g
    edges = set(g.edges)
    for n, (u, v) in enumerate(resolved, start=m + 1):
        edges.add((u, n))
        edges.add((n, v))
    return Digraph(m + len(resolved), frozenset(edges))


def apply_modification(g: Digraph, direct, conj, j: int | None = None) -> Digraph:
    """Compute ``(G \\ R1 u R2*)_{B1 u B2*}``.

    ``direct`` acts on the first vertices of ``g``; ``conj`` is an
    unconjugated pair (anything with ``removed``/``handles`` and a
    ``conjugate()`` method) that is mirrored onto the last vertices.
    """
    m = g.order
    if j is not None and m < 2 * j:
        raise PreconditionError(f"graph of order {m} is smaller than 2j = {2 * j}")
    star = conj.conjugate()
    front = set(direct.removed) | {x for h in direct.handles for x in h}
    back = {resolve_index(x, m) for x in star.removed} | {
        resolve_index(x, m) for h in star.handles for x in h}
    front = {resolve_index(x, m) for x in front}
    if front & back:
        raise PreconditionError(
            f"direct and conjugate modifications overlap on vertices {sorted(front & back)}")
    h = attach_handles(g, list(direct.handles) + list(star.handles))
    return delete_vertices(h, list(direct.removed) + [resolve_index(x, m) for x in star.removed])


def disjoint_union(g: Digraph, h: Digraph) -> Digraph:
    m = g.order
    return Digraph(m + h.order, g.edges | {(u + m, v + m) for u, v in h.edges})


def j_join(g: Digraph, h: Digraph, j: int, strict: bool = False) -> Digraph:
    """Join the last ``j`` vertices of ``g`` to the first ``j`` of ``h``.

    Vertex ``m+1-i`` of ``g`` is paired with vertex ``i`` of ``h`` (label
    ``m+i`` in the result), in both directions.  With ``strict`` both
    graphs must have at least ``2j`` vertices.
    """
    if j < 1:
        raise PreconditionError(f"join arity must be positive, got {j}")
    need = 2 * j if strict else j
    if g.order < need or h.order < need:
        raise PreconditionError(
            f"{j}-join needs graphs of order >= {need}, got {g.order} and {h.order}")
    u = disjoint_union(g, h)
    m = g.order
    extra = set()
    for i in range(1, j + 1):
        extra.add((m + 1 - i, m + i))
        extra.add((m + i, m + 1 - i))
    return Digraph(u.order, u.edges | extra)


def join_chain(graphs: Sequence[Digraph], j: int) -> Digraph:
    """Materialize ``G1 ⋈ G2 ⋈ ... ⋈ Gt`` left to right."""
    if not graphs:
        raise PreconditionError("empty chain")
    out = graphs[0]
    for g in graphs[1:]:
        out = j_join(out, g, j)
    return out
