"""The phi representation of j-joins and everything built on it.

``phi(G, j)`` is the k x k matrix (k = C(2j, j)) whose (i, l) entry is the
determinant of G with pair i applied to its first j vertices and the
conjugate of pair l applied to its last j vertices.  Joining graphs
multiplies their phi matrices with the sign matrix E_j sandwiched in
between, which turns chain determinants into small matrix products.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .errors import PreconditionError
from .graph import (Digraph, apply_modification, disjoint_union, make_complete,
                    make_path)
from .linalg import IntMatrix, det_exact, mat_mul, sandwich_power
from .pairs import EMPTY_PAIR, build_sign_matrix, enumerate_pairs


def graph_det(g: Digraph) -> int:
    """Determinant of the adjacency matrix of ``g``."""
    return det_exact(g.adjacency())


def _require_order(g: Digraph, need: int, what: str = "graph"):
    if g.order < need:
        raise PreconditionError(f"{what} has order {g.order}, needs at least {need}")


def decompose_join_det(g: Digraph, h: Digraph, j: int) -> int:
    """``det(G ⋈_j H)`` as the signed sum over allowable pairs of products of
    modified determinants of ``G`` (conjugate side) and ``H`` (direct side)."""
    _require_order(g, j, "left graph")
    _require_order(h, j, "right graph")
    total = 0
    for p in enumerate_pairs(j):
        left = apply_modification(g, EMPTY_PAIR, p)
        right = apply_modification(h, p, EMPTY_PAIR)
        dl = graph_det(left)
        if dl:
            total += p.sign * dl * graph_det(right)
    return total


def _entry(args) -> int:
    g, a, b, j = args
    return graph_det(apply_modification(g, a, b, j))


def phi(g: Digraph, j: int, workers: int | None = None) -> IntMatrix:
    """The k x k matrix of modified determinants of ``g``.

    With ``workers > 1`` the k² determinants are farmed out to a process
    pool; results are assembled in table order, so output is identical.
    """
    if j < 1:
        raise PreconditionError(f"arity must be positive, got {j}")
    _require_order(g, 2 * j)
    pairs = enumerate_pairs(j)
    jobs = [(g, a, b, j) for a in pairs for b in pairs]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flat = list(pool.map(_entry, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        flat = [_entry(job) for job in jobs]
    k = len(pairs)
    return IntMatrix([flat[i * k:(i + 1) * k] for i in range(k)])


def join_det_via_phi(g: Digraph, h: Digraph, j: int) -> int:
    return (phi(g, j) @ build_sign_matrix(j) @ phi(h, j))[0, 0]


def chain_phi(graphs: Sequence[Digraph], j: int) -> IntMatrix:
    """``phi(G1)·E·phi(G2)·E·…·phi(Gt)``; phi of repeated graphs is computed once."""
    if not graphs:
        raise PreconditionError("empty chain")
    e = build_sign_matrix(j)
    cache: dict[Digraph, IntMatrix] = {}

    def get(g):
        if g not in cache:
            cache[g] = phi(g, j)
        return cache[g]

    acc = get(graphs[0])
    for g in graphs[1:]:
        acc = acc @ e @ get(g)
    return acc


def chain_det(graphs: Sequence[Digraph], j: int) -> int:
    return chain_phi(graphs, j)[0, 0]


def nfold_phi(g: Digraph, n: int, j: int) -> IntMatrix:
    """phi of the n-fold join (n joins, n+1 copies of ``g``)."""
    return sandwich_power(phi(g, j), build_sign_matrix(j), n)


def nfold_det(g: Digraph, n: int, j: int) -> int:
    if n < 0:
        raise PreconditionError("fold count must be nonnegative")
    return nfold_phi(g, n, j)[0, 0]


def phi_monoid(g: Digraph, j: int) -> IntMatrix:
    """``E_j·phi(G)``: multiplicative under the ordinary matrix product."""
    return mat_mul(build_sign_matrix(j), phi(g, j))


def equivalent(g: Digraph, h: Digraph, j: int) -> bool:
    return phi(g, j) == phi(h, j)


@dataclass(frozen=True)
class ClassLabel:
    """One of ``identity``, ``nclass`` (value n), ``invertible`` (value ±1), ``other``.

    ``NClass(0)`` is the zero class and ``NClass(1)`` is reported as identity.
    """

    kind: str
    value: int | None = None

    @property
    def is_zero(self) -> bool:
        return self.kind == "nclass" and self.value == 0

    def __str__(self):
        if self.kind == "identity":
            return "Identity"
        if self.kind == "nclass":
            return "Zero" if self.value == 0 else f"NClass({self.value})"
        if self.kind == "invertible":
            return f"Invertible({self.value:+d})"
        return "Other"


IDENTITY = ClassLabel("identity")
OTHER = ClassLabel("other")


def NClass(n: int) -> ClassLabel:
    return IDENTITY if n == 1 else ClassLabel("nclass", n)


ZERO = NClass(0)


def Invertible(unit: int) -> ClassLabel:
    return ClassLabel("invertible", unit)


def classify_matrix(m: IntMatrix, j: int) -> ClassLabel:
    e = build_sign_matrix(j)
    n = m[0, 0]
    if n >= 0 and m == e * n:
        return NClass(n)
    d = det_exact(mat_mul(e, m))
    if d in (1, -1):
        return Invertible(d)
    return OTHER


def classify(g: Digraph, j: int) -> ClassLabel:
    return classify_matrix(phi(g, j), j)


def _with_boundary(base: Digraph, j: int) -> Digraph:
    """Place ``base`` on the middle labels and j copies of P2 around it,
    copy i joining vertex i to vertex total+1-i."""
    total = base.order + 2 * j
    edges = {(u + j, v + j) for u, v in base.edges}
    for i in range(1, j + 1):
        edges.add((i, total + 1 - i))
        edges.add((total + 1 - i, i))
    return Digraph(total, frozenset(edges))


def make_identity(j: int) -> Digraph:
    """Canonical identity-class graph: a base of determinant (-1)^j (one or
    two copies of P2) surrounded by j boundary copies of P2."""
    if j < 1:
        raise PreconditionError(f"arity must be positive, got {j}")
    p2 = make_path(2)
    base = p2 if j % 2 else disjoint_union(p2, p2)
    return _with_boundary(base, j)


def make_n_class(n: int, j: int) -> Digraph:
    """Graph with ``phi = n·E_j``: K_{n+1} (plus one P2 when n+j is odd) inside j boundary copies of P2."""
    if j < 1:
        raise PreconditionError(f"arity must be positive, got {j}")
    if n < 0:
        raise PreconditionError(f"class index must be nonnegative, got {n}")
    base = make_complete(n + 1)
    if (n + j) % 2:
        base = disjoint_union(base, make_path(2))
    return _with_boundary(base, j)


__all__ = [
    "ClassLabel", "IDENTITY", "OTHER", "ZERO", "NClass", "Invertible",
    "graph_det", "decompose_join_det", "phi", "join_det_via_phi", "chain_phi",
    "chain_det", "nfold_phi", "nfold_det", "phi_monoid", "equivalent",
    "classify", "classify_matrix", "make_identity", "make_n_class",
]
