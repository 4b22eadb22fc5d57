"""Randomized invariant checks shared by the ``verify`` command and the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb

from .algebra import decompose_join_det, graph_det, make_identity, phi, phi_monoid
from .graph import j_join, random_digraph
from .io import parse_graph, serialize_graph
from .linalg import IntMatrix, mat_mul
from .oracle import det_cycle_covers, det_permutations
from .pairs import build_sign_matrix, conjugate_pair, enumerate_pairs


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.cases - len(self.failures)}/{self.cases}"


def random_pair(rng: random.Random, j: int, density: float = 0.4, spread: int = 4):
    g = random_digraph(rng.randint(2 * j, 2 * j + spread), density, rng)
    h = random_digraph(rng.randint(2 * j, 2 * j + spread), density, rng)
    return g, h


def check_pairs(j: int) -> CheckResult:
    res = CheckResult(f"pair table j={j}")
    table = enumerate_pairs(j)
    res.cases = len(table) + 1
    if len(table) != comb(2 * j, j):
        res.failures.append(("count", len(table)))
    for p in table:
        if conjugate_pair(conjugate_pair(p)) != p:
            res.failures.append(("involution", str(p)))
    return res


def check_join(j: int, samples: int, rng: random.Random) -> list[CheckResult]:
    decomposition = CheckResult(f"decomposition j={j}")
    homomorphism = CheckResult(f"homomorphism j={j}")
    monoid = CheckResult(f"monoid form j={j}")
    e = build_sign_matrix(j)
    for _ in range(samples):
        g, h = random_pair(rng, j)
        joined = j_join(g, h, j)
        pg, ph = phi(g, j), phi(h, j)
        pj = phi(joined, j)
        direct = graph_det(joined)
        via_sum = decompose_join_det(g, h, j)
        via_phi = (pg @ e @ ph)[0, 0]
        decomposition.cases += 1
        if not direct == via_sum == via_phi:
            decomposition.failures.append((g, h, direct, via_sum, via_phi))
        homomorphism.cases += 1
        if pj != pg @ e @ ph:
            homomorphism.failures.append((g, h))
        monoid.cases += 1
        if mat_mul(e, pj) != mat_mul(e, pg) @ mat_mul(e, ph):
            monoid.failures.append((g, h))
    return [decomposition, homomorphism, monoid]


def check_oracles(samples: int, rng: random.Random, max_order: int = 8) -> CheckResult:
    res = CheckResult("oracle agreement")
    for _ in range(samples):
        g = random_digraph(rng.randint(1, max_order), rng.choice((0.2, 0.5, 0.8)), rng)
        a, b, c = graph_det(g), det_permutations(g), det_cycle_covers(g)
        res.cases += 1
        if not a == b == c:
            res.failures.append((g, a, b, c))
    return res


def check_round_trip(samples: int, rng: random.Random) -> CheckResult:
    res = CheckResult("parse/serialize round trip")
    for _ in range(samples):
        g = random_digraph(rng.randint(0, 12), rng.random(), rng)
        res.cases += 1
        text = serialize_graph(g)
        if parse_graph(text) != g or serialize_graph(parse_graph(text)) != text:
            res.failures.append(g)
    return res


def check_phi_monoid_identity(j: int) -> CheckResult:
    res = CheckResult(f"identity representative j={j}", cases=1)
    if phi_monoid(make_identity(j), j) != IntMatrix.identity(len(enumerate_pairs(j))):
        res.failures.append(j)
    return res


def run_suite(j: int, samples: int = 20, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    results = [check_pairs(j)]
    results += check_join(j, samples, rng)
    results.append(check_phi_monoid_identity(j))
    results.append(check_oracles(samples, rng))
    results.append(check_round_trip(samples, rng))
    return results
