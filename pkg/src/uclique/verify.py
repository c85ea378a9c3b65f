"""Verification suites cross-checking closed forms against independent routes.

Each suite walks its instances in ascending order and stops at the first
failure, so the reported counterexample is the smallest one reached.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from math import gcd
from typing import Callable

from .clique_count import (
    clique_count_bruteforce,
    clique_count_formula,
    clique_formula_terms,
    clique_number,
    common_neighbor_count,
    enumerate_cliques,
    cayley_clique_count,
    max_clique_bruteforce,
    certified_chromatic_number,
)
from .graph_core import (
    BitsetGraph,
    ProductGraphSpec,
    adjacent,
    cayley_adjacent,
    crt_decode,
    crt_encode,
    unitary_cayley_spec,
)
from .number_theory import euler_phi, schemmel, schemmel_naive, smallest_prime_factor
from .spectrum import eigenvector_residual, moment, nonzero_eigenvalues_divide_phi


@dataclass
class SuiteResult:
    name: str
    passed: bool
    instances: int
    counterexample: dict | None = None
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


class _Fail(Exception):
    def __init__(self, **info):
        self.info = info


def _run(name: str, body: Callable[[], tuple[int, dict]]) -> SuiteResult:
    start = time.perf_counter()
    try:
        instances, notes = body()
    except _Fail as fail:
        return SuiteResult(name, False, fail.info.pop("instances", 0), fail.info,
                           time.perf_counter() - start)
    return SuiteResult(name, True, instances, None, time.perf_counter() - start, notes)


def random_specs(count: int, *, seed: int = 0, max_r: int = 3, max_a: int = 3,
                 max_b: int = 5, max_vertices: int = 200) -> list[ProductGraphSpec]:
    """Reproducible random specs, rejection-sampled to at most ``max_vertices``."""
    rng = random.Random(seed)
    specs = []
    while len(specs) < count:
        r = rng.randint(1, max_r)
        spec = ProductGraphSpec.of(
            *((rng.randint(1, max_a), rng.randint(1, max_b)) for _ in range(r))
        )
        if spec.vertex_count <= max_vertices:
            specs.append(spec)
    return specs


def theorem_suite(n_max: int = 60, m_max: int = 5, specs: int = 200, seed: int = 0) -> SuiteResult:
    def body():
        done = 0
        for n in range(2, n_max + 1):
            spec = unitary_cayley_spec(n)
            for m in range(1, m_max + 1):
                expected = clique_count_bruteforce(n, m)
                actual = clique_count_formula(spec, m)
                done += 1
                if expected != actual:
                    raise _Fail(n=n, m=m, expected=expected, actual=actual, instances=done)
        for spec in random_specs(specs, seed=seed):
            for m in range(1, m_max + 1):
                expected = clique_count_bruteforce(spec, m)
                actual = clique_count_formula(spec, m)
                done += 1
                if expected != actual:
                    raise _Fail(spec=str(spec), m=m, expected=expected, actual=actual,
                                instances=done)
        return done, {}

    return _run("theorem", body)


def edges_suite(n_max: int = 1000, brute_max: int = 300) -> SuiteResult:
    def body():
        for n in range(2, n_max + 1):
            formula = n * euler_phi(n) // 2
            if cayley_clique_count(n, 2) != formula:
                raise _Fail(n=n, expected=formula, actual=cayley_clique_count(n, 2),
                            instances=n - 1)
            if n <= brute_max:
                counted = BitsetGraph.from_cayley(n).edge_count()
            else:
                # translation invariance: deg(x) = deg(0) for every x
                deg0 = sum(1 for y in range(n) if cayley_adjacent(n, 0, y))
                for x in (1, n // 2, n - 1):
                    if sum(1 for y in range(n) if cayley_adjacent(n, x, y)) != deg0:
                        raise _Fail(n=n, reason="graph is not regular", instances=n - 1)
                counted = n * deg0 // 2
            if counted != formula:
                raise _Fail(n=n, expected=counted, actual=formula, instances=n - 1)
        return n_max - 1, {"brute_max": brute_max}

    return _run("edges", body)


def triangles_suite(n_max: int = 300) -> SuiteResult:
    def body():
        for n in range(2, n_max + 1):
            formula = n * euler_phi(n) * schemmel(2, n)
            if formula % 6:
                raise _Fail(n=n, reason="n*phi(n)*S_2(n) not divisible by 6", instances=n - 1)
            formula //= 6
            counted = clique_count_bruteforce(n, 3)
            if counted != formula or cayley_clique_count(n, 3) != formula:
                raise _Fail(n=n, expected=counted, actual=formula, instances=n - 1)
        return n_max - 1, {}

    return _run("triangles", body)


def schemmel_suite(n_max: int = 2000, r_max: int = 6) -> SuiteResult:
    def body():
        done = 0
        for n in range(1, n_max + 1):
            for r in range(r_max + 1):
                done += 1
                fast, slow = schemmel(r, n), schemmel_naive(r, n)
                if fast != slow:
                    raise _Fail(n=n, r=r, expected=slow, actual=fast, instances=done)
        return done, {}

    return _run("schemmel", body)


def clique_number_suite(n_max: int = 500, brute_max: int = 60) -> SuiteResult:
    def body():
        for n in range(2, n_max + 1):
            p = smallest_prime_factor(n)
            got = clique_number(unitary_cayley_spec(n))
            if got != p:
                raise _Fail(n=n, expected=p, actual=got, instances=n - 1)
            if cayley_clique_count(n, p) == 0 or cayley_clique_count(n, p + 1) != 0:
                raise _Fail(n=n, reason="formula does not vanish exactly above p",
                            instances=n - 1)
            if n <= brute_max:
                found = len(max_clique_bruteforce(n))
                if found != p:
                    raise _Fail(n=n, expected=p, actual=found, route="bruteforce",
                                instances=n - 1)
                if certified_chromatic_number(n) != p:
                    raise _Fail(n=n, reason="chromatic certificate failed", instances=n - 1)
        return n_max - 1, {"brute_max": brute_max}

    return _run("clique-number", body)


def induction_suite(n_max: int = 40, m_max: int = 4) -> SuiteResult:
    def body():
        done = 0
        for n in range(2, n_max + 1):
            g = BitsetGraph.from_cayley(n)
            for m in range(1, m_max + 1):
                total = 0
                for clique in enumerate_cliques(n, m, bitset=g):
                    cn = common_neighbor_count(n, clique, bitset=g)
                    done += 1
                    if not cn.agree:
                        raise _Fail(n=n, m=m, clique=list(clique), expected=cn.predicted,
                                    actual=cn.scanned, instances=done)
                    total += cn.scanned
                bigger = clique_count_bruteforce(n, m + 1)
                if total != (m + 1) * bigger:
                    raise _Fail(n=n, m=m, expected=(m + 1) * bigger, actual=total,
                                instances=done)
        return done, {}

    return _run("induction", body)


def spectrum_suite(n_max: int = 200, witness_max: int = 60, tol: float = 1e-9) -> SuiteResult:
    def body():
        worst = 0.0
        for n in range(2, n_max + 1):
            phi, s2 = euler_phi(n), schemmel(2, n)
            checks = {
                "moment1": (moment(n, 1), 0),
                "moment2": (moment(n, 2), n * phi),
                "moment3": (moment(n, 3), n * phi * s2),
                "moment3_vs_triangles": (moment(n, 3), 6 * cayley_clique_count(n, 3)),
            }
            for what, (actual, expected) in checks.items():
                if actual != expected:
                    raise _Fail(n=n, check=what, expected=expected, actual=actual,
                                instances=n - 1)
            if not nonzero_eigenvalues_divide_phi(n):
                raise _Fail(n=n, check="divides phi", instances=n - 1)
            if n <= witness_max:
                res = eigenvector_residual(n)
                worst = max(worst, res)
                if res > tol:
                    raise _Fail(n=n, check="eigenvector", residual=res, tol=tol,
                                instances=n - 1)
        return n_max - 1, {"max_eigenvector_residual": worst}

    return _run("spectrum", body)


def crt_suite(n_max: int = 100, sampled_max: int = 2000, pairs: int = 10_000,
              seed: int = 0) -> SuiteResult:
    def body():
        done = 0
        for n in range(2, n_max + 1):
            spec = unitary_cayley_spec(n)
            enc = [crt_encode(n, x) for x in range(n)]
            for x in range(n):
                if crt_decode(n, enc[x]) != x:
                    raise _Fail(n=n, x=x, reason="round trip", instances=done)
                for y in range(n):
                    done += 1
                    if cayley_adjacent(n, x, y) != adjacent(spec, enc[x], enc[y]):
                        raise _Fail(n=n, x=x, y=y, reason="adjacency", instances=done)
        rng = random.Random(seed)
        for _ in range(pairs):
            n = rng.randint(n_max + 1, sampled_max)
            x, y = rng.randrange(n), rng.randrange(n)
            done += 1
            u, v = crt_encode(n, x), crt_encode(n, y)
            if cayley_adjacent(n, x, y) != adjacent(unitary_cayley_spec(n), u, v):
                raise _Fail(n=n, x=x, y=y, reason="adjacency", instances=done)
            if crt_decode(n, u) != x:
                raise _Fail(n=n, x=x, reason="round trip", instances=done)
        return done, {}

    return _run("crt", body)


def divisibility_suite(n_max: int = 1000, m_max: int = 12, specs: int = 200,
                       seed: int = 0) -> SuiteResult:
    """m! must divide the numerator with zero remainder for every instance."""
    def body():
        done = 0
        targets = [unitary_cayley_spec(n) for n in range(2, n_max + 1)]
        targets += random_specs(specs, seed=seed)
        for spec in targets:
            for m in range(1, m_max + 1):
                num, den = clique_formula_terms(spec, m)
                done += 1
                if num % den:
                    raise _Fail(spec=str(spec), m=m, remainder=num % den, instances=done)
        return done, {}

    return _run("divisibility", body)


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "clique-number": clique_number_suite,
    "crt": crt_suite,
    "divisibility": divisibility_suite,
    "edges": edges_suite,
    "induction": induction_suite,
    "schemmel": schemmel_suite,
    "spectrum": spectrum_suite,
    "theorem": theorem_suite,
    "triangles": triangles_suite,
}
