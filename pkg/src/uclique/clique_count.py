"""Counting cliques of a fixed order in direct products of K[a, b].

The closed form multiplies the per-factor values max(a * (b - k), 0) for
k = 0 .. m-1 and divides by m! at the end. Everything else in this module is
explicit search over a materialized graph and never touches the formula, so
the two can be checked against each other.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from math import factorial, prod
from typing import Callable, Iterator, NamedTuple, Sequence

from .errors import DivisibilityError, DomainError, NotACliqueError
from .graph_core import (
    BitsetGraph,
    Graph,
    ProductGraphSpec,
    cayley_adjacent,
    graph_vertex_count,
    iter_bits,
    materialize,
    unitary_cayley_spec,
)
from .number_theory import schemmel_pair, smallest_prime_factor

Clique = tuple


def _as_spec(graph: Graph) -> ProductGraphSpec:
    if isinstance(graph, ProductGraphSpec):
        return graph
    return unitary_cayley_spec(graph)


def _check_order(m: int, allow_empty: bool = False) -> None:
    if not isinstance(m, int) or isinstance(m, bool):
        raise TypeError(f"m must be an int, got {type(m).__name__}")
    if m < 0 or (m == 0 and not allow_empty):
        raise DomainError(f"clique order must be >= 1, got {m}")


# -- closed form --------------------------------------------------------------


def clique_formula_terms(spec: ProductGraphSpec, m: int) -> tuple[int, int]:
    """Return (numerator, m!) where numerator = prod_k prod_i S_k(a_i, b_i), k < m."""
    _check_order(m, allow_empty=True)
    numerator = 1
    for k in range(m):
        for a, b in spec.pairs():
            numerator *= schemmel_pair(k, a, b)
        if numerator == 0:
            break
    return numerator, factorial(m)


def clique_count_formula(spec: Graph, m: int, *, allow_empty: bool = False) -> int:
    """Exact number of order-m cliques in the product graph ``spec``.

    ``m = 0`` is rejected unless ``allow_empty`` is set, in which case the
    empty clique gives 1.
    """
    _check_order(m, allow_empty)
    numerator, denominator = clique_formula_terms(_as_spec(spec), m)
    count, remainder = divmod(numerator, denominator)
    if remainder:
        raise DivisibilityError(
            f"{m}! does not divide {numerator} for spec {spec}: remainder {remainder}"
        )
    return count


def cayley_clique_count(n: int, m: int, *, allow_empty: bool = False) -> int:
    """Order-m cliques of G(Z/nZ), i.e. prod_{k=1..m} S_{k-1}(n) / k."""
    return clique_count_formula(unitary_cayley_spec(n), m, allow_empty=allow_empty)


def clique_number(graph: Graph) -> int:
    """Largest m with a clique of order m: the smallest part count min b_i."""
    return min(f.parts for f in _as_spec(graph).factors)


# -- common neighbours of a clique ---------------------------------------------


class CommonNeighbors(NamedTuple):
    scanned: int
    predicted: int

    @property
    def agree(self) -> bool:
        return self.scanned == self.predicted


def _index_of(graph: Graph, label) -> int:
    if isinstance(graph, ProductGraphSpec):
        graph.check_vertex(label)
        idx = 0
        for x, f in zip(label, graph.factors):
            idx = idx * f.vertex_count + x
        return idx
    if not isinstance(label, int) or not 0 <= label < graph:
        raise DomainError(f"residue {label!r} out of range [0, {graph})")
    return label


def common_neighbor_count(
    graph: Graph, clique: Sequence, *, bitset: BitsetGraph | None = None
) -> CommonNeighbors:
    """Count vertices adjacent to every member of ``clique`` two ways.

    ``scanned`` comes from the materialized graph; ``predicted`` is
    prod_i S_m(a_i, b_i) with m = len(clique). Pass a prebuilt ``bitset``
    when calling this in a loop.
    """
    g = bitset if bitset is not None else materialize(graph)
    idx = [_index_of(graph, v) for v in clique]
    for s, i in enumerate(idx):
        for j in idx[s + 1 :]:
            if not (g.nbrs[i] >> j) & 1:
                raise NotACliqueError(g.labels[i], g.labels[j])
    mask = (1 << len(g)) - 1
    for i in idx:
        mask &= g.nbrs[i]
    m = len(idx)
    predicted = prod(schemmel_pair(m, a, b) for a, b in _as_spec(graph).pairs())
    return CommonNeighbors(mask.bit_count(), predicted)


# -- explicit search ------------------------------------------------------------


def _count_extensions(nbrs: list[int], cand: int, depth: int) -> int:
    # cliques of `depth` more vertices drawn from cand in increasing order
    if depth == 1:
        return cand.bit_count()
    total = 0
    while cand:
        if cand.bit_count() < depth:
            break
        low = cand & -cand
        cand ^= low
        total += _count_extensions(nbrs, cand & nbrs[low.bit_length() - 1], depth - 1)
    return total


def _count_from_roots(graph: Graph, m: int, cap: int | None, roots: list[int]) -> int:
    g = materialize(graph, cap)
    total = 0
    for v in roots:
        above = g.nbrs[v] >> (v + 1) << (v + 1)
        total += _count_extensions(g.nbrs, above, m - 1) if m > 1 else 1
    return total


def clique_count_bruteforce(
    graph: Graph, m: int, *, cap: int | None = None, workers: int = 1
) -> int:
    """Count order-m cliques by ordered recursive extension over bitsets.

    Each clique is found once, from its smallest vertex. With ``workers > 1``
    the root vertices are split round-robin across processes; the result does
    not depend on the worker count.
    """
    _check_order(m)
    g = materialize(graph, cap)
    size = len(g)
    if m > size:
        return 0
    if workers <= 1:
        return _count_extensions(g.nbrs, (1 << size) - 1, m)
    chunks = [list(range(w, size, workers)) for w in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_count_from_roots, graph, m, cap, c) for c in chunks if c]
        return sum(f.result() for f in futures)


def _extend(nbrs: list[int], cand: int, depth: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
    if depth == 0:
        yield tuple(prefix)
        return
    for v in iter_bits(cand):
        rest = cand >> (v + 1) << (v + 1)
        if rest.bit_count() < depth - 1:
            return
        prefix.append(v)
        yield from _extend(nbrs, rest & nbrs[v], depth - 1, prefix)
        prefix.pop()


def enumerate_cliques(
    graph: Graph,
    m: int,
    *,
    limit: int | None = None,
    cap: int | None = None,
    bitset: BitsetGraph | None = None,
) -> Iterator[Clique]:
    """Yield every order-m clique once, as a tuple of vertex labels.

    Cliques come out in lexicographic order: residues for a Cayley modulus,
    coordinate tuples for a product spec.
    """
    _check_order(m)
    g = bitset if bitset is not None else materialize(graph, cap)
    emitted = 0
    for clique in _extend(g.nbrs, (1 << len(g)) - 1, m, []):
        if limit is not None and emitted >= limit:
            return
        yield tuple(g.labels[i] for i in clique)
        emitted += 1


def visit_cliques(
    graph: Graph, m: int, visitor: Callable[[Clique], None], **kwargs
) -> int:
    """Call ``visitor`` on each clique from :func:`enumerate_cliques`; return how many."""
    n = 0
    for clique in enumerate_cliques(graph, m, **kwargs):
        visitor(clique)
        n += 1
    return n


def max_clique_bruteforce(graph: Graph, *, cap: int | None = None) -> Clique:
    """A maximum clique found by branch and bound, without using the formula."""
    g = materialize(graph, cap)
    best: list[int] = []

    def expand(cand: int, current: list[int]) -> None:
        nonlocal best
        if len(current) > len(best):
            best = list(current)
        while cand:
            if len(current) + cand.bit_count() <= len(best):
                return
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            current.append(v)
            expand(cand & g.nbrs[v], current)
            current.pop()

    expand((1 << len(g)) - 1, [])
    return tuple(g.labels[i] for i in best)


# -- colouring ---------------------------------------------------------------------


def proper_coloring_witness(n: int) -> list[int]:
    """Colour residue x of G(Z/nZ) by x mod p, p the smallest prime factor of n."""
    p = smallest_prime_factor(graph_vertex_count(n))
    return [x % p for x in range(n)]


def find_monochromatic_edge(n: int, coloring: Sequence[int]) -> tuple[int, int] | None:
    """First edge (x, y), x < y, of G(Z/nZ) whose ends share a colour, if any."""
    if len(coloring) != n:
        raise DomainError(f"coloring has {len(coloring)} entries, expected {n}")
    for x in range(n):
        for y in range(x + 1, n):
            if coloring[x] == coloring[y] and cayley_adjacent(n, x, y):
                return x, y
    return None


def certified_chromatic_number(n: int) -> int:
    """Chromatic number of G(Z/nZ), certified by a proper colouring matching a clique bound."""
    coloring = proper_coloring_witness(n)
    bad = find_monochromatic_edge(n, coloring)
    if bad is not None:
        raise AssertionError(f"residue colouring of n={n} is improper at edge {bad}")
    colors = len(set(coloring))
    if colors != clique_number(n):
        raise AssertionError(f"n={n}: {colors} colours but clique number {clique_number(n)}")
    return colors
