from itertools import combinations
from math import comb, gcd, prod

import pytest
from hypothesis import given, settings, strategies as st

from uclique import (
    DomainError,
    NotACliqueError,
    ProductGraphSpec,
    SizeLimitError,
    adjacent,
    cayley_clique_count,
    certified_chromatic_number,
    clique_count_bruteforce,
    clique_count_formula,
    clique_number,
    common_neighbor_count,
    enumerate_cliques,
    euler_phi,
    max_clique_bruteforce,
    proper_coloring_witness,
    schemmel,
    schemmel_pair,
    unitary_cayley_spec,
    visit_cliques,
)
from uclique.clique_count import clique_formula_terms, find_monochromatic_edge
from uclique.number_theory import smallest_prime_factor


def combinations_oracle(spec, m):
    """Third, slowest route: itertools over vertex subsets with the predicate."""
    return sum(
        1
        for c in combinations(spec.vertices(), m)
        if all(adjacent(spec, u, v) for u, v in combinations(c, 2))
    )


specs = st.lists(
    st.tuples(st.integers(1, 3), st.integers(1, 5)), min_size=1, max_size=3
).map(lambda pairs: ProductGraphSpec.of(*pairs)).filter(lambda s: s.vertex_count <= 60)


# Values below were frozen from combinations_oracle / a gcd-based subset scan.
@pytest.mark.parametrize("graph, m, expected", [
    (ProductGraphSpec.of((1, 5)), 3, 10),
    (15, 3, 60),
    (15, 4, 0),
    (ProductGraphSpec.of((2, 3), (1, 2)), 2, 24),
    (9, 2, 27),
    (5, 3, 10),
    (10, 3, 0),
    (6, 2, 6),
    (12, 2, 24),
    (21, 3, 210),
    (ProductGraphSpec.of((2, 3), (3, 4)), 3, 5184),
])
def test_formula_and_bruteforce_examples(graph, m, expected):
    spec = graph if isinstance(graph, ProductGraphSpec) else unitary_cayley_spec(graph)
    assert clique_count_formula(spec, m) == expected
    assert clique_count_bruteforce(graph, m) == expected
    if not isinstance(graph, ProductGraphSpec):
        assert cayley_clique_count(graph, m) == expected


def test_fifteen_triangles_written_out():
    assert 15 * 8 * 3 // 6 == cayley_clique_count(15, 3)


@settings(max_examples=60, deadline=None)
@given(specs, st.integers(1, 4))
def test_formula_matches_combinations_oracle(spec, m):
    assert clique_count_formula(spec, m) == combinations_oracle(spec, m)


@given(specs, st.integers(1, 12))
def test_divisible_by_m_factorial(spec, m):
    num, den = clique_formula_terms(spec, m)
    assert num % den == 0


@given(specs, st.integers(1, 8))
def test_monotone_vanishing(spec, m):
    assert (clique_count_formula(spec, m) == 0) == (m > min(b for _, b in spec.pairs()))


def test_specialization_chain():
    for n in range(2, 1001):
        assert cayley_clique_count(n, 1) == n
        assert cayley_clique_count(n, 2) * 2 == n * euler_phi(n)
        assert cayley_clique_count(n, 3) * 6 == n * euler_phi(n) * schemmel(2, n)


def test_product_formula_over_schemmel():
    for n in range(2, 200):
        for m in range(1, 6):
            expected = prod(schemmel(k - 1, n) for k in range(1, m + 1))
            assert expected % prod(range(1, m + 1)) == 0
            assert cayley_clique_count(n, m) == expected // prod(range(1, m + 1))


def test_m_zero():
    spec = ProductGraphSpec.of((2, 3))
    with pytest.raises(DomainError):
        clique_count_formula(spec, 0)
    with pytest.raises(DomainError):
        clique_count_bruteforce(spec, 0)
    assert clique_count_formula(spec, 0, allow_empty=True) == 1
    assert cayley_clique_count(10, 0, allow_empty=True) == 1


def test_huge_modulus_is_exact():
    n = 963761198400
    assert cayley_clique_count(n, 8) == 0
    assert cayley_clique_count(n, 2) == n * euler_phi(n) // 2
    assert cayley_clique_count(n, 3) == 0


def test_bruteforce_trivial_cases():
    assert clique_count_bruteforce(ProductGraphSpec.of((1, 5)), 5) == 1
    assert clique_count_bruteforce(6, 2) == 6
    assert clique_count_bruteforce(ProductGraphSpec.of((1, 3)), 4) == 0
    assert clique_count_bruteforce(7, 7) == 1
    with pytest.raises(SizeLimitError):
        clique_count_bruteforce(5000, 2)


def test_bruteforce_independent_of_workers():
    spec = ProductGraphSpec.of((2, 3), (1, 5))
    for m in range(1, 4):
        assert clique_count_bruteforce(spec, m, workers=3) == clique_count_bruteforce(spec, m)
    assert clique_count_bruteforce(30, 2, workers=2) == 120


def test_enumerate_examples():
    assert list(enumerate_cliques(3, 2)) == [(0, 1), (0, 2), (1, 2)]
    assert list(enumerate_cliques(6, 3)) == []
    c4 = list(enumerate_cliques(ProductGraphSpec.of((2, 2)), 2))
    assert c4 == [((0,), (1,)), ((0,), (3,)), ((1,), (2,)), ((2,), (3,))]
    assert list(enumerate_cliques(5, 3, limit=3)) == [(0, 1, 2), (0, 1, 3), (0, 1, 4)]


def test_enumeration_lexicographic_unique_and_valid():
    for graph in [30, 21, ProductGraphSpec.of((2, 3), (1, 4))]:
        for m in range(1, 5):
            cliques = list(enumerate_cliques(graph, m))
            assert cliques == sorted(cliques)
            assert len(set(cliques)) == len(cliques) == clique_count_bruteforce(graph, m)
            for c in cliques:
                for u, v in combinations(c, 2):
                    if isinstance(graph, int):
                        assert gcd(u - v, graph) == 1
                    else:
                        assert adjacent(graph, u, v)


def test_visit_cliques_counts():
    seen = []
    assert visit_cliques(7, 3, seen.append) == comb(7, 3) == len(seen)


def test_common_neighbor_examples():
    k23 = ProductGraphSpec.of((2, 3))
    assert common_neighbor_count(k23, [(0,), (1,)]) == (2, 2)
    assert common_neighbor_count(5, [0, 1, 2]) == (2, 2)
    assert common_neighbor_count(ProductGraphSpec.of((1, 5)), [(0,), (1,), (2,)]).agree
    # order m = min b_i leaves nothing
    spec = ProductGraphSpec.of((2, 3), (1, 4))
    clique = next(enumerate_cliques(spec, 3))
    assert common_neighbor_count(spec, clique) == (0, 0)


def test_common_neighbor_rejects_non_clique():
    with pytest.raises(NotACliqueError) as info:
        common_neighbor_count(10, [0, 1, 5])
    assert info.value.pair == (0, 5)


def test_common_neighbor_lemma_on_products():
    for spec in [ProductGraphSpec.of((2, 3), (1, 4)), ProductGraphSpec.of((3, 3), (2, 2)),
                 ProductGraphSpec.of((1, 5), (2, 4))]:
        for m in range(1, 4):
            total = 0
            predicted = prod(schemmel_pair(m, a, b) for a, b in spec.pairs())
            for clique in enumerate_cliques(spec, m):
                cn = common_neighbor_count(spec, clique)
                assert cn.scanned == cn.predicted == predicted
                total += cn.scanned
            assert total == (m + 1) * clique_count_bruteforce(spec, m + 1)


def test_clique_number_examples():
    assert clique_number(unitary_cayley_spec(15)) == 3
    assert clique_number(64) == 2
    spec = ProductGraphSpec.of((3, 4), (2, 7))
    assert clique_number(spec) == 4
    assert clique_count_formula(spec, 4) > 0 and clique_count_formula(spec, 5) == 0
    assert clique_count_bruteforce(spec, 4) > 0
    assert clique_count_bruteforce(spec, 5) == 0
    assert len(max_clique_bruteforce(spec)) == 4


def test_clique_number_is_smallest_prime():
    for n in range(2, 501):
        assert clique_number(n) == smallest_prime_factor(n)


def test_coloring_witness():
    assert proper_coloring_witness(9) == [x % 3 for x in range(9)]
    assert proper_coloring_witness(2) == [0, 1]
    assert proper_coloring_witness(30) == [x % 2 for x in range(30)]
    for n in (2, 9, 30, 35, 49, 97):
        assert find_monochromatic_edge(n, proper_coloring_witness(n)) is None
        assert certified_chromatic_number(n) == smallest_prime_factor(n)
    assert find_monochromatic_edge(5, [0, 0, 1, 1, 2]) == (0, 1)
