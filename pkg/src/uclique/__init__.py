"""Exact clique counts for unitary Cayley graphs and products of K[a, b]."""

from .clique_count import (
    CommonNeighbors,
    cayley_clique_count,
    certified_chromatic_number,
    clique_count_bruteforce,
    clique_count_formula,
    clique_number,
    common_neighbor_count,
    enumerate_cliques,
    max_clique_bruteforce,
    proper_coloring_witness,
    visit_cliques,
)
from .errors import DivisibilityError, DomainError, NotACliqueError, SizeLimitError
from .graph_core import (
    BitsetGraph,
    MultipartiteFactor,
    ProductGraphSpec,
    adjacent,
    cayley_adjacent,
    crt_decode,
    crt_encode,
    export_dot,
    unitary_cayley_spec,
)
from .number_theory import (
    Factorization,
    euler_phi,
    factorize,
    mobius,
    ramanujan_sum,
    schemmel,
    schemmel_naive,
    schemmel_pair,
)
from .spectrum import SpectrumTable, moment, spectrum

__version__ = "0.1.0"
