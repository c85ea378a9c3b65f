"""Balanced complete multipartite factors, their direct product, and the
unitary Cayley graph of Z/nZ.

Graphs are described implicitly by a :class:`ProductGraphSpec` (or by the
modulus ``n`` for a unitary Cayley graph) plus an adjacency predicate.
:class:`BitsetGraph` materializes small graphs, one Python int per vertex,
for enumeration and export.
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from math import gcd, prod
from typing import Iterator, TextIO, Union

from .errors import DomainError, SizeLimitError
from .number_theory import factorize

Vertex = tuple[int, ...]

DEFAULT_DOT_CAP = 512
DEFAULT_VERTEX_CAP = 4096
VERTEX_CAP_ENV = "UCLIQUE_VERTEX_CAP"


def default_vertex_cap() -> int:
    raw = os.environ.get(VERTEX_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_VERTEX_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError(f"{VERTEX_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise DomainError(f"{VERTEX_CAP_ENV} must be positive, got {cap}")
    return cap


@dataclass(frozen=True, order=True)
class MultipartiteFactor:
    """K[a, b]: ``parts`` partite sets holding ``part_size`` vertices each.

    Local vertices are 0 .. a*b - 1 and vertex v lies in partite set v % b.
    """

    part_size: int
    parts: int

    def __post_init__(self) -> None:
        for name in ("part_size", "parts"):
            val = getattr(self, name)
            if not isinstance(val, int) or isinstance(val, bool) or val < 1:
                raise DomainError(f"{name} must be a positive integer, got {val!r}")

    @property
    def vertex_count(self) -> int:
        return self.part_size * self.parts

    def part_of(self, v: int) -> int:
        return v % self.parts

    def __str__(self) -> str:
        return f"{self.part_size}x{self.parts}"


_FACTOR_RE = re.compile(r"^(\d+)x(\d+)$", re.IGNORECASE)


@dataclass(frozen=True)
class ProductGraphSpec:
    """Direct product K[a_1, b_1] x ... x K[a_r, b_r]."""

    factors: tuple[MultipartiteFactor, ...]

    def __post_init__(self) -> None:
        factors = tuple(
            f if isinstance(f, MultipartiteFactor) else MultipartiteFactor(*f)
            for f in self.factors
        )
        if not factors:
            raise DomainError("a product spec needs at least one factor")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> "ProductGraphSpec":
        return cls(tuple(MultipartiteFactor(a, b) for a, b in pairs))

    @classmethod
    def parse(cls, text: str) -> "ProductGraphSpec":
        """Parse ``"2x3,1x2"`` into K[2,3] x K[1,2]. Whitespace is ignored."""
        body = re.sub(r"\s+", "", text)
        if not body:
            raise DomainError("empty spec string")
        pairs = []
        for chunk in body.split(","):
            match = _FACTOR_RE.match(chunk)
            if match is None:
                raise DomainError(f"bad factor {chunk!r}; expected AxB, e.g. 2x3")
            pairs.append((int(match.group(1)), int(match.group(2))))
        return cls.of(*pairs)

    @property
    def r(self) -> int:
        return len(self.factors)

    @property
    def vertex_count(self) -> int:
        return prod(f.vertex_count for f in self.factors)

    def vertices(self) -> Iterator[Vertex]:
        """All vertices in lexicographic order of their coordinate tuples."""
        return itertools.product(*(range(f.vertex_count) for f in self.factors))

    def pairs(self) -> list[tuple[int, int]]:
        return [(f.part_size, f.parts) for f in self.factors]

    def check_vertex(self, v: Vertex) -> None:
        if len(v) != self.r:
            raise DomainError(f"vertex {v} has {len(v)} coordinates, spec has {self.r} factors")
        for x, f in zip(v, self.factors):
            if not 0 <= x < f.vertex_count:
                raise DomainError(f"coordinate {x} out of range for K[{f.part_size},{f.parts}]")

    def __str__(self) -> str:
        return ",".join(str(f) for f in self.factors)


Graph = Union[ProductGraphSpec, int]


def require_modulus(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < 2:
        raise DomainError(f"unitary Cayley graphs need n >= 2, got {n}")


def unitary_cayley_spec(n: int) -> ProductGraphSpec:
    """K[p^(a-1), p] factors of G(Z/nZ), one per prime power, ascending primes."""
    require_modulus(n)
    return ProductGraphSpec(
        tuple(MultipartiteFactor(p ** (a - 1), p) for p, a in factorize(n))
    )


def adjacent(spec: ProductGraphSpec, u: Vertex, v: Vertex) -> bool:
    spec.check_vertex(u)
    spec.check_vertex(v)
    return all(
        x % f.parts != y % f.parts for x, y, f in zip(u, v, spec.factors)
    )


def _check_residue(n: int, x: int) -> None:
    if not isinstance(x, int) or not 0 <= x < n:
        raise DomainError(f"residue {x!r} out of range [0, {n})")


def cayley_adjacent(n: int, x: int, y: int) -> bool:
    require_modulus(n)
    _check_residue(n, x)
    _check_residue(n, y)
    return gcd((x - y) % n, n) == 1


def _moduli(n: int) -> list[int]:
    return [p**a for p, a in factorize(n)]


def crt_encode(n: int, x: int) -> Vertex:
    """Map residue x to (x mod p1^a1, x mod p2^a2, ...)."""
    require_modulus(n)
    _check_residue(n, x)
    return tuple(x % q for q in _moduli(n))


def crt_decode(n: int, v: Vertex) -> int:
    require_modulus(n)
    moduli = _moduli(n)
    if len(v) != len(moduli):
        raise DomainError(f"vertex {v} has {len(v)} coordinates, expected {len(moduli)}")
    x = 0
    for c, q in zip(v, moduli):
        if not isinstance(c, int) or not 0 <= c < q:
            raise DomainError(f"coordinate {c!r} out of range [0, {q})")
        rest = n // q
        x += c * rest * pow(rest, -1, q)
    return x % n


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class BitsetGraph:
    """Materialized graph: ``nbrs[i]`` is an int whose bit j marks an edge i-j.

    Vertex i carries ``labels[i]``, a residue (Cayley mode) or a coordinate
    tuple (product mode). Indices follow label order, so iterating indices in
    increasing order is lexicographic in labels.
    """

    __slots__ = ("labels", "nbrs")

    def __init__(self, labels: list, nbrs: list[int]):
        self.labels = labels
        self.nbrs = nbrs

    def __len__(self) -> int:
        return len(self.nbrs)

    @classmethod
    def from_cayley(cls, n: int) -> "BitsetGraph":
        require_modulus(n)
        full = (1 << n) - 1
        units = sum(1 << k for k in range(n) if gcd(k, n) == 1)
        # y is adjacent to x iff (y - x) mod n is a unit: rotate the unit mask by x
        nbrs = [((units << x) | (units >> (n - x))) & full for x in range(n)]
        return cls(list(range(n)), nbrs)

    @classmethod
    def from_spec(cls, spec: ProductGraphSpec) -> "BitsetGraph":
        labels = list(spec.vertices())
        # outside[i][c]: vertices whose i-th coordinate is not in partite set c
        outside = []
        for i, f in enumerate(spec.factors):
            masks = [0] * f.parts
            for idx, v in enumerate(labels):
                cls_i = v[i] % f.parts
                bit = 1 << idx
                for c in range(f.parts):
                    if c != cls_i:
                        masks[c] |= bit
            outside.append(masks)
        full = (1 << len(labels)) - 1
        nbrs = []
        for v in labels:
            mask = full
            for i, f in enumerate(spec.factors):
                mask &= outside[i][v[i] % f.parts]
            nbrs.append(mask)
        return cls(labels, nbrs)

    def degree(self, i: int) -> int:
        return self.nbrs[i].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once as (i, j) with i < j, in lexicographic order."""
        for i, mask in enumerate(self.nbrs):
            yield from ((i, j) for j in iter_bits(mask >> (i + 1) << (i + 1)))

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.nbrs) // 2


def graph_vertex_count(graph: Graph) -> int:
    if isinstance(graph, ProductGraphSpec):
        return graph.vertex_count
    require_modulus(graph)
    return graph


def materialize(graph: Graph, cap: int | None = None) -> BitsetGraph:
    """Build a :class:`BitsetGraph` for a spec or a Cayley modulus, within ``cap``."""
    if cap is None:
        cap = default_vertex_cap()
    size = graph_vertex_count(graph)
    if size > cap:
        raise SizeLimitError(size, cap)
    if isinstance(graph, ProductGraphSpec):
        return BitsetGraph.from_spec(graph)
    return BitsetGraph.from_cayley(graph)


def _dot_label(label) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(map(str, label)) + ")"
    return str(label)


def export_dot(graph: Graph, sink: TextIO | None = None, cap: int = DEFAULT_DOT_CAP) -> str:
    """Render ``graph`` as undirected Graphviz DOT text, optionally writing to ``sink``.

    Output is deterministic: nodes in index order, then edges (i < j) in
    lexicographic order.
    """
    size = graph_vertex_count(graph)
    if size > cap:
        raise SizeLimitError(size, cap, what="DOT export")
    g = materialize(graph, cap=cap)
    lines = ["graph G {"]
    for i, label in enumerate(g.labels):
        lines.append(f'  {i} [label="{_dot_label(label)}"];')
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if sink is not None:
        sink.write(text)
    return text
