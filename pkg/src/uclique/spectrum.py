"""Eigenvalues of G(Z/nZ) as Ramanujan sums, and power-sum moments.

The graph is circulant, so the character x -> exp(2 pi i j x / n) is an
eigenvector with eigenvalue c_n(j). No numerical eigensolver is involved.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .graph_core import BitsetGraph, require_modulus
from .number_theory import euler_phi, ramanujan_sum


@dataclass(frozen=True)
class SpectrumTable:
    n: int
    eigenvalues: tuple[int, ...]

    @property
    def degree(self) -> int:
        return self.eigenvalues[0]

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for ev in self.eigenvalues:
            out[ev] = out.get(ev, 0) + 1
        return dict(sorted(out.items(), reverse=True))


def spectrum(n: int) -> SpectrumTable:
    require_modulus(n)
    return SpectrumTable(n, tuple(ramanujan_sum(n, j) for j in range(n)))


def moment(n: int, k: int) -> int:
    """Sum of k-th powers of the eigenvalues, i.e. trace(A^k)."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"moment order must be a positive integer, got {k!r}")
    return sum(ev**k for ev in spectrum(n).eigenvalues)


def nonzero_eigenvalues_divide_phi(n: int) -> bool:
    phi = euler_phi(n)
    return all(phi % ev == 0 for ev in spectrum(n).eigenvalues if ev)


def adjacency_matrix(n: int) -> np.ndarray:
    g = BitsetGraph.from_cayley(n)
    a = np.zeros((n, n), dtype=np.int64)
    for i, mask in enumerate(g.nbrs):
        for j in range(n):
            if (mask >> j) & 1:
                a[i, j] = 1
    return a


def eigenvector_residual(n: int) -> float:
    """Largest |A v_j - c_n(j) v_j| over all characters v_j and components."""
    a = adjacency_matrix(n).astype(float)
    x = np.arange(n)
    chars = np.exp(2j * np.pi * np.outer(x, x) / n)  # column j is v_j
    evs = np.array(spectrum(n).eigenvalues, dtype=float)
    return float(np.max(np.abs(a @ chars - chars * evs)))
