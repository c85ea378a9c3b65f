"""Exact integer arithmetic: factorization, Moebius, Euler and Schemmel totients,
Ramanujan sums.

Every function is pure and works on Python ints, so counts never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import DomainError

__all__ = [
    "Factorization",
    "factorize",
    "smallest_prime_factor",
    "is_prime",
    "mobius",
    "euler_phi",
    "schemmel",
    "schemmel_naive",
    "schemmel_pair",
    "ramanujan_sum",
]


def _require_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")


def _require_nonnegative(r: int, name: str) -> None:
    if not isinstance(r, int) or isinstance(r, bool):
        raise TypeError(f"{name} must be an int, got {type(r).__name__}")
    if r < 0:
        raise DomainError(f"{name} must be >= 0, got {r}")


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``((p1, a1), (p2, a2), ...)`` with p1 < p2 < ...

    The empty tuple stands for 1.
    """

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = 1
        for p, a in self.factors:
            if p <= prev:
                raise ValueError("primes must be strictly increasing and >= 2")
            if a < 1:
                raise ValueError(f"exponent of {p} must be >= 1")
            prev = p

    @property
    def value(self) -> int:
        out = 1
        for p, a in self.factors:
            out *= p**a
        return out

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{a}" if a > 1 else str(p) for p, a in self.factors)


def factorize(n: int) -> Factorization:
    """Factor ``n`` by trial division (2, then odd divisors up to sqrt(n)).

    Meant for n up to about 1e12; larger inputs work but get slow when n has
    a big prime cofactor.
    """
    _require_positive(n)
    factors = []
    rest = n
    if rest % 2 == 0:
        a = 0
        while rest % 2 == 0:
            rest //= 2
            a += 1
        factors.append((2, a))
    d = 3
    while d * d <= rest:
        if rest % d == 0:
            a = 0
            while rest % d == 0:
                rest //= d
                a += 1
            factors.append((d, a))
        d += 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def smallest_prime_factor(n: int) -> int:
    _require_positive(n)
    if n == 1:
        raise DomainError("1 has no prime factors")
    if n % 2 == 0:
        return 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return d
    return n


def mobius(n: int) -> int:
    """Moebius function: 0 unless n is squarefree, else (-1)**(number of primes)."""
    fac = factorize(n)
    if any(a > 1 for _, a in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    _require_positive(n)
    return schemmel(1, n)


def schemmel(r: int, n: int) -> int:
    """Schemmel totient S_r(n).

    Multiplicative, with S_r(p^a) = p^(a-1) * (p - r) when p >= r and 0 when
    p < r. S_0(n) = n and S_1 is Euler's phi.
    """
    _require_nonnegative(r, "r")
    _require_positive(n)
    out = 1
    for p, a in factorize(n):
        if p < r:
            return 0
        out *= p ** (a - 1) * (p - r)
        if out == 0:
            return 0
    return out


def schemmel_naive(r: int, n: int) -> int:
    """Count k in [1, n] with gcd(k + i, n) == 1 for every i in [0, r).

    Independent O(n*r) oracle for :func:`schemmel`; keep n small.
    """
    _require_nonnegative(r, "r")
    _require_positive(n)
    return sum(
        1
        for k in range(1, n + 1)
        if all(gcd(k + i, n) == 1 for i in range(r))
    )


def schemmel_pair(m: int, x: int, y: int) -> int:
    """max(x * (y - m), 0): vertices of K[x, y] outside m fixed partite sets."""
    _require_nonnegative(m, "m")
    _require_positive(x, "x")
    _require_positive(y, "y")
    return x * (y - m) if y > m else 0


def ramanujan_sum(n: int, j: int) -> int:
    """Ramanujan sum c_n(j), via mu(n/g) * phi(n) / phi(n/g) with g = gcd(j, n)."""
    _require_positive(n)
    if not isinstance(j, int) or isinstance(j, bool):
        raise TypeError(f"j must be an int, got {type(j).__name__}")
    g = gcd(j % n, n)
    q = n // g
    mu = mobius(q)
    if mu == 0:
        return 0
    return mu * (euler_phi(n) // euler_phi(q))
