"""Modular integer arithmetic over Z/n: factorization, totient, CRT.

All values are immutable and all functions are pure; counts use Python's
arbitrary-precision integers throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


class DomainError(ValueError):
    """Raised when an input lies outside an operation's domain."""


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 2 by trial division up to sqrt(n).

    Returns ((p1, k1), (p2, k2), ...) with primes strictly increasing.
    """
    if n < 2:
        raise DomainError(f"cannot factor {n}: need an integer >= 2")
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            factors.append((p, k))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return tuple(factors)


class Modulus:
    """The ring Z/n for n >= 2, carrying its prime-power factorization.

    Negative n is canonicalized to |n| at the boundary; Z/n = Z/(-n).
    """

    __slots__ = ("n", "factors")

    def __init__(self, n: int):
        n = abs(int(n))
        if n < 2:
            raise DomainError(f"modulus must satisfy |n| >= 2, got {n}")
        self.n = n
        self.factors = factorize(n)

    def prime_power_components(self) -> list["Modulus"]:
        """The moduli p^k of the CRT decomposition of Z/n."""
        return [Modulus(p**k) for p, k in self.factors]

    def residue(self, value: int) -> "Residue":
        return Residue(value, self)

    def __eq__(self, other):
        return isinstance(other, Modulus) and self.n == other.n

    def __hash__(self):
        return hash(self.n)

    def __repr__(self):
        return f"Modulus({self.n})"


@dataclass(frozen=True)
class Residue:
    """An element of Z/n, stored as its canonical representative in [0, n)."""

    value: int
    modulus: Modulus

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus.n)

    def __repr__(self):
        return f"Residue({self.value} mod {self.modulus.n})"


def is_unit(a: Residue) -> bool:
    """True iff a is invertible in Z/n, i.e. gcd(a, n) = 1."""
    return math.gcd(a.value, a.modulus.n) == 1


def totient(m: Modulus) -> int:
    """Euler's phi(n) = |(Z/n)^x|, from the cached factorization."""
    result = 1
    for p, k in m.factors:
        result *= p**k - p ** (k - 1)
    return result


def totient_prime_power(p: int, k: int) -> int:
    """phi(p^k) = p^k - p^(k-1) for k >= 1; phi(1) = 1 for k = 0."""
    if k == 0:
        return 1
    return p**k - p ** (k - 1)


def totient_of_power(m: Modulus, e: int) -> int:
    """phi(n^e) computed from the factorization of n, without factoring n^e."""
    if e < 1:
        raise DomainError(f"exponent must be >= 1, got {e}")
    result = 1
    for p, k in m.factors:
        result *= totient_prime_power(p, k * e)
    return result


def crt_split(a: Residue) -> list[Residue]:
    """Image of a under Z/n = Z/p1^k1 x ... x Z/pm^km, one residue per factor."""
    return [Residue(a.value, component)
            for component in a.modulus.prime_power_components()]


def crt_combine(parts: list[Residue]) -> Residue:
    """Inverse of crt_split: the unique residue mod prod(n_i) matching every part.

    The part moduli must be pairwise coprime.
    """
    if not parts:
        raise DomainError("crt_combine needs at least one residue")
    x = parts[0].value
    m = parts[0].modulus.n
    for part in parts[1:]:
        m2 = part.modulus.n
        if math.gcd(m, m2) != 1:
            raise DomainError(f"moduli {m} and {m2} are not coprime")
        # x + m*t = part.value (mod m2)
        t = (part.value - x) * pow(m, -1, m2) % m2
        x += m * t
        m *= m2
    return Residue(x, Modulus(m))
