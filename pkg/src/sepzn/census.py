"""Closed-form counts of separable polynomials over Z/n.

All results are exact: arbitrary-precision integers and Fractions in lowest
terms.  Decimal rendering is display-only and lives in the CLI.

Degree conventions at the edges, shared with the enumeration oracle:
monic degree-1 count is n (every x - a is separable) and monic degree-0
count is 1 (the constant 1); the degree <= d census counts all n^(d+1)
coefficient tuples of length d + 1, zero polynomial included.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import DomainError, Modulus, totient, totient_prime_power


@dataclass(frozen=True)
class CountResult:
    """A count of separable polynomials together with the size of the
    sampled set and the exact proportion count/total."""

    count: int
    total: int
    proportion: Fraction

    @classmethod
    def of(cls, count: int, total: int) -> "CountResult":
        return cls(count, total, Fraction(count, total))


def count_monic_separable_prime(p: int, d: int) -> int:
    """Carlitz: monic separable polynomials of degree d over Z/p.

    p^d - p^(d-1) for d >= 2; p for d = 1; 1 for d = 0.
    """
    if d == 0:
        return 1
    if d == 1:
        return p
    return p**d - p ** (d - 1)


def count_monic_separable_primepower(p: int, k: int, d: int) -> int:
    """Monic separable polynomials of degree d over Z/p^k: phi(p^(kd)) for
    d >= 2; p^k for d = 1; 1 for d = 0."""
    if d == 0:
        return 1
    if d == 1:
        return p**k
    return totient_prime_power(p, k * d)


def count_monic_separable(m: Modulus, d: int) -> int:
    """Monic separable polynomials of degree d over Z/n, by multiplicativity
    across the CRT components; equals phi(n^d) for d >= 2."""
    result = 1
    for p, k in m.factors:
        result *= count_monic_separable_primepower(p, k, d)
    return result


def proportion_monic_separable(m: Modulus, d: int = 2) -> Fraction:
    """Proportion of monic degree-d polynomials over Z/n that are separable,
    for d >= 2: the product of (1 - 1/p) over the distinct primes p | n."""
    if d < 2:
        raise DomainError(f"the proportion formula requires d >= 2, got {d}")
    result = Fraction(1)
    for p, _ in m.factors:
        result *= Fraction(p - 1, p)
    return result


def count_separable_leq_primepower(p: int, k: int, d: int) -> int:
    """Separable polynomials of degree <= d over Z/p^k (arbitrary leading
    coefficient): phi(p^k) * p^((k-1)d) * (p^d + 1); phi(p^k) at d = 0."""
    phi = totient_prime_power(p, k)
    if d == 0:
        return phi
    return phi * p ** ((k - 1) * d) * (p**d + 1)


def count_separable_leq(m: Modulus, d: int) -> CountResult:
    """Separable polynomials of degree <= d over Z/n, over all n^(d+1)
    coefficient tuples, by multiplicativity across the CRT components."""
    count = 1
    for p, k in m.factors:
        count *= count_separable_leq_primepower(p, k, d)
    return CountResult.of(count, m.n ** (d + 1))


def count_separable_exact(m: Modulus, d: int) -> int:
    """Separable polynomials of degree exactly d over Z/n."""
    if d == 0:
        return totient(m)
    return count_separable_leq(m, d).count - count_separable_leq(m, d - 1).count


def count_leq_recurrence(p: int, k: int, d: int) -> int:
    """Degree <= d count over Z/p^k by the recurrence
    a_d = phi(p^(kd)) * phi(p^k) + p^(k-1) * a_(d-1),
    seeded with a_1 = phi(p^k) * (p^k + p^(k-1))."""
    if d < 1:
        raise DomainError(f"the recurrence starts at d = 1, got {d}")
    phi = totient_prime_power(p, k)
    a = phi * (p**k + p ** (k - 1))
    for e in range(2, d + 1):
        a = totient_prime_power(p, k * e) * phi + p ** (k - 1) * a
    return a


def geometric_sum(p: int, k: int, d: int) -> int:
    """Closed form p^((k-1)d+1) * (p^(d-1) - 1) of the sum
    phi(b^d) + l*phi(b^(d-1)) + ... + l^(d-2)*phi(b^2), b = p^k, l = p^(k-1)."""
    if d < 2:
        raise DomainError(f"the sum is defined for d >= 2, got {d}")
    return p ** ((k - 1) * d + 1) * (p ** (d - 1) - 1)
