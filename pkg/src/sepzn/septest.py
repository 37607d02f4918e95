"""Separability tests for polynomials over Z/n.

Two routes are provided and cross-checked against each other:

* the trace-form discriminant for monic polynomials (det of the matrix of
  traces of the multiplication operators x^(i+j) on Z/n[x]/f, separable iff
  the determinant is a unit), and
* the general pipeline for arbitrary polynomials: split Z/n into its
  prime-power components, reduce each component mod p, and check that the
  reduction is coprime to its derivative over the field Z/p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import DomainError, Modulus, Residue
from .poly import PolyZn, rem_by_monic

import math


@dataclass(frozen=True)
class TraceForm:
    """The N x N symmetric matrix with entry (i, j) = tr(x^(i+j)) mod n."""

    modulus: Modulus
    dim: int
    entries: tuple[tuple[int, ...], ...]


def _require_monic(f: PolyZn):
    if f.degree is None or f.degree < 1 or not f.is_monic():
        raise DomainError("a monic polynomial of degree >= 1 is required")


def trace(g: PolyZn, f: PolyZn) -> Residue:
    """Trace of the multiplication-by-g operator on Z/n[x]/f, f monic.

    Computed on the free basis 1, x, ..., x^(N-1); this equals the
    dual-basis trace because the basis is free.
    """
    _require_monic(f)
    big_n = f.degree
    cur = rem_by_monic(g, f)
    x = PolyZn(f.modulus, (0, 1))
    total = 0
    for j in range(big_n):
        total += cur.coeff(j)
        if j < big_n - 1:
            cur = rem_by_monic(cur * x, f)
    return Residue(total, f.modulus)


def trace_form(f: PolyZn) -> TraceForm:
    """The trace form of a monic f: entry (i, j) is tr(x^(i+j) rem f)."""
    _require_monic(f)
    big_n = f.degree
    x = PolyZn(f.modulus, (0, 1))
    powers = [PolyZn(f.modulus, (1,))]
    for _ in range(2 * big_n - 2):
        powers.append(rem_by_monic(powers[-1] * x, f))
    tr = [trace(p, f).value for p in powers]
    entries = tuple(tuple(tr[i + j] for j in range(big_n)) for i in range(big_n))
    return TraceForm(f.modulus, big_n, entries)


def _int_det(matrix: tuple[tuple[int, ...], ...]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in matrix]
    size = len(a)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def discriminant(f: PolyZn) -> Residue:
    """disc(f) = det(trace form of f) as an element of Z/n.

    The entries are lifted to their integer representatives in [0, n) and
    the exact integer determinant is reduced mod n; the determinant is a
    polynomial in the entries, so the result is independent of the lifts.
    """
    form = trace_form(f)
    return Residue(_int_det(form.entries), f.modulus)


def is_separable_monic(f: PolyZn) -> bool:
    """Separability of a monic f via the discriminant: true iff disc(f) is a unit."""
    d = discriminant(f)
    return math.gcd(d.value, f.modulus.n) == 1


def _separable_coeffs_mod_p(coeffs, p: int) -> bool:
    """Core field test: f over Z/p is separable iff f is a nonzero constant
    or gcd(f, f') is a nonzero constant."""
    f = [c % p for c in coeffs]
    while f and f[-1] == 0:
        f.pop()
    if not f:
        return False
    if len(f) == 1:
        return True
    fp = [(i * c) % p for i, c in enumerate(f)][1:]
    while fp and fp[-1] == 0:
        fp.pop()
    g = _gcd_lists(f, fp, p)
    return len(g) == 1


def _rem_lists(a, b, p):
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    r = list(a)
    for top in range(len(r) - 1, db - 1, -1):
        c = r[top]
        if c:
            factor = c * inv % p
            for j in range(db + 1):
                r[top - db + j] = (r[top - db + j] - factor * b[j]) % p
    del r[db:]
    while r and r[-1] == 0:
        r.pop()
    return r


def _gcd_lists(a, b, p):
    while b:
        a, b = b, _rem_lists(a, b, p)
    return a


def is_separable_over_prime_field(f: PolyZn) -> bool:
    """Separability over the field Z/p: false for 0, true for nonzero
    constants, else gcd(f, f') must be the constant 1."""
    if len(f.modulus.factors) != 1 or f.modulus.factors[0][1] != 1:
        raise DomainError(f"modulus {f.modulus.n} is not prime")
    return _separable_coeffs_mod_p(f.coeffs, f.modulus.n)


def is_separable(f: PolyZn) -> bool:
    """Separability of any f over Z/n: reduce mod every prime p | n and
    require separability of every reduction over Z/p."""
    return all(_separable_coeffs_mod_p(f.coeffs, p) for p, _ in f.modulus.factors)
