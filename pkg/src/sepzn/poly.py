"""The polynomial ring Z/n[x].

Polynomials are canonical coefficient tuples: index i holds the coefficient
of x^i, reduced into [0, n), with no trailing zeros.  The zero polynomial is
the empty tuple and has degree None (a marker, never -1).
"""

from __future__ import annotations

from .arith import DomainError, Modulus


class PolyParseError(ValueError):
    """Syntax error in polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PolyZn:
    """An element of Z/n[x] in canonical form."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: Modulus, coeffs):
        n = modulus.n
        c = [int(a) % n for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.modulus = modulus
        self.coeffs = tuple(c)

    @property
    def degree(self):
        """Degree of a nonzero polynomial; None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def leading(self) -> int:
        if not self.coeffs:
            raise DomainError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check_same_modulus(self, other: "PolyZn"):
        if not isinstance(other, PolyZn):
            raise TypeError(f"expected PolyZn, got {type(other).__name__}")
        if self.modulus != other.modulus:
            raise DomainError(
                f"modulus mismatch: {self.modulus.n} vs {other.modulus.n}")

    def __add__(self, other):
        self._check_same_modulus(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyZn(self.modulus, out)

    def __sub__(self, other):
        self._check_same_modulus(other)
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return PolyZn(self.modulus, out)

    def __mul__(self, other):
        if isinstance(other, int):
            return PolyZn(self.modulus, [other * c for c in self.coeffs])
        self._check_same_modulus(other)
        if not self.coeffs or not other.coeffs:
            return PolyZn(self.modulus, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyZn(self.modulus, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, PolyZn) and self.modulus == other.modulus
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.modulus.n, self.coeffs))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"PolyZn({format_poly(self)!r} mod {self.modulus.n})"


def format_poly(f: PolyZn) -> str:
    """Render in the input grammar, highest degree first, e.g. '3x^2+x+5'."""
    if not f.coeffs:
        return "0"
    parts = []
    for e in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[e]
        if c == 0:
            continue
        if e == 0:
            parts.append(str(c))
        else:
            x = "x" if e == 1 else f"x^{e}"
            parts.append(x if c == 1 else f"{c}{x}")
    return "+".join(parts)


def parse(text: str, modulus: Modulus) -> PolyZn:
    """Parse polynomial text over Z/n; coefficients are reduced mod n.

    Accepts the term grammar ('3x^2+x+5') and, when the text contains a
    comma, an ascending coefficient list ('5,1,3' = 5 + x + 3x^2).
    """
    if "," in text:
        return _parse_coeff_list(text, modulus)
    return _parse_terms(text, modulus)


def _parse_coeff_list(text: str, modulus: Modulus) -> PolyZn:
    coeffs = []
    pos = 0
    for part in text.split(","):
        entry = part.strip()
        if not entry.isdigit():
            raise PolyParseError(f"expected a natural number, got {entry!r}", pos)
        coeffs.append(int(entry))
        pos += len(part) + 1
    return PolyZn(modulus, coeffs)


def _parse_terms(text: str, modulus: Modulus) -> PolyZn:
    s = text
    length = len(s)
    coeffs: dict[int, int] = {}

    def skip_ws(i: int) -> int:
        while i < length and s[i].isspace():
            i += 1
        return i

    def read_nat(i: int) -> tuple[int, int]:
        j = i
        while j < length and s[j].isdigit():
            j += 1
        if j == i:
            raise PolyParseError("expected a number", i)
        return int(s[i:j]), j

    i = skip_ws(0)
    if i == length:
        raise PolyParseError("empty polynomial", i)
    sign = 1
    while True:
        # one term: coeff | coeff? 'x' ('^' nat)?
        i = skip_ws(i)
        if i < length and s[i].isdigit():
            coeff, i = read_nat(i)
        elif i < length and s[i] == "x":
            coeff = 1
        else:
            raise PolyParseError("expected a term", i)
        i = skip_ws(i)
        if i < length and s[i] == "x":
            i = skip_ws(i + 1)
            if i < length and s[i] == "^":
                i = skip_ws(i + 1)
                if i < length and s[i] == "-":
                    raise PolyParseError("negative exponent", i)
                exponent, i = read_nat(i)
            else:
                exponent = 1
        else:
            exponent = 0
        coeffs[exponent] = coeffs.get(exponent, 0) + sign * coeff
        i = skip_ws(i)
        if i == length:
            break
        if s[i] == "+":
            sign = 1
        elif s[i] == "-":
            sign = -1
        else:
            raise PolyParseError(f"unexpected character {s[i]!r}", i)
        i += 1
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return PolyZn(modulus, out)


def derivative(f: PolyZn) -> PolyZn:
    """Formal derivative: coefficient i of f contributes i*a_i to x^(i-1)."""
    return PolyZn(f.modulus, [i * c for i, c in enumerate(f.coeffs)][1:])


def reduce_modulus(f: PolyZn, m: int) -> PolyZn:
    """Coefficientwise reduction of f into Z/m[x], for m dividing n."""
    if m < 2 or f.modulus.n % m != 0:
        raise DomainError(f"{m} does not divide the modulus {f.modulus.n}")
    return PolyZn(Modulus(m), f.coeffs)


def _require_prime(modulus: Modulus):
    if len(modulus.factors) != 1 or modulus.factors[0][1] != 1:
        raise DomainError(f"modulus {modulus.n} is not prime")


def make_monic_over_prime_field(f: PolyZn) -> PolyZn:
    """The monic associate u^(-1)*f over Z/p, u the leading coefficient."""
    _require_prime(f.modulus)
    if f.is_zero():
        raise DomainError("cannot make the zero polynomial monic")
    inv = pow(f.leading(), -1, f.modulus.n)
    return f * inv


def gcd_over_prime_field(f: PolyZn, g: PolyZn) -> PolyZn:
    """Monic gcd over Z/p by the Euclidean algorithm; gcd(0, 0) = 0."""
    _require_prime(f.modulus)
    f._check_same_modulus(g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, rem_by_monic(a, make_monic_over_prime_field(b))
    if a.is_zero():
        return a
    return make_monic_over_prime_field(a)


def rem_by_monic(f: PolyZn, g: PolyZn) -> PolyZn:
    """Remainder of f modulo a monic g; well defined over any Z/n."""
    f._check_same_modulus(g)
    if not g.is_monic():
        raise DomainError("divisor must be monic")
    n = f.modulus.n
    dg = len(g.coeffs) - 1
    r = list(f.coeffs)
    for top in range(len(r) - 1, dg - 1, -1):
        c = r[top]
        if c:
            for j in range(dg + 1):
                r[top - dg + j] = (r[top - dg + j] - c * g.coeffs[j]) % n
    return PolyZn(f.modulus, r[:dg])
