import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sepzn.arith import DomainError, Modulus
from sepzn.poly import (
    PolyParseError,
    PolyZn,
    derivative,
    format_poly,
    gcd_over_prime_field,
    make_monic_over_prime_field,
    parse,
    reduce_modulus,
    rem_by_monic,
)


def all_polys(n, max_deg):
    """Every polynomial over Z/n with degree <= max_deg (zero included)."""
    m = Modulus(n)
    for coeffs in itertools.product(range(n), repeat=max_deg + 1):
        yield PolyZn(m, coeffs)


class TestCanonicalForm:
    def test_trailing_zeros_stripped(self):
        f = PolyZn(Modulus(6), (1, 2, 0, 0))
        assert f.coeffs == (1, 2)
        assert f.degree == 1

    def test_zero_polynomial(self):
        z = PolyZn(Modulus(6), (0, 0))
        assert z.coeffs == ()
        assert z.degree is None
        assert z.is_zero()

    def test_coefficients_reduced(self):
        assert PolyZn(Modulus(6), (7, -1)).coeffs == (1, 5)

    def test_closed_under_operations(self):
        m = Modulus(4)
        f = PolyZn(m, (1, 2))      # 2x + 1
        g = PolyZn(m, (3, 2, 2))   # 2x^2 + 2x + 3
        assert (f * g).coeffs[-1] != 0 if (f * g).coeffs else True
        assert (f + g).coeffs == () or (f + g).coeffs[-1] != 0
        assert (g - g).coeffs == ()

    def test_degree_of_product(self):
        for n in range(2, 13):
            m = Modulus(n)
            for f in all_polys(n, 2):
                for cg in itertools.product(range(n), repeat=2):
                    g = PolyZn(m, cg)
                    h = f * g
                    if f.is_zero() or g.is_zero():
                        assert h.is_zero()
                        continue
                    assert h.degree is None or h.degree <= f.degree + g.degree
                    if f.leading() * g.leading() % n != 0:
                        assert h.degree == f.degree + g.degree


class TestParse:
    def test_paper_example_mod6(self):
        assert parse("3x^2+x+5", Modulus(6)).coeffs == (5, 1, 3)

    def test_paper_example_mod4(self):
        assert parse("x^2+1", Modulus(4)).coeffs == (1, 0, 1)

    def test_coefficients_reduce(self):
        assert parse("7x+6", Modulus(6)).coeffs == (0, 1)

    def test_coefficient_list_form(self):
        assert parse("5,1,3", Modulus(6)).coeffs == (5, 1, 3)
        assert parse("5, 1, 3", Modulus(6)).coeffs == (5, 1, 3)

    def test_whitespace_ignored(self):
        assert parse(" 3 x^2 + x + 5 ", Modulus(6)).coeffs == (5, 1, 3)

    def test_minus_between_terms(self):
        assert parse("x^2-1", Modulus(5)).coeffs == (4, 0, 1)

    def test_zero(self):
        assert parse("0", Modulus(7)).is_zero()

    def test_repeated_terms_accumulate(self):
        assert parse("x+x", Modulus(5)).coeffs == (0, 2)

    def test_syntax_error_has_position(self):
        with pytest.raises(PolyParseError) as e:
            parse("3x^2+*", Modulus(6))
        assert e.value.position == 5

    def test_negative_exponent_rejected(self):
        with pytest.raises(PolyParseError):
            parse("x^-1", Modulus(6))

    def test_empty_rejected(self):
        with pytest.raises(PolyParseError):
            parse("   ", Modulus(6))

    @given(st.integers(min_value=2, max_value=50),
           st.lists(st.integers(min_value=0, max_value=49), max_size=6))
    def test_parse_format_round_trip(self, n, coeffs):
        f = PolyZn(Modulus(n), coeffs)
        assert parse(format_poly(f), f.modulus) == f


class TestArithmetic:
    def test_square_in_z4(self):
        m = Modulus(4)
        f = parse("x+2", m)
        assert (f * f) == parse("x^2", m)

    def test_additive_identity(self):
        m = Modulus(9)
        f = parse("4x^3+x+2", m)
        assert f + PolyZn(m, ()) == f

    def test_multiplicative_identity(self):
        m = Modulus(9)
        f = parse("x-5", m)
        assert f * PolyZn(m, (1,)) == f

    def test_modulus_mismatch_rejected(self):
        with pytest.raises(DomainError):
            parse("x", Modulus(4)) + parse("x", Modulus(6))


class TestDerivative:
    def test_characteristic_kills_term(self):
        assert derivative(parse("x^2+1", Modulus(2))).is_zero()

    def test_unit_derivative(self):
        assert derivative(parse("x^2+x+1", Modulus(2))).coeffs == (1,)

    def test_mod6_example(self):
        assert derivative(parse("3x^2+x+5", Modulus(6))).coeffs == (1,)


class TestReduceModulus:
    def test_mod4_to_mod2(self):
        g = reduce_modulus(parse("x^2+1", Modulus(4)), 2)
        assert g.modulus.n == 2 and g.coeffs == (1, 0, 1)

    def test_mod6_to_mod3(self):
        g = reduce_modulus(parse("3x^2+x+5", Modulus(6)), 3)
        assert g == parse("x+2", Modulus(3))

    def test_degree_drops(self):
        g = reduce_modulus(parse("2x+1", Modulus(4)), 2)
        assert g.coeffs == (1,)

    def test_rejects_non_divisor(self):
        with pytest.raises(DomainError):
            reduce_modulus(parse("x", Modulus(6)), 4)

    @given(st.sampled_from([(6, 3), (6, 2), (12, 4), (12, 3), (20, 5)]),
           st.lists(st.integers(min_value=0, max_value=19), max_size=5),
           st.lists(st.integers(min_value=0, max_value=19), max_size=5))
    def test_ring_homomorphism(self, moduli, a, b):
        n, m = moduli
        f, g = PolyZn(Modulus(n), a), PolyZn(Modulus(n), b)
        assert reduce_modulus(f + g, m) == reduce_modulus(f, m) + reduce_modulus(g, m)
        assert reduce_modulus(f * g, m) == reduce_modulus(f, m) * reduce_modulus(g, m)


class TestMakeMonic:
    def test_inverts_leading(self):
        assert make_monic_over_prime_field(parse("2x+1", Modulus(5))) \
            == parse("x+3", Modulus(5))

    def test_monic_unchanged(self):
        f = parse("x^3+2x+4", Modulus(5))
        assert make_monic_over_prime_field(f) == f

    def test_constant_becomes_one(self):
        assert make_monic_over_prime_field(parse("4", Modulus(7))).coeffs == (1,)

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            make_monic_over_prime_field(PolyZn(Modulus(5), ()))

    def test_rejects_composite_modulus(self):
        with pytest.raises(DomainError):
            make_monic_over_prime_field(parse("x", Modulus(6)))


class TestGcd:
    def test_gcd_with_zero(self):
        m = Modulus(2)
        f = parse("x^2+1", m)
        assert gcd_over_prime_field(f, PolyZn(m, ())) == f

    def test_gcd_with_unit(self):
        m = Modulus(2)
        assert gcd_over_prime_field(parse("x^2+x+1", m), parse("1", m)).coeffs == (1,)

    def test_gcd_zero_zero(self):
        m = Modulus(3)
        assert gcd_over_prime_field(PolyZn(m, ()), PolyZn(m, ())).is_zero()

    def test_coprime_pair_mod3(self):
        # x^2+1 is irreducible over Z/3 and has no root at 0, so it shares
        # no factor with 2x; cross-checked against sympy's gcd over GF(3)
        m = Modulus(3)
        g = gcd_over_prime_field(parse("x^2+1", m), parse("2x", m))
        assert g.coeffs == (1,)

    def test_common_factor_detected(self):
        m = Modulus(3)
        f = parse("x+1", m) * parse("x+2", m)
        g = parse("x+1", m) * parse("x", m)
        assert gcd_over_prime_field(f, g) == parse("x+1", m)

    def test_rejects_composite_modulus(self):
        with pytest.raises(DomainError):
            gcd_over_prime_field(parse("x", Modulus(4)), parse("x", Modulus(4)))

    @pytest.mark.parametrize("p", [2, 3])
    def test_gcd_is_greatest_common_divisor(self, p):
        m = Modulus(p)

        def divides(a, b):
            # a | b over Z/p (a nonzero)
            return rem_by_monic(b, make_monic_over_prime_field(a)).is_zero()

        polys = list(all_polys(p, 3))
        nonzero = [f for f in polys if not f.is_zero()]
        for f in polys:
            for g in polys:
                h = gcd_over_prime_field(f, g)
                if f.is_zero() and g.is_zero():
                    assert h.is_zero()
                    continue
                assert h.is_monic()
                assert divides(h, f) and divides(h, g)
                for c in nonzero:
                    if c.degree <= h.degree and divides(c, f) and divides(c, g):
                        assert divides(c, h)


class TestRemByMonic:
    def test_one_division_step(self):
        m = Modulus(7)
        # x^2 rem (x^2 + 3x + 2) = -3x - 2 = 4x + 5
        r = rem_by_monic(parse("x^2", m), parse("x^2+3x+2", m))
        assert r == parse("4x+5", m)

    def test_low_degree_unchanged(self):
        m = Modulus(6)
        f = parse("2x+1", m)
        assert rem_by_monic(f, parse("x^2+1", m)) == f

    def test_repeated_squaring_reduction(self):
        m = Modulus(4)
        assert rem_by_monic(parse("x^4", m), parse("x^2+1", m)).coeffs == (1,)

    def test_rejects_non_monic(self):
        m = Modulus(6)
        with pytest.raises(DomainError):
            rem_by_monic(parse("x^2", m), parse("2x", m))

    def test_congruent_to_input(self):
        m = Modulus(12)
        g = parse("x^3+5x+7", m)
        for coeffs in [(1, 2, 3, 4, 5), (11, 0, 0, 0, 1), (0,)]:
            f = PolyZn(m, coeffs)
            r = rem_by_monic(f, g)
            assert r.degree is None or r.degree < g.degree
            # f - r must be a multiple of g: divide exactly
            assert rem_by_monic(f - r, g).is_zero()
