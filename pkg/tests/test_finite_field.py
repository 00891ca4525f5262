import random

import pytest

from chartab.arith import euler_phi
from chartab.cyclo import Cyclotomic, root_power
from chartab.errors import NonIntegralValueError, OrderMismatchError
from chartab.finite_field import (
    ExtensionFieldElement,
    PrimeFieldElement,
    field_elements,
    field_generator,
    irreducible_polynomial,
)
from chartab.reduction import ReductionMap, build_reduction, candidate_roots, reduce_mod_M


class TestPrimeField:
    def test_basic_arithmetic(self):
        a = PrimeFieldElement(7, 3)
        b = PrimeFieldElement(7, 5)
        assert a + b == 1
        assert a - b == 5
        assert a * b == 1
        assert -a == 4
        assert a / b == a * b.inverse()
        assert (a / b) * b == a

    def test_int_coercion(self):
        a = PrimeFieldElement(7, 3)
        assert a + 5 == 1
        assert 2 * a == 6
        assert 1 - a == 5

    def test_pow(self):
        a = PrimeFieldElement(13, 2)
        assert a**12 == 1
        assert a**0 == 1

    def test_composite_modulus_rejected(self):
        with pytest.raises(ValueError):
            PrimeFieldElement(6, 1)

    def test_mixed_moduli_rejected(self):
        with pytest.raises(ValueError):
            PrimeFieldElement(7, 1) + PrimeFieldElement(5, 1)


class TestIrreduciblePolynomial:
    def test_degree_one_is_x(self):
        assert irreducible_polynomial(3, 1) == (0, 1)
        assert irreducible_polynomial(5, 1) == (0, 1)

    def test_gf16_polynomial(self):
        # x^4 + 1 = (x+1)^4 and x^4 + x are reducible over GF(2); first
        # irreducible in constant-upward order is 1 + x^3 + x^4
        assert irreducible_polynomial(2, 4) == (1, 0, 0, 1, 1)

    def test_gf25_polynomial_has_no_roots(self):
        poly = irreducible_polynomial(5, 2)
        for x in range(5):
            value = sum(c * x**k for k, c in enumerate(poly)) % 5
            assert value != 0

    def test_deterministic(self):
        assert irreducible_polynomial(3, 4) == irreducible_polynomial(3, 4)


class TestExtensionField:
    def test_field_size(self):
        poly = irreducible_polynomial(2, 4)
        assert len(list(field_elements(2, poly))) == 16

    def test_generator_order(self):
        for p, f in ((2, 4), (3, 2), (5, 2)):
            poly = irreducible_polynomial(p, f)
            assert field_generator(p, poly).multiplicative_order() == p**f - 1

    def test_frobenius_is_additive(self):
        poly = irreducible_polynomial(3, 2)
        rng = random.Random(2)
        for _ in range(20):
            a = ExtensionFieldElement(3, poly, [rng.randrange(3), rng.randrange(3)])
            b = ExtensionFieldElement(3, poly, [rng.randrange(3), rng.randrange(3)])
            assert (a + b) ** 3 == a**3 + b**3

    def test_from_int_and_equality(self):
        poly = irreducible_polynomial(5, 2)
        assert ExtensionFieldElement.from_int(5, poly, 7) == 2
        assert ExtensionFieldElement.one(5, poly) * 3 == 3


class TestBuildReduction:
    def test_order_six_p_three(self):
        r = build_reduction(6, 3)
        assert (r.m, r.f) == (2, 1)
        assert r.eta == 2  # eta = -1 in GF(3)

    def test_power_of_p_collapses(self):
        r = build_reduction(4, 2)
        assert (r.m, r.f) == (1, 1)
        assert r.eta == 1

    def test_order_six_p_five(self):
        r = build_reduction(6, 5)
        assert (r.m, r.f) == (6, 2)
        assert len(list(field_elements(r.p, r.poly))) == 25

    def test_eta_invariants(self):
        from chartab.reduction import _phi_e_value

        for e, p in ((6, 3), (6, 5), (12, 2), (12, 3), (30, 2), (60, 5), (1, 3)):
            r = build_reduction(e, p)
            assert r.eta ** r.m == 1
            if r.m > 1:
                assert r.eta.multiplicative_order() == r.m
            assert not _phi_e_value(e, r.eta)

    def test_composite_p_rejected(self):
        with pytest.raises(ValueError):
            build_reduction(6, 4)

    def test_candidate_roots_all_valid(self):
        for e, p in ((6, 5), (12, 5), (4, 3)):
            r = build_reduction(e, p)
            cands = candidate_roots(e, p)
            assert r.eta in cands
            assert len(cands) == euler_phi(r.m)
            for eta in cands:
                assert eta.multiplicative_order() == r.m


class TestReduceModM:
    def test_unital(self):
        r = build_reduction(6, 5)
        assert reduce_mod_M(Cyclotomic.one(6), r) == 1

    def test_sixth_root_mod_three(self):
        r = build_reduction(6, 3)
        assert reduce_mod_M(root_power(6, 1), r) == 2

    def test_characteristic_kills_p(self):
        r = build_reduction(6, 3)
        assert reduce_mod_M(Cyclotomic.from_rational(6, 3), r) == 0

    def test_homomorphism_sampled(self):
        rng = random.Random(9)
        for e, p in ((6, 3), (12, 2), (30, 2), (60, 3), (60, 5)):
            r = build_reduction(e, p)
            d = euler_phi(e)
            for _ in range(8):
                a = Cyclotomic(e, [rng.randrange(-9, 10) for _ in range(d)])
                b = Cyclotomic(e, [rng.randrange(-9, 10) for _ in range(d)])
                assert reduce_mod_M(a + b, r) == reduce_mod_M(a, r) + reduce_mod_M(b, r)
                assert reduce_mod_M(a * b, r) == reduce_mod_M(a, r) * reduce_mod_M(b, r)

    def test_non_integral_rejected(self):
        r = build_reduction(6, 3)
        from fractions import Fraction

        with pytest.raises(NonIntegralValueError):
            reduce_mod_M(Cyclotomic.from_rational(6, Fraction(1, 2)), r)

    def test_order_mismatch_rejected(self):
        r = build_reduction(6, 3)
        with pytest.raises(OrderMismatchError):
            reduce_mod_M(root_power(12, 1), r)

    def test_choice_of_root_changes_values_not_structure(self):
        # different valid roots give different images of eps but both are
        # ring homomorphisms
        cands = candidate_roots(6, 5)
        assert len(cands) == 2
        for eta in cands:
            base = build_reduction(6, 5)
            r = ReductionMap(e=6, p=5, m=base.m, f=base.f, poly=base.poly, eta=eta)
            a = root_power(6, 1) + 1
            b = root_power(6, 4) * 3
            assert reduce_mod_M(a * b, r) == reduce_mod_M(a, r) * reduce_mod_M(b, r)
