import itertools
import random

import pytest

from skewcyclic.finite_field import (
    DegreeMismatch,
    EnumerationTooLarge,
    EvenCharacteristic,
    Field,
    FieldMismatch,
    InvalidExponent,
    NotPrime,
    ReducibleModulus,
    ZeroInverse,
    elem_from_string,
    field_from_string,
    field_new,
    frobenius,
)


class TestConstruction:
    def test_prime_field_uses_canonical_modulus(self):
        f = field_new(3, 1, [0, 1])
        assert f.modulus == (0, 1)
        assert [x.coeffs for x in f.elements()] == [(0,), (1,), (2,)]

    def test_prime_field_ignores_supplied_modulus(self):
        # degenerate m = 1 case: elements are constants, modulus is recorded
        # canonically and never checked for irreducibility
        assert field_new(3, 1, [1, 1]).modulus == (0, 1)

    def test_f9_valid(self):
        f = field_new(3, 2, [1, 0, 1])
        assert f.q == 9

    def test_even_characteristic_rejected(self):
        with pytest.raises(EvenCharacteristic):
            field_new(2, 2, [1, 1, 1])

    def test_composite_characteristic_rejected(self):
        with pytest.raises(NotPrime):
            field_new(9, 1, [0, 1])

    def test_reducible_modulus_rejected(self):
        # 1 + w + w^2 has the root 1 mod 3
        with pytest.raises(ReducibleModulus):
            field_new(3, 2, [1, 1, 1])

    def test_modulus_degree_checked(self):
        with pytest.raises(DegreeMismatch):
            field_new(3, 2, [1, 0])
        with pytest.raises(DegreeMismatch):
            field_new(3, 2, [1, 0, 2])  # not monic

    def test_degree_four_trial_division(self):
        field_new(3, 4, [2, 1, 0, 0, 1])  # x^4 + x + 2, irreducible
        with pytest.raises(ReducibleModulus):
            field_new(3, 4, [1, 0, 2, 0, 1])  # (x^2 + 1)^2

    def test_element_needs_m_coefficients(self, f9):
        with pytest.raises(DegreeMismatch):
            f9.elem([1, 0, 0])


class TestArithmetic:
    def test_w_squared_is_minus_one(self, f9):
        w = f9.gen
        assert w * w == -f9.one

    def test_additive_identity_exhaustive(self, f9):
        for x in f9.elements():
            assert x + f9.zero == x

    def test_inverse_of_two_in_f3(self, f3):
        two = f3.elem(2)
        assert two.inv() == two
        assert two * two.inv() == f3.one

    def test_zero_inverse_rejected(self, f9):
        with pytest.raises(ZeroInverse):
            f9.zero.inv()

    def test_field_mismatch(self, f3, f9):
        with pytest.raises(FieldMismatch):
            f3.one + f9.one

    @pytest.mark.parametrize("spec", [(3, 1, [0, 1]), (3, 2, [1, 0, 1]), (5, 2, [2, 0, 1])])
    def test_field_axioms_exhaustive(self, spec):
        """Associativity, commutativity, distributivity, inverses for q <= 25."""
        f = field_new(*spec)
        elems = f.elements()
        for x in elems:
            assert x + (-x) == f.zero
            assert x * f.one == x
            if not x.is_zero():
                assert x * x.inv() == f.one
        for x, y in itertools.product(elems, repeat=2):
            assert x + y == y + x
            assert x * y == y * x
        for x, y, z in itertools.product(elems, repeat=3):
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z

    def test_axioms_sampled_above_exhaustion_cutoff(self, f27):
        rng = random.Random(0)
        elems = f27.elements()
        for _ in range(300):
            x, y, z = (rng.choice(elems) for _ in range(3))
            assert (x + y) * z == x * z + y * z
            assert x * (y * z) == (x * y) * z
            if not x.is_zero():
                assert x * x.inv() == f27.one


class TestFrobenius:
    def test_w_to_the_p(self, f9):
        w = f9.gen
        assert frobenius(w, 1) == f9.elem([0, 2])  # w^3 = -w

    def test_fixes_prime_subfield(self, f25):
        for c in range(5):
            x = f25.elem(c)
            assert frobenius(x, 1) == x

    @pytest.mark.parametrize("i", [1, 2])
    def test_iterating_ti_times_is_identity(self, f9, i):
        t = f9.m // i
        for x in f9.elements():
            y = x
            for _ in range(t):
                y = frobenius(y, i)
            assert y == x

    def test_fixed_points_count_is_p_to_i(self, f9, f27):
        assert len(f9.fixed_subfield(1)) == 3
        assert len(f9.fixed_subfield(2)) == 9
        assert len(f27.fixed_subfield(1)) == 3
        assert len(f27.fixed_subfield(3)) == 27

    def test_is_field_automorphism(self, f9):
        rng = random.Random(1)
        elems = f9.elements()
        for _ in range(200):
            x, y = rng.choice(elems), rng.choice(elems)
            assert frobenius(x + y, 1) == frobenius(x, 1) + frobenius(y, 1)
            assert frobenius(x * y, 1) == frobenius(x, 1) * frobenius(y, 1)

    def test_invalid_exponent(self, f9):
        with pytest.raises(InvalidExponent):
            frobenius(f9.one, 3)
        with pytest.raises(InvalidExponent):
            frobenius(f9.one, 0)


class TestEnumeration:
    def test_f3_order(self, f3):
        assert [x.coeffs for x in f3.elements()] == [(0,), (1,), (2,)]

    def test_f9_deterministic_and_zero_first(self, f9):
        elems = f9.elements()
        assert len(elems) == 9
        assert elems[0] == f9.zero
        assert elems == f9.elements()

    def test_f25_count(self, f25):
        assert len(f25.elements()) == 25

    def test_enumeration_bound(self, f9):
        with pytest.raises(EnumerationTooLarge):
            f9.elements(bound=8)

    def test_index_roundtrip(self, f25):
        for idx, x in enumerate(f25.elements()):
            assert f25.index(x) == idx
            assert f25.from_index(idx) == x


class TestTables:
    def test_tables_agree_with_element_ops(self, f9):
        t = f9.tables()
        elems = f9.elements()
        for a in range(9):
            assert t.neg[a] == f9.index(-elems[a])
            for b in range(9):
                assert t.add[a][b] == f9.index(elems[a] + elems[b])
                assert t.mul[a][b] == f9.index(elems[a] * elems[b])
        for a in range(1, 9):
            assert t.inv[a] == f9.index(elems[a].inv())

    def test_frob_table(self, f9):
        ft = f9.frob_table(1)
        for a, x in enumerate(f9.elements()):
            assert ft[a] == f9.index(frobenius(x, 1))

    def test_tableless_fallback_field(self):
        # q = 4489 exceeds the table limit but plain arithmetic still works
        f = field_new(67, 2, [65, 0, 1])  # w^2 - 2 over Z_67, 2 a non-residue
        x = f.elem([12, 53])
        assert x * x.inv() == f.one
        with pytest.raises(EnumerationTooLarge):
            f.tables()


class TestTextFormats:
    def test_field_spec_roundtrip(self, f9):
        assert field_from_string("p=3,m=2,mod=1,0,1") == f9
        assert field_from_string(f9.spec_string()) == f9

    def test_prime_field_spec_without_modulus(self, f3):
        assert field_from_string("p=3,m=1") == f3

    def test_elem_parse(self, f9):
        assert elem_from_string(f9, "[0,1]") == f9.gen
        assert elem_from_string(f9, "[2]") == f9.elem(2)
        assert str(f9.gen) == "[0,1]"

    def test_bad_spec_rejected(self):
        with pytest.raises(ValueError):
            field_from_string("m=2,mod=1,0,1")
        with pytest.raises(ValueError):
            field_from_string("p=3,m=2,bogus=1")
