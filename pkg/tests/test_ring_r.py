import itertools
import random

import pytest

from skewcyclic.finite_field import FieldMismatch
from skewcyclic.ring_r import (
    CrtTriple,
    LengthNotDivisibleBy3,
    RingElem,
    crt_join,
    crt_split,
    gray_inverse,
    gray_map,
    hamming_distance,
    lee_distance,
    lee_weight,
    make_idempotents,
    ring_elem,
    ring_elem_from_string,
    ring_elements,
    ring_from_index,
    ring_index,
    ring_tables,
    ring_vector_from_string,
    ring_vector_to_string,
    theta,
)


class TestRingArithmetic:
    def test_v_times_v_squared_is_v(self, f3):
        v = ring_elem(f3, 0, 1, 0)
        v2 = ring_elem(f3, 0, 0, 1)
        assert v * v2 == v

    def test_multiplicative_identity_exhaustive(self, f3):
        one = ring_elem(f3, 1)
        for x in ring_elements(f3):
            assert x * one == x

    def test_one_plus_v_times_one_minus_v(self, f3):
        # (1 + v)(1 - v) = 1 - v^2, cross-checked through the splitting
        x = ring_elem(f3, 1, 1, 0)
        y = ring_elem(f3, 1, 2, 0)
        prod = x * y
        assert prod == ring_elem(f3, 1, 0, 2)
        sx, sy, sp = crt_split(x), crt_split(y), crt_split(prod)
        assert sp == CrtTriple(sx.x1 * sy.x1, sx.x2 * sy.x2, sx.x3 * sy.x3)

    def test_commutative_ring_axioms_sampled(self, f9):
        rng = random.Random(2)
        elems = f9.elements()

        def rand():
            return RingElem(rng.choice(elems), rng.choice(elems), rng.choice(elems))

        for _ in range(200):
            x, y, z = rand(), rand(), rand()
            assert x * y == y * x
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z

    def test_units_and_inverses(self, f3):
        units = [x for x in ring_elements(f3) if x.is_unit()]
        one = ring_elem(f3, 1)
        # |R*| = (q - 1)^3 under the splitting
        assert len(units) == 8
        for u in units:
            assert u * u.inv() == one

    def test_field_mismatch(self, f3, f9):
        with pytest.raises(FieldMismatch):
            RingElem(f3.one, f3.zero, f9.zero)


class TestIdempotents:
    @pytest.mark.parametrize("spec", ["f3", "f9", "f25"])
    def test_orthogonal_idempotents_sum_to_one(self, spec, request):
        fld = request.getfixturevalue(spec)
        etas = make_idempotents(fld)
        one = ring_elem(fld, 1)
        zero = ring_elem(fld, 0)
        assert etas.eta1 + etas.eta2 + etas.eta3 == one
        for j, ej in enumerate(etas):
            for k, ek in enumerate(etas):
                assert ej * ek == (ej if j == k else zero)

    def test_eta2_over_f3(self, f3):
        assert make_idempotents(f3).eta2 == ring_elem(f3, 0, 2, 2)

    def test_eta1_is_one_minus_v_squared(self, f9):
        assert make_idempotents(f9).eta1 == ring_elem(f9, 1, 0, -1)


class TestSplitting:
    def test_zero(self, f3):
        t = crt_split(ring_elem(f3, 0))
        assert all(x.is_zero() for x in t)

    def test_v_splits_to_0_1_minus1(self, f3):
        assert crt_split(ring_elem(f3, 0, 1, 0)) == CrtTriple(
            f3.zero, f3.one, -f3.one
        )

    def test_eta1_splits_to_unit_vector(self, f3):
        eta1 = make_idempotents(f3).eta1
        assert crt_split(eta1) == CrtTriple(f3.one, f3.zero, f3.zero)

    def test_join_of_ones_is_one(self, f9):
        assert crt_join(f9, (f9.one, f9.one, f9.one)) == ring_elem(f9, 1)

    def test_join_unit_vector_is_eta2(self, f9):
        assert crt_join(f9, (f9.zero, f9.one, f9.zero)) == make_idempotents(f9).eta2

    def test_split_join_inverse_exhaustive(self, f3, f9):
        for fld in (f3, f9):
            for r in ring_elements(fld):
                assert crt_join(fld, crt_split(r)) == r

    def test_ring_isomorphism_exhaustive_f3(self, f3):
        elems = ring_elements(f3)
        for x, y in itertools.product(elems, repeat=2):
            sx, sy = crt_split(x), crt_split(y)
            assert crt_split(x * y) == CrtTriple(
                sx.x1 * sy.x1, sx.x2 * sy.x2, sx.x3 * sy.x3
            )
            assert crt_split(x + y) == CrtTriple(
                sx.x1 + sy.x1, sx.x2 + sy.x2, sx.x3 + sy.x3
            )

    def test_maximal_ideals_sanity_f3(self, f3):
        """R has exactly the principal maximal ideals generated by v, v-1, v+1."""
        elems = ring_elements(f3)
        for gen in (
            ring_elem(f3, 0, 1, 0),  # v
            ring_elem(f3, -1, 1, 0),  # v - 1
            ring_elem(f3, 1, 1, 0),  # v + 1
        ):
            ideal = {r * gen for r in elems}
            assert len(ideal) == 9
            for outside in elems:
                if outside in ideal:
                    continue
                extended = {a + r * outside for a in ideal for r in elems}
                assert len(extended) == 27


class TestTheta:
    def test_fixes_v(self, f9):
        v = ring_elem(f9, 0, 1, 0)
        assert theta(v, 1) == v

    def test_theta_on_w_coefficients(self, f9):
        w = f9.gen
        x = RingElem(w, w, f9.zero)  # w + wv
        tw = f9.elem([0, 2])
        assert theta(x, 1) == RingElem(tw, tw, f9.zero)

    def test_is_ring_automorphism_sampled(self, f9):
        rng = random.Random(3)
        elems = f9.elements()

        def rand():
            return RingElem(rng.choice(elems), rng.choice(elems), rng.choice(elems))

        for _ in range(200):
            x, y = rand(), rand()
            assert theta(x * y, 1) == theta(x, 1) * theta(y, 1)
            assert theta(x + y, 1) == theta(x, 1) + theta(y, 1)

    def test_commutes_with_splitting(self, f9):
        for r in ring_elements(f9):
            s = crt_split(r)
            assert crt_split(theta(r, 1)) == CrtTriple(
                s.x1.frob(1), s.x2.frob(1), s.x3.frob(1)
            )


class TestGrayMap:
    def test_zero_maps_to_zero(self, f3):
        img = gray_map([ring_elem(f3, 0)] * 4)
        assert len(img) == 12 and all(x.is_zero() for x in img)

    def test_definition_formula(self, f3):
        img = gray_map([ring_elem(f3, 1, 2, 0)])
        assert [x.coeffs[0] for x in img] == [1, 0, 2]

    def test_agrees_with_splitting_exhaustive(self, f3, f9):
        for fld in (f3, f9):
            for r in ring_elements(fld):
                assert gray_map([r]) == tuple(crt_split(r))

    def test_linearity_sampled(self, f9):
        rng = random.Random(4)
        size = f9.q**3
        for _ in range(200):
            x = tuple(ring_from_index(f9, rng.randrange(size)) for _ in range(3))
            y = tuple(ring_from_index(f9, rng.randrange(size)) for _ in range(3))
            lam = rng.choice(f9.elements())
            both = tuple(a + b for a, b in zip(x, y))
            assert gray_map(both) == tuple(
                a + b for a, b in zip(gray_map(x), gray_map(y))
            )
            scaled = tuple(RingElem(lam * r.a, lam * r.b, lam * r.c) for r in x)
            assert gray_map(scaled) == tuple(lam * a for a in gray_map(x))

    def test_inverse_roundtrip_random(self, f9):
        rng = random.Random(5)
        size = f9.q**3
        for _ in range(1000):
            vec = tuple(ring_from_index(f9, rng.randrange(size)) for _ in range(2))
            assert gray_inverse(f9, gray_map(vec)) == vec

    def test_inverse_example(self, f3):
        vec = gray_inverse(f3, (f3.one, f3.zero, f3.elem(2)))
        assert vec == (ring_elem(f3, 1, 2, 0),)

    def test_inverse_length_check(self, f3):
        with pytest.raises(LengthNotDivisibleBy3):
            gray_inverse(f3, (f3.one, f3.zero))


class TestLeeWeight:
    def test_zero(self, f3):
        assert lee_weight(ring_elem(f3, 0)) == 0

    def test_v_has_weight_two(self, f3):
        assert lee_weight(ring_elem(f3, 0, 1, 0)) == 2

    def test_one_has_weight_three(self, f3):
        assert lee_weight(ring_elem(f3, 1)) == 3

    def test_vector_weight_is_sum(self, f3):
        vec = (ring_elem(f3, 0, 1, 0), ring_elem(f3, 1), ring_elem(f3, 0))
        assert lee_weight(vec) == 5

    def test_isometry_exhaustive_n1_q3(self, f3):
        words = [(r,) for r in ring_elements(f3)]
        for x in words:
            for y in words:
                assert lee_distance(x, y) == hamming_distance(
                    gray_map(x), gray_map(y)
                )


class TestRingTables:
    def test_tables_agree_with_objects(self, f3):
        rt = ring_tables(f3)
        elems = ring_elements(f3)
        for x in elems:
            ix = ring_index(f3, x)
            assert ring_from_index(f3, ix) == x
            assert rt.lee[ix] == lee_weight(x)
            for y in elems:
                iy = ring_index(f3, y)
                assert rt.add[ix][iy] == ring_index(f3, x + y)

    def test_frob_table(self, f9):
        rt = ring_tables(f9)
        ft = rt.frob(1)
        for x in ring_elements(f9):
            assert ft[ring_index(f9, x)] == ring_index(f9, theta(x, 1))


class TestTextFormats:
    def test_elem_roundtrip(self, f3):
        r = ring_elem(f3, 1, 2, 0)
        assert str(r) == "[1]|[2]|[0]"
        assert ring_elem_from_string(f3, "[1]|[2]|[0]") == r

    def test_vector_roundtrip(self, f9):
        vec = (ring_elem(f9, 1), RingElem(f9.gen, f9.zero, f9.one))
        s = ring_vector_to_string(vec)
        assert ring_vector_from_string(f9, s) == vec

    def test_bad_elem_rejected(self, f3):
        with pytest.raises(ValueError):
            ring_elem_from_string(f3, "[1]|[2]")
