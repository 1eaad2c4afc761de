import itertools
import random

import pytest

from skewcyclic import linalg
from skewcyclic.finite_field import EnumerationTooLarge


def _random_matrix(field, rows, cols, rng):
    return [[rng.randrange(field.q) for _ in range(cols)] for _ in range(rows)]


def _mat_vec(rows, vec, field):
    t = field.tables()
    out = []
    for row in rows:
        acc = 0
        for a, b in zip(row, vec):
            acc = t.add[acc][t.mul[a][b]]
        out.append(acc)
    return out


class TestRref:
    def test_identity_fixed(self, f3):
        eye = [[1, 0], [0, 1]]
        assert linalg.rref(eye, f3) == eye

    def test_known_reduction(self, f3):
        # (1,0,1) = (1,2,0) - 2*(0,1,1) over F_3, so the rank is 2
        mat = [[1, 2, 0], [0, 1, 1], [1, 0, 1]]
        assert linalg.rref(mat, f3) == [[1, 0, 1], [0, 1, 1]]
        full = [[1, 2, 0], [0, 1, 1], [0, 0, 2]]
        assert linalg.rref(full, f3) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def test_rank_of_zero_matrix(self, f9):
        assert linalg.rank([[0, 0], [0, 0]], f9) == 0

    def test_canonical_under_row_operations(self, f9):
        rng = random.Random(10)
        t = f9.tables()
        for _ in range(25):
            mat = _random_matrix(f9, 3, 5, rng)
            shuffled = mat[::-1]
            scaled = [[t.mul[2][x] for x in row] for row in mat]
            a = linalg.canonical_subspace(mat, f9)
            assert a == linalg.canonical_subspace(shuffled, f9)
            assert a == linalg.canonical_subspace(scaled, f9)


class TestNullspace:
    def test_kernel_vectors_annihilate(self, f9):
        rng = random.Random(11)
        for _ in range(25):
            mat = _random_matrix(f9, 3, 6, rng)
            basis = linalg.nullspace(mat, f9)
            assert len(basis) == 6 - linalg.rank(mat, f9)
            for vec in basis:
                assert _mat_vec(mat, vec, f9) == [0, 0, 0]

    def test_empty_matrix_kernel_is_everything(self, f3):
        basis = linalg.nullspace([], f3, ncols=4)
        assert len(basis) == 4


class TestSpan:
    def test_span_vectors_size(self, f3):
        rows = [[1, 0, 2], [0, 1, 1]]
        span = linalg.span_vectors(rows, f3)
        assert len(span) == 9
        assert tuple([0, 0, 0]) in span
        assert tuple(rows[0]) in span

    def test_span_bound(self, f9):
        with pytest.raises(EnumerationTooLarge):
            linalg.span_vectors([[1, 0], [0, 1]], f9, bound=80)

    @pytest.mark.parametrize("fixture", ["f3", "f9"])
    def test_min_weight_matches_explicit_enumeration(self, fixture, request):
        fld = request.getfixturevalue(fixture)
        rng = random.Random(12)
        for _ in range(20):
            rows = _random_matrix(fld, 2, 4, rng)
            span = linalg.span_vectors(rows, fld, bound=10**4)
            expected = min(
                (sum(1 for x in v if x != 0) for v in span if any(v)),
                default=None,
            )
            assert linalg.span_min_weight(rows, fld, 10**4) == expected

    def test_min_weight_zero_span(self, f9):
        assert linalg.span_min_weight([[0, 0, 0]], f9, 100) is None

    def test_min_weight_chunked_path(self, f3):
        # force the outer/inner split with 15 digit rows (3^15 combinations)
        rng = random.Random(13)
        rows = _random_matrix(f3, 15, 20, rng)
        w = linalg.span_min_weight(rows, f3, bound=2**31)
        assert 1 <= w <= 20
