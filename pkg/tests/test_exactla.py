from fractions import Fraction
import pytest
from hopfsage.models.field import Field
from hopfsage.models.matrix import Matrix
from hopfsage.services.linalg_service import LinearAlgebraService as LA
from hopfsage.utils.errors import (DimensionMismatchError, FieldError,
                                   MixedFieldError)
from tests.utils import apply, column_set, dimension, matrices, vectors


class TestField:
    @pytest.mark.parametrize('text,expected', [
        ('3', Fraction(3)),
        ('-1/2', Fraction(-1, 2)),
        ('4/6', Fraction(2, 3)),
    ])
    def test_parse_rationals(self, qq, text, expected):
        assert qq.parse(text) == expected

    def test_parse_residues(self):
        f5 = Field.prime(5)
        assert f5.parse('7') == 2
        assert f5.parse('1/2') == 3
        assert f5.parse('-1') == 4

    def test_format_round_trip(self, qq):
        assert qq.format(qq.parse('-3/4')) == '-3/4'
        assert qq.format(qq.parse('6/3')) == '2'

    def test_composite_modulus_rejected(self):
        with pytest.raises(FieldError):
            Field.prime(4)

    @pytest.mark.parametrize('text', ['x', '1/0', ''])
    def test_bad_scalar(self, qq, text):
        with pytest.raises(FieldError):
            qq.parse(text)

    def test_inverse_mod_p(self):
        f7 = Field.prime(7)
        assert all(f7.mul(a, f7.inv(a)) == 1 for a in range(1, 7))


class TestMatrix:
    def test_product_and_identity(self, qq):
        a = Matrix.from_rows(qq, [[1, 2], [3, 4]])
        assert a @ Matrix.identity(qq, 2) == a
        assert (a @ a).to_lists() == [[7, 10], [15, 22]]

    def test_shape_mismatch(self, qq):
        with pytest.raises(DimensionMismatchError):
            Matrix.from_rows(qq, [[1, 2]]) @ Matrix.from_rows(qq, [[1, 2]])

    def test_mixed_fields(self, qq, f2):
        with pytest.raises(MixedFieldError):
            Matrix.identity(qq, 2) + Matrix.identity(f2, 2)

    def test_kronecker_is_left_major(self, qq):
        a = Matrix.column_vector(qq, [1, 2])
        b = Matrix.column_vector(qq, [3, 4])
        assert LA.kronecker(a, b).entries == (3, 4, 6, 8)

    def test_swap_flips_factors(self, qq):
        v = Matrix.column_vector(qq, [1, 2])
        w = Matrix.column_vector(qq, [5, 7, 11])
        swap = Matrix.swap(qq, 2, 3)
        assert swap @ LA.kronecker(v, w) == LA.kronecker(w, v)


class TestElimination:
    def test_rank_and_kernel(self, qq):
        a = Matrix.from_rows(qq, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        kernel = LA.kernel_basis(a)
        assert LA.rank(a) == 2
        assert kernel.cols == 1
        assert (a @ kernel).is_zero()

    def test_kernel_mod_2(self, f2):
        a = Matrix.from_rows(f2, [[1, 1], [1, 1]])
        assert LA.kernel_basis(a).column(0) == (1, 1)

    def test_solve_inconsistent(self, qq):
        a = Matrix.from_rows(qq, [[1, 1], [1, 1]])
        assert LA.solve_linear(a, [1, 2]) is None
        assert LA.solve_linear(a, [2, 2]) == (2, 0)

    def test_inverse(self, qq):
        a = Matrix.from_rows(qq, [[2, 1], [1, 1]])
        assert a @ LA.inverse(a) == Matrix.identity(qq, 2)
        assert LA.inverse(Matrix.from_rows(qq, [[1, 2], [2, 4]])) is None

    def test_rationals_stay_exact(self, qq):
        a = Matrix.from_rows(qq, [['1/3', '1/2'], ['1/5', '1/7']])
        inverse = LA.inverse(a)
        assert a @ inverse == Matrix.identity(qq, 2)
        assert all(isinstance(x, Fraction) for x in inverse.entries)

    def test_minimal_polynomial(self, qq):
        nilpotent = Matrix.from_rows(qq, [[0, 1], [0, 0]])
        assert LA.minimal_polynomial(nilpotent) == (0, 0, 1)
        assert LA.minimal_polynomial(Matrix.identity(qq, 3)) == (-1, 1)
        flip = Matrix.permutation(qq, [1, 0])
        assert LA.minimal_polynomial(flip) == (-1, 0, 1)
        assert LA.evaluate_polynomial((-1, 0, 1), flip).is_zero()

    def test_same_span_and_intersection(self, qq):
        a = Matrix.from_columns(qq, [[1, 0, 0], [0, 1, 0]], 3)
        b = Matrix.from_columns(qq, [[1, 1, 0], [1, -1, 0]], 3)
        c = Matrix.from_columns(qq, [[0, 1, 1]], 3)
        assert LA.same_span(a, b)
        assert LA.intersection(a, c).cols == 0
        assert LA.complement_basis(a).column(0) == (0, 0, 1)

    def test_affine_map_solve(self, qq):
        # X with X @ (1, 1)^T = (2, 3)^T
        ones = Matrix.column_vector(qq, [1, 1])
        x = LA.solve_affine_map(qq, 2, 2, lambda m: (m @ ones).vec(), [2, 3])
        assert x @ ones == Matrix.column_vector(qq, [2, 3])


class TestEliminationOverF2:
    @pytest.mark.parametrize('rows,cols', [(2, 2), (2, 3), (3, 2)])
    def test_solvable_iff_ranks_agree(self, f2, rows, cols):
        for a in matrices(f2, rows, cols):
            images = {apply(a, x) for x in vectors(cols)}
            for b in vectors(rows):
                augmented = a.hstack(Matrix.column_vector(f2, b))
                consistent = LA.rank(a) == LA.rank(augmented)
                x = LA.solve_linear(a, b)
                assert (x is not None) == consistent == (b in images)
                if x is not None:
                    assert apply(a, x) == b

    @pytest.mark.parametrize('rows,cols', [(2, 2), (2, 3), (3, 2)])
    def test_kernel_is_the_null_space(self, f2, rows, cols):
        for a in matrices(f2, rows, cols):
            kernel = LA.kernel_basis(a)
            null = {x for x in vectors(cols) if not any(apply(a, x))}
            assert kernel.rows == cols
            assert kernel.cols == cols - LA.rank(a)
            assert LA.rank(kernel) == kernel.cols
            assert column_set(kernel) == null

    @pytest.mark.parametrize('rows,cols', [(2, 2), (2, 3), (3, 2)])
    def test_rank_counts_the_column_space(self, f2, rows, cols):
        for a in matrices(f2, rows, cols):
            assert LA.rank(a) == dimension(column_set(a))

    @pytest.mark.parametrize('left,right', [
        ((2, 2), (2, 2)),
        ((1, 3), (2, 1)),
        ((2, 1), (1, 2)),
    ])
    def test_kronecker_rank_is_multiplicative(self, f2, left, right):
        for a in matrices(f2, *left):
            for b in matrices(f2, *right):
                assert LA.rank(LA.kronecker(a, b)) == \
                    LA.rank(a) * LA.rank(b)
