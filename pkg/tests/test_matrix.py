from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from gidkit.errors import DimensionMismatch, KindMismatch, Singular
from gidkit.matrix import (
    DaggerMode, Matrix, ascent, dagger, descent, equal, first_difference, full_rank_factorization,
    inverse, left_kernel, matpow, rank, rref, solve
)
from gidkit.scalar import Field, GaussianRational, I
from tests.strategies import matrices, square_matrices

F = Fraction


def q(*filas):
    return Matrix([[F(v) for v in fila] for fila in filas], Field.Q)


class TestConstruction:
    def test_ragged_rows_rejected(self):
        with pytest.raises(DimensionMismatch):
            Matrix([[1, 2], [3]])

    def test_empty_needs_shape(self):
        m = Matrix([], Field.Q, shape=(0, 3))
        assert m.shape == (0, 3)
        with pytest.raises(DimensionMismatch):
            Matrix([])

    def test_field_inferred(self):
        assert Matrix([[1, I]]).field is Field.QI
        assert Matrix([[F(1, 2), 3]]).field is Field.Q

    def test_mixed_fields_do_not_multiply(self):
        with pytest.raises(KindMismatch):
            q([1]) @ Matrix([[I]])

    def test_to_field_promotes(self):
        m = q([1, 2]).to_field(Field.QI)
        assert m.field is Field.QI
        assert m[0, 1] == GaussianRational(2)


class TestProducts:
    def test_row_vector_convention(self):
        # El mapa 1→2 seguido del mapa 2→1
        f = q([1, 2])
        g = q([3], [4])
        assert f @ g == q([11])

    def test_power_zero_is_identity(self):
        assert matpow(q([0, 1], [0, 0]), 0) == Matrix.identity(2)

    def test_nilpotent_power(self):
        n = q([0, 1, 0], [0, 0, 1], [0, 0, 0])
        assert matpow(n, 2) == q([0, 0, 1], [0, 0, 0], [0, 0, 0])
        assert matpow(n, 3).is_zero()

    def test_empty_products(self):
        a = Matrix([], Field.Q, shape=(2, 0))
        b = Matrix([], Field.Q, shape=(0, 3))
        assert (a @ b) == Matrix.zeros(2, 3)

    @given(matrices(Field.QI, rows=2, cols=3), matrices(Field.QI, rows=3, cols=2))
    def test_dagger_reverses_products(self, a, b):
        for mode in DaggerMode:
            assert dagger(a @ b, mode) == dagger(b, mode) @ dagger(a, mode)

    @given(matrices(Field.QI))
    def test_dagger_is_involutive(self, a):
        for mode in DaggerMode:
            assert dagger(dagger(a, mode), mode) == a


class TestDagger:
    def test_transpose_does_not_conjugate(self):
        f = Matrix([[I, 1]])
        assert dagger(f, DaggerMode.TRANSPOSE) == Matrix([[I], [1]], Field.QI)
        assert dagger(f, DaggerMode.CONJUGATE_TRANSPOSE) == Matrix([[-I], [1]], Field.QI)

    def test_isotropic_row_under_transpose(self):
        f = Matrix([[I, 1]])
        assert (f @ dagger(f, DaggerMode.TRANSPOSE)).is_zero()
        assert f @ dagger(f, DaggerMode.CONJUGATE_TRANSPOSE) == Matrix([[2]], Field.QI)


class TestRank:
    @pytest.mark.parametrize('m, esperado', [
        (q([1, 2], [2, 4]), 1),
        (q([1, 0], [0, 1]), 2),
        (q([0, 0], [0, 0]), 0),
        (q([1, 2, 3], [4, 5, 6], [7, 8, 9]), 2),
        (q([F(1, 2), F(1, 3)], [F(3, 2), 1]), 1),
    ])
    def test_known_ranks(self, m, esperado):
        assert rank(m) == esperado

    def test_gaussian_rank(self):
        assert rank(Matrix([[1, I], [I, -1]])) == 1
        assert rank(Matrix([[1, I], [-I, 1]])) == 1
        assert rank(Matrix([[1, I], [I, 1]])) == 2

    @given(matrices(Field.Q))
    def test_rank_matches_numpy(self, m):
        arr = np.array([[float(v) for v in fila] for fila in m.to_lists()])
        assert rank(m) == np.linalg.matrix_rank(arr)

    @given(matrices(Field.QI))
    def test_rank_invariant_under_dagger(self, m):
        assert rank(m) == rank(dagger(m, DaggerMode.CONJUGATE_TRANSPOSE)) == rank(m.transpose())

    @given(matrices(Field.QI))
    def test_gram_rank_under_conjugate_transpose(self, m):
        # rank(A·A*) = rank(A): falla con la transpuesta sobre Qi, vale con la conjugada
        ct = DaggerMode.CONJUGATE_TRANSPOSE
        assert rank(m @ dagger(m, ct)) == rank(m) == rank(dagger(m, ct) @ m)

    def test_gram_rank_drops_under_transpose(self):
        fila = Matrix([[I, 1]])
        assert rank(fila) == 1
        assert rank(fila @ dagger(fila, DaggerMode.TRANSPOSE)) == 0

    def test_float_rank_threshold(self):
        m = Matrix([[1.0, 0.0], [0.0, 1e-12]], Field.C64)
        assert rank(m) == 1


class TestSmallMagnitudeFloat:
    """El umbral de pivote es relativo a A, no a la matriz ampliada [A | I]"""

    CHICA = np.array([[2e-10, 1e-10], [1e-10, 3e-10]])

    def test_inverse(self):
        a = Matrix.from_numpy(self.CHICA)
        assert rank(a) == 2
        assert np.allclose(inverse(a).to_numpy(), np.linalg.inv(self.CHICA), rtol=1e-9, atol=0)

    def test_solve(self):
        a = Matrix.from_numpy(self.CHICA)
        b = Matrix.from_numpy([[1e-10], [2e-10]])
        x = solve(a, b)
        assert np.allclose(x.to_numpy(), np.linalg.solve(self.CHICA, b.to_numpy()), rtol=1e-9, atol=0)

    @pytest.mark.parametrize('escala', [1e-3, 1e-6, 1e-12])
    def test_rank_and_inverse_agree(self, escala):
        rng = np.random.default_rng(3)
        arr = (rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))) * escala
        a = Matrix.from_numpy(arr)
        assert rank(a) == 4
        assert np.allclose(inverse(a).to_numpy(), np.linalg.inv(arr), rtol=1e-6, atol=0)

    def test_singular_still_detected(self):
        a = Matrix.from_numpy(np.array([[1e-10, 2e-10], [2e-10, 4e-10]]))
        assert rank(a) == 1
        with pytest.raises(Singular):
            inverse(a)


class TestElimination:
    @given(matrices(Field.Q))
    def test_full_rank_factorization(self, a):
        f, g = full_rank_factorization(a)
        r = rank(a)
        assert f.shape == (a.rows, r) and g.shape == (r, a.cols)
        assert rank(f) == r and rank(g) == r
        assert f @ g == a

    @given(matrices(Field.QI))
    def test_full_rank_factorization_gaussian(self, a):
        f, g = full_rank_factorization(a)
        assert f @ g == a

    def test_rref(self):
        r_mat, pivotes = rref(q([2, 4, 2], [1, 2, 3]))
        assert pivotes == (0, 2)
        assert r_mat == q([1, 2, 0], [0, 0, 1])

    @given(square_matrices(Field.Q))
    def test_inverse_or_singular(self, a):
        if rank(a) == a.rows:
            assert a @ inverse(a) == Matrix.identity(a.rows)
        else:
            with pytest.raises(Singular):
                inverse(a)

    def test_solve_and_inconsistency(self):
        a = q([1, 1], [2, 2])
        x = solve(a, q([2], [4]))
        assert a @ x == q([2], [4])
        with pytest.raises(Singular):
            solve(a, q([1], [3]))

    @given(matrices(Field.Q))
    def test_left_kernel(self, a):
        k = left_kernel(a)
        assert k.rows == a.rows - rank(a)
        assert (k @ a).is_zero()


class TestAscentDescent:
    def test_nilpotent_jordan_block(self):
        n = q([0, 1, 0], [0, 0, 1], [0, 0, 0])
        assert descent(n) == ascent(n) == 3

    def test_invertible_is_zero(self):
        assert descent(q([1, 2], [3, 4])) == ascent(q([1, 2], [3, 4])) == 0

    def test_zero_matrix(self):
        assert descent(Matrix.zeros(3, 3)) == 1

    @given(square_matrices(Field.Q))
    def test_ascent_equals_descent(self, a):
        assert ascent(a) == descent(a)

    @given(square_matrices(Field.QI))
    def test_ascent_equals_descent_gaussian(self, a):
        assert ascent(a) == descent(a)


class TestComparison:
    def test_first_difference_exact(self):
        assert first_difference(q([1, 2], [3, 4]), q([1, 2], [3, 5])) == (1, 1)
        assert first_difference(q([1]), q([1])) is None

    def test_float_tolerance(self):
        a = Matrix([[1.0, 2.0]], Field.C64)
        b = Matrix([[1.0 + 1e-12, 2.0]], Field.C64)
        assert equal(a, b)
        assert not equal(a, Matrix([[1.1, 2.0]], Field.C64))
        assert equal(a, Matrix([[1.1, 2.0]], Field.C64), tol=0.5)

    def test_float_tolerance_is_relative_above_unit_norm(self):
        grande = Matrix([[1e6, 2e6]], Field.C64)
        assert equal(grande, Matrix([[1e6 + 1e-3, 2e6]], Field.C64))
        assert not equal(grande, Matrix([[1e6 + 1.0, 2e6]], Field.C64))
        chica = Matrix([[1e-6, 0.0]], Field.C64)
        assert equal(chica, Matrix([[1e-6 + 1e-9, 0.0]], Field.C64))
