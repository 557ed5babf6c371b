from fractions import Fraction

import pytest
from hypothesis import given

from gidkit.dagger_inverse import dagger_drazin
from gidkit.drazin import drazin_index, drazin_inverse
from gidkit.errors import DimensionMismatch, KindMismatch
from gidkit.matrix import DaggerMode, Matrix, dagger
from gidkit.opposing import (
    OpposingPair, PairCategory, adjoint_pair, cofree_equivalence, opposing_drazin, pair_compose,
    pair_dagger, pair_drazin_endo, recover_endomorphism_drazin
)
from gidkit.scalar import Field, I
from gidkit.verifier import verify_dagger_drazin, verify_drazin, verify_opposing
from tests.strategies import matrices, opposing_pairs, square_matrices

F = Fraction


def q(*filas):
    return Matrix([[F(v) for v in fila] for fila in filas], Field.Q)


class TestPairs:
    def test_shapes_must_be_dual(self):
        with pytest.raises(DimensionMismatch):
            OpposingPair(q([1, 2]), q([1, 2]))

    def test_fields_must_agree(self):
        with pytest.raises(KindMismatch):
            OpposingPair(q([1]), Matrix([[I]]))

    def test_composition_reverses_second_component(self):
        p = OpposingPair(q([1, 2]), q([3], [4]))
        r = OpposingPair(q([5], [6]), q([7, 8]))
        c = pair_compose(p, r)
        assert c.fwd == q([17])
        assert c.bwd == q([7 * 3 + 8 * 4])

    @given(opposing_pairs())
    def test_dagger_swaps(self, p):
        assert pair_dagger(pair_dagger(p)) == p
        assert pair_dagger(p).fwd == p.bwd


class TestOpposingDrazin:
    def test_identity_pair(self):
        res = opposing_drazin(OpposingPair.identity(2, Field.Q))
        assert res.f_over_g == Matrix.identity(2)
        assert res.index == 0

    @pytest.mark.parametrize('n', [
        q([0, 1], [0, 0]),
        q([0, 1, 0], [0, 0, 1], [0, 0, 0]),
    ])
    def test_nilpotent_pair_has_zero_inverse(self, n):
        res = opposing_drazin(OpposingPair(n, n))
        cero = Matrix.zeros(n.rows, n.cols)
        assert res.f_over_g == res.g_over_f == cero
        report = verify_opposing(n, n, cero, cero)
        assert report.all_pass
        assert report.axioms['DV1'].k == drazin_index(n @ n) == res.index

    @given(opposing_pairs(Field.Q))
    def test_axioms_and_index(self, p):
        res = opposing_drazin(p)
        report = verify_opposing(p.fwd, p.bwd, res.f_over_g, res.g_over_f)
        assert report.all_pass
        assert report.minimal_index == res.index

    @given(opposing_pairs(Field.QI))
    def test_products_recover_endomorphism_inverses(self, p):
        res = opposing_drazin(p)
        assert drazin_inverse(p.fwd @ p.bwd).inverse == res.g_over_f @ res.f_over_g
        assert drazin_inverse(p.bwd @ p.fwd).inverse == res.f_over_g @ res.g_over_f

    @given(opposing_pairs(Field.Q))
    def test_index_formula(self, p):
        res = opposing_drazin(p)
        esperado = max(drazin_inverse(p.fwd @ p.bwd).index, drazin_inverse(p.bwd @ p.fwd).index)
        assert res.index == esperado


class TestRecovery:
    @given(square_matrices(Field.Q))
    def test_endomorphism_with_identity(self, x):
        assert recover_endomorphism_drazin(x) == drazin_inverse(x).inverse

    @given(matrices(Field.QI))
    def test_adjoint_pair_gives_dagger_drazin(self, f):
        for mode in DaggerMode:
            res = opposing_drazin(adjoint_pair(f, mode))
            f_p = dagger_drazin(f, mode)
            assert res.f_over_g == f_p.inverse
            assert res.g_over_f == dagger(f_p.inverse, mode)
            assert res.index == f_p.index

    def test_isotropic_row(self):
        f = Matrix([[I, 1]])
        res = opposing_drazin(adjoint_pair(f, DaggerMode.TRANSPOSE))
        assert res.f_over_g == Matrix.zeros(2, 1, Field.QI)
        assert res.index == 2


class TestCofree:
    @given(opposing_pairs(Field.Q))
    def test_equivalence(self, p):
        registro = cofree_equivalence(p)
        assert registro.agree and registro.indices_match
        assert registro.dagger_drazin == registro.opposing.as_pair()

    @given(opposing_pairs(Field.QI))
    def test_pair_dagger_drazin_axioms(self, p):
        inversa = cofree_equivalence(p).dagger_drazin
        report = verify_dagger_drazin(p, inversa, category=PairCategory())
        assert report.all_pass

    @given(square_matrices(Field.Q), square_matrices(Field.Q))
    def test_endo_pairs_componentwise(self, x, y):
        if x.shape != y.shape:
            return
        e = OpposingPair(x, y)
        inversa, index = pair_drazin_endo(e)
        assert inversa == OpposingPair(drazin_inverse(x).inverse, drazin_inverse(y).inverse)
        assert index == max(drazin_inverse(x).index, drazin_inverse(y).index)
        assert verify_drazin(e, inversa, category=PairCategory()).minimal_index == index
