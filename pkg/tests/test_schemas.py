from fractions import Fraction

import pytest
from hypothesis import given

from gidkit import schemas
from gidkit.errors import InputError, InvalidScalar
from gidkit.matrix import Matrix
from gidkit.opposing import OpposingPair
from gidkit.pinj import PartialInjection
from gidkit.scalar import Field, GaussianRational
from tests.strategies import matrices, partial_injections

F = Fraction


class TestScalars:
    def test_rational_text(self):
        assert schemas.parse_scalar("-3/6", Field.Q) == F(-1, 2)
        assert schemas.parse_scalar(4, Field.Q) == F(4)
        assert schemas.render_scalar(F(-1, 2)) == "-1/2"
        assert schemas.render_scalar(F(3)) == "3"

    @pytest.mark.parametrize('valor', [0.5, True, None, [1], "1/0", "uno"])
    def test_rejects_non_rational(self, valor):
        with pytest.raises((InputError, InvalidScalar)):
            schemas.parse_scalar(valor, Field.Q)

    def test_gaussian(self):
        valor = schemas.parse_scalar({"re": "1/2", "im": "-1"}, Field.QI)
        assert valor == GaussianRational(F(1, 2), F(-1))
        assert schemas.render_scalar(valor) == {"re": "1/2", "im": "-1"}
        assert schemas.parse_scalar("2", Field.QI) == GaussianRational(F(2))

    def test_float_complex(self):
        assert schemas.parse_scalar({"re": 1.5, "im": -2}, Field.C64) == complex(1.5, -2)
        assert schemas.parse_scalar(3, Field.C64) == complex(3)
        with pytest.raises(InputError):
            schemas.parse_scalar("3", Field.C64)

    @pytest.mark.parametrize('field', [Field.QI, Field.C64])
    @pytest.mark.parametrize('valor', [{"real": "5"}, {"re": "1", "imag": "2"}, {"im": "1"}, {}])
    def test_unknown_or_missing_parts_rejected(self, field, valor):
        if field is Field.C64:
            valor = {k: float(v) for k, v in valor.items()}
        with pytest.raises(InputError):
            schemas.parse_scalar(valor, field)

    def test_imaginary_part_defaults_to_zero(self):
        assert schemas.parse_scalar({"re": "3"}, Field.QI) == GaussianRational(F(3))
        assert schemas.parse_scalar({"re": 3.0}, Field.C64) == complex(3)


class TestMatrix:
    def test_parse(self):
        m = schemas.parse_matrix({"rows": 2, "cols": 1, "entries": [["1/3"], ["2"]]})
        assert m == Matrix([[F(1, 3)], [F(2)]], Field.Q)

    def test_empty_matrix_keeps_shape(self):
        m = schemas.parse_matrix({"rows": 0, "cols": 3, "field": "Q", "entries": []})
        assert m.shape == (0, 3)

    def test_field_override(self):
        m = schemas.parse_matrix({"rows": 1, "cols": 1, "entries": [["2"]]}, Field.QI)
        assert m.field is Field.QI

    def test_entries_read_in_requested_field_when_file_has_none(self):
        datos = {"rows": 1, "cols": 2, "entries": [[{"re": "0", "im": "1"}, "1"]]}
        m = schemas.parse_matrix(datos, Field.QI)
        assert m == Matrix([[GaussianRational(0, 1), GaussianRational(1)]], Field.QI)
        with pytest.raises(InputError):
            schemas.parse_matrix(datos)

    def test_file_field_converted_to_requested(self):
        datos = {"rows": 1, "cols": 1, "field": "Q", "entries": [["1/2"]]}
        assert schemas.parse_matrix(datos, Field.C64) == Matrix([[0.5 + 0j]], Field.C64)

    def test_unknown_scalar_key_in_matrix(self):
        datos = {"rows": 1, "cols": 1, "field": "Qi", "entries": [[{"real": "5"}]]}
        with pytest.raises(InputError):
            schemas.parse_matrix(datos)

    def test_output_always_names_field(self):
        assert schemas.matrix_to_json(Matrix([[F(1)]], Field.Q))["field"] == "Q"

    @pytest.mark.parametrize('datos', [
        {"rows": 2, "cols": 2, "entries": [["1", "2"]]},
        {"rows": 1, "cols": 1, "field": "R", "entries": [["1"]]},
        {"rows": 1, "cols": 1, "entries": [["1"]], "extra": True},
        {"rows": -1, "cols": 1, "entries": []},
        [[1, 2]],
    ])
    def test_invalid(self, datos):
        with pytest.raises(InputError):
            schemas.parse_matrix(datos)

    @given(matrices(Field.QI))
    def test_output_reads_back(self, m):
        assert schemas.parse_matrix(schemas.matrix_to_json(m)) == m


class TestPinjAndPairs:
    def test_pinj(self):
        f = schemas.parse_pinj({"dom": 3, "cod": 2, "pairs": [[2, 0], [0, 1]]})
        assert f == PartialInjection(3, 2, frozenset({(2, 0), (0, 1)}))
        assert schemas.pinj_to_json(f) == {"dom": 3, "cod": 2, "pairs": [[0, 1], [2, 0]]}

    def test_invalid_pinj(self):
        with pytest.raises(InputError):
            schemas.parse_pinj({"dom": 1, "cod": 1, "pairs": [[0, 1]]})

    @given(partial_injections(endo=False))
    def test_pinj_reads_back(self, f):
        assert schemas.parse_pinj(schemas.pinj_to_json(f)) == f

    def test_pair(self):
        datos = {"fwd": {"rows": 1, "cols": 2, "entries": [["1", "0"]]},
                 "bwd": {"rows": 2, "cols": 1, "entries": [["0"], ["1"]]}}
        p = schemas.parse_pair(datos)
        assert isinstance(p, OpposingPair)
        assert schemas.parse_pair(schemas.pair_to_json(p)) == p

    def test_pair_in_requested_field(self):
        i = {"re": "0", "im": "1"}
        datos = {"fwd": {"rows": 1, "cols": 1, "entries": [[i]]},
                 "bwd": {"rows": 1, "cols": 1, "entries": [["1"]]}}
        p = schemas.parse_pair(datos, Field.QI)
        assert p.fwd.field is p.bwd.field is Field.QI

    def test_pair_with_wrong_shapes(self):
        datos = {"fwd": {"rows": 1, "cols": 2, "entries": [["1", "0"]]},
                 "bwd": {"rows": 1, "cols": 2, "entries": [["0", "1"]]}}
        with pytest.raises(InputError):
            schemas.parse_pair(datos)


class TestFiles:
    def test_malformed(self, tmp_path):
        ruta = tmp_path / 'x.json'
        ruta.write_text('{', encoding='utf-8')
        with pytest.raises(InputError):
            schemas.load_json(ruta)

    def test_missing(self, tmp_path):
        with pytest.raises(InputError):
            schemas.load_json(tmp_path / 'nada.json')

    def test_dump_is_sorted(self):
        assert schemas.dump({"b": 1, "a": "ñ"}) == '{\n  "a": "ñ",\n  "b": 1\n}'
