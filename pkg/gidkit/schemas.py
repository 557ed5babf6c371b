"""
================================================================================
Esquemas JSON de entrada y salida
================================================================================

Codificaciones:
    Racional           "p/q"
    Racional gaussiano {"re": "p/q", "im": "p/q"}
    Complejo C64       {"re": x, "im": y}
    Matriz             {"rows": n, "cols": m, "field": "Q"|"Qi"|"C64", "entries": [[...], ...]}
    Inyección parcial  {"dom": n, "cod": m, "pairs": [[x, y], ...]}
    Par opuesto        {"fwd": Matriz, "bwd": Matriz}
"""

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field as Campo, ValidationError, model_validator

from gidkit import scalar
from gidkit.errors import GidkitError, InputError
from gidkit.matrix import Matrix
from gidkit.opposing import OpposingPair
from gidkit.pinj import PartialInjection
from gidkit.scalar import Field, GaussianRational, Scalar

logger = logging.getLogger(__name__)


# ================================================================================
# ESCALARES
# ================================================================================

def _racional(valor: Any) -> Fraction:
    if isinstance(valor, bool) or isinstance(valor, float):
        raise InputError(f"Los racionales se escriben como texto \"p/q\", no {valor!r}")
    if isinstance(valor, int):
        return Fraction(valor)
    if isinstance(valor, str):
        return scalar.parse_rational(valor)
    raise InputError(f"Racional inválido: {valor!r}")


def _numero(valor: Any) -> float:
    if isinstance(valor, bool) or not isinstance(valor, (int, float)):
        raise InputError(f"Se esperaba un número, se recibió {valor!r}")
    return float(valor)


class _ParteRealImaginaria(BaseModel):
    # "re" obligatoria, "im" opcional; cualquier otra clave es un error
    model_config = ConfigDict(extra='forbid')

    re: Any
    im: Any = 0


def _partes(valor: dict) -> _ParteRealImaginaria:
    return _validar(_ParteRealImaginaria, valor, "Entrada escalar")


def parse_scalar(valor: Any, field: Field) -> Scalar:
    """Lee una entrada JSON en el cuerpo indicado"""
    if field is Field.Q:
        return _racional(valor)
    if field is Field.QI:
        if isinstance(valor, dict):
            partes = _partes(valor)
            return GaussianRational(_racional(partes.re), _racional(partes.im))
        return GaussianRational(_racional(valor))
    if isinstance(valor, dict):
        partes = _partes(valor)
        z = complex(_numero(partes.re), _numero(partes.im))
    else:
        z = complex(_numero(valor))
    return scalar.coerce(z, Field.C64)


def render_scalar(valor: Scalar) -> Any:
    """Forma canónica de salida"""
    campo = scalar.kind_of(valor)
    if campo is Field.Q:
        return scalar.render_rational(valor)
    if campo is Field.QI:
        return {"re": scalar.render_rational(valor.re), "im": scalar.render_rational(valor.im)}
    z = complex(valor)
    return {"re": z.real, "im": z.imag}


# ================================================================================
# MODELOS
# ================================================================================

class MatrixSchema(BaseModel):
    model_config = ConfigDict(extra='forbid')

    rows: int = Campo(ge=0)
    cols: int = Campo(ge=0)
    field: Optional[Literal['Q', 'Qi', 'C64']] = None
    entries: List[List[Any]]

    @model_validator(mode='after')
    def _forma(self):
        if len(self.entries) != self.rows or any(len(f) != self.cols for f in self.entries):
            raise ValueError(f"entries no es una matriz {self.rows}×{self.cols}")
        return self

    def to_matrix(self, field: Optional[Field] = None) -> Matrix:
        """
        Sin "field" en el JSON las entradas se leen directamente en el cuerpo
        pedido (Q por defecto); si ambos están presentes se convierte
        """
        campo = Field(self.field) if self.field else (field or Field.Q)
        datos = [[parse_scalar(v, campo) for v in fila] for fila in self.entries]
        m = Matrix(datos, campo, shape=(self.rows, self.cols))
        return m if field is None or field is campo else m.to_field(field)

    @classmethod
    def from_matrix(cls, m: Matrix) -> 'MatrixSchema':
        return cls(rows=m.rows, cols=m.cols, field=m.field.value,
                   entries=[[render_scalar(v) for v in fila] for fila in m.to_lists()])


class PartialInjectionSchema(BaseModel):
    model_config = ConfigDict(extra='forbid')

    dom: int = Campo(ge=0)
    cod: int = Campo(ge=0)
    pairs: List[Tuple[int, int]] = Campo(default_factory=list)

    def to_pinj(self) -> PartialInjection:
        return PartialInjection(self.dom, self.cod, frozenset(self.pairs))

    @classmethod
    def from_pinj(cls, f: PartialInjection) -> 'PartialInjectionSchema':
        return cls(dom=f.dom_size, cod=f.cod_size, pairs=list(f.sorted_pairs()))


class OpposingPairSchema(BaseModel):
    model_config = ConfigDict(extra='forbid')

    fwd: MatrixSchema
    bwd: MatrixSchema

    def to_pair(self) -> OpposingPair:
        return OpposingPair(self.fwd.to_matrix(), self.bwd.to_matrix())

    @classmethod
    def from_pair(cls, p: OpposingPair) -> 'OpposingPairSchema':
        return cls(fwd=MatrixSchema.from_matrix(p.fwd), bwd=MatrixSchema.from_matrix(p.bwd))


# ================================================================================
# CARGA Y VOLCADO
# ================================================================================

def load_json(ruta: Union[str, Path]) -> Any:
    try:
        with open(ruta, encoding='utf-8') as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise InputError(f"JSON mal formado en {ruta}: {e}")
    except OSError as e:
        raise InputError(f"No se pudo leer {ruta}: {e}")


def _validar(modelo, datos: Any, que: str):
    try:
        return modelo.model_validate(datos)
    except ValidationError as e:
        raise InputError(f"{que} inválida: {e.errors()[0].get('msg', e)}")


def parse_matrix(datos: Any, field: Optional[Field] = None) -> Matrix:
    """Matriz desde JSON en el cuerpo indicado, si lo hay"""
    try:
        return _validar(MatrixSchema, datos, "Matriz").to_matrix(field)
    except InputError:
        raise
    except GidkitError as e:
        raise InputError(f"Matriz inválida: {e}")


def parse_pinj(datos: Any) -> PartialInjection:
    try:
        return _validar(PartialInjectionSchema, datos, "Inyección parcial").to_pinj()
    except InputError:
        raise
    except GidkitError as e:
        raise InputError(f"Inyección parcial inválida: {e}")


def parse_pair(datos: Any, field: Optional[Field] = None) -> OpposingPair:
    try:
        modelo = _validar(OpposingPairSchema, datos, "Par opuesto")
        return OpposingPair(modelo.fwd.to_matrix(field), modelo.bwd.to_matrix(field))
    except InputError:
        raise
    except GidkitError as e:
        raise InputError(f"Par opuesto inválido: {e}")


def matrix_to_json(m: Matrix) -> Dict[str, Any]:
    return MatrixSchema.from_matrix(m).model_dump()


def pinj_to_json(f: PartialInjection) -> Dict[str, Any]:
    datos = PartialInjectionSchema.from_pinj(f).model_dump()
    datos['pairs'] = [list(p) for p in datos['pairs']]
    return datos


def pair_to_json(p: OpposingPair) -> Dict[str, Any]:
    return OpposingPairSchema.from_pair(p).model_dump()


def dump(datos: Any) -> str:
    """Salida determinista: claves ordenadas"""
    return json.dumps(datos, indent=2, sort_keys=True, ensure_ascii=False)
