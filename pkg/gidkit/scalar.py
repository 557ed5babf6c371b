"""
================================================================================
Escalares - Cuerpos con involución
Incluye: racionales exactos (Q), racionales gaussianos (Qi), complejos C64
================================================================================

Los racionales se guardan siempre en forma canónica (fracción reducida y
denominador positivo), por lo que la igualdad de escalares exactos es
igualdad estructural. La tolerancia del modo C64 no es propiedad del escalar
sino del contexto de comparación (ver `gidkit.matrix`).
"""

import cmath
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Union

from gidkit.errors import DivisionByZero, InvalidScalar, KindMismatch

logger = logging.getLogger(__name__)


class Field(Enum):
    Q = 'Q'
    QI = 'Qi'
    C64 = 'C64'

    @property
    def exact(self) -> bool:
        return self is not Field.C64


class Involution(Enum):
    IDENTITY = 'identity'
    CONJUGATION = 'complex-conjugation'


# ================================================================================
# RACIONALES GAUSSIANOS
# ================================================================================

def _a_fraccion(valor: Any) -> Fraction:
    if isinstance(valor, Fraction):
        return valor
    if isinstance(valor, bool):
        raise InvalidScalar(f"Valor booleano no admitido: {valor!r}")
    if isinstance(valor, int):
        return Fraction(valor)
    if isinstance(valor, str):
        return parse_rational(valor)
    raise InvalidScalar(f"No es un racional exacto: {valor!r}")


@dataclass(frozen=True, eq=False)
class GaussianRational:
    """Elemento re + im·i de Q(i)"""
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 're', _a_fraccion(self.re))
        object.__setattr__(self, 'im', _a_fraccion(self.im))

    @staticmethod
    def _promover(otro: Any) -> 'GaussianRational':
        if isinstance(otro, GaussianRational):
            return otro
        if isinstance(otro, (int, Fraction)) and not isinstance(otro, bool):
            return GaussianRational(Fraction(otro))
        raise KindMismatch(f"No se puede operar Qi con {type(otro).__name__}")

    def __add__(self, otro):
        o = self._promover(otro)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, otro):
        o = self._promover(otro)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, otro):
        return self._promover(otro) - self

    def __mul__(self, otro):
        o = self._promover(otro)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __truediv__(self, otro):
        o = self._promover(otro)
        norma = o.re * o.re + o.im * o.im
        if norma == 0:
            raise DivisionByZero("División por cero en Qi")
        num = self * o.conjugate()
        return GaussianRational(num.re / norma, num.im / norma)

    def __rtruediv__(self, otro):
        return self._promover(otro) / self

    def conjugate(self) -> 'GaussianRational':
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, otro):
        if isinstance(otro, GaussianRational):
            return self.re == otro.re and self.im == otro.im
        if isinstance(otro, (int, Fraction)) and not isinstance(otro, bool):
            return self.im == 0 and self.re == otro
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({render_rational(self.re)}, {render_rational(self.im)})"

    def __str__(self):
        if self.im == 0:
            return render_rational(self.re)
        signo = '+' if self.im > 0 else '-'
        return f"{render_rational(self.re)}{signo}{render_rational(abs(self.im))}i"


I = GaussianRational(0, 1)

Scalar = Union[Fraction, GaussianRational, complex]


# ================================================================================
# CLASIFICACIÓN Y CONVERSIÓN
# ================================================================================

def kind_of(a: Any) -> Field:
    """Cuerpo al que pertenece un escalar"""
    if isinstance(a, bool):
        raise InvalidScalar(f"Valor booleano no admitido: {a!r}")
    if isinstance(a, (int, Fraction)):
        return Field.Q
    if isinstance(a, GaussianRational):
        return Field.QI
    if isinstance(a, (float, complex)):
        return Field.C64
    raise InvalidScalar(f"Tipo de escalar desconocido: {type(a).__name__}")


def infer_field(valores) -> Field:
    """El cuerpo más pequeño que contiene a todos los valores"""
    kinds = {kind_of(v) for v in valores}
    if Field.C64 in kinds:
        return Field.C64
    if Field.QI in kinds:
        return Field.QI
    return Field.Q


def coerce(valor: Any, field: Field) -> Scalar:
    """Convierte un valor al cuerpo indicado (con la inclusión Q ⊂ Qi ⊂ C64)"""
    origen = kind_of(valor) if not isinstance(valor, str) else Field.Q
    if field is Field.Q:
        if origen is Field.Q:
            return _a_fraccion(valor)
        if origen is Field.QI and valor.im == 0:
            return valor.re
        raise KindMismatch(f"{valor!r} no pertenece a Q")
    if field is Field.QI:
        if origen is Field.Q:
            return GaussianRational(_a_fraccion(valor))
        if origen is Field.QI:
            return valor
        raise KindMismatch(f"{valor!r} es de coma flotante, no de Qi")
    if origen is Field.Q:
        z = complex(float(_a_fraccion(valor)))
    else:
        z = complex(valor)
    if not cmath.isfinite(z):
        raise InvalidScalar(f"Valor no finito en C64: {z!r}")
    return z


def zero(field: Field) -> Scalar:
    return coerce(0, field)


def one(field: Field) -> Scalar:
    return coerce(1, field)


def parse_rational(texto: str) -> Fraction:
    """Lee un racional en formato "p/q" (o entero "p")"""
    try:
        return Fraction(texto.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidScalar(f"Racional inválido {texto!r}: {e}")


def render_rational(q: Fraction) -> str:
    """Forma canónica "p/q", o "p" cuando q = 1"""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ================================================================================
# OPERACIONES DE CUERPO
# ================================================================================

def _mismo_cuerpo(a: Scalar, b: Scalar) -> Field:
    ka, kb = kind_of(a), kind_of(b)
    if ka is not kb:
        raise KindMismatch(f"Escalares de cuerpos distintos: {ka.value} y {kb.value}")
    return ka


def add(a: Scalar, b: Scalar) -> Scalar:
    _mismo_cuerpo(a, b)
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    _mismo_cuerpo(a, b)
    return a - b


def mul(a: Scalar, b: Scalar) -> Scalar:
    _mismo_cuerpo(a, b)
    return a * b


def div(a: Scalar, b: Scalar) -> Scalar:
    _mismo_cuerpo(a, b)
    if is_zero(b):
        raise DivisionByZero(f"División por cero: {a} / 0")
    return a / b


def neg(a: Scalar) -> Scalar:
    kind_of(a)
    return -a


def inv(a: Scalar) -> Scalar:
    return div(one(kind_of(a)), a)


def is_zero(a: Scalar) -> bool:
    kind_of(a)
    return a == 0


def eq(a: Scalar, b: Scalar) -> bool:
    _mismo_cuerpo(a, b)
    return a == b


def conjugate(a: Scalar, involution: Involution = Involution.CONJUGATION) -> Scalar:
    """Aplica la involución; en Q la conjugación es la identidad"""
    campo = kind_of(a)
    if involution is Involution.IDENTITY or campo is Field.Q:
        return a
    return a.conjugate()
