"""
================================================================================
Inversas †-Drazin, †-Grupo y Moore-Penrose
================================================================================

Todo se construye desde el motor de Drazin aplicado a los mapas positivos
ff† y f†f:

    f^∂ = f†(ff†)^D = (f†f)^D f†
    ind^∂(f) = max{ind^D(ff†), ind^D(f†f)}

La existencia de Moore-Penrose se decide con f·f^∂·f = f.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from gidkit.drazin import certificar, drazin_inverse, group_inverse
from gidkit.errors import (
    DimensionMismatch, InternalCheckFailure, NoDaggerGroupInverse, NoGroupInverse,
    NotSelfAdjoint
)
from gidkit.matrix import DaggerMode, Matrix, dagger, equal, rank
from gidkit.verifier import verify_dagger_drazin, verify_dagger_group, verify_mp

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DaggerDrazinResult:
    inverse: Matrix
    index: int
    mode: DaggerMode


@dataclass(frozen=True)
class MoorePenroseResult:
    inverse: Optional[Matrix]
    witness: Optional[Matrix] = None

    @property
    def exists(self) -> bool:
        return self.inverse is not None


@dataclass(frozen=True)
class SelfAdjointRecord:
    drazin: Matrix
    dagger_drazin: Matrix
    drazin_index: int
    dagger_index: int
    agree: bool
    self_adjoint: bool


# ================================================================================
# PREDICADOS
# ================================================================================

def is_partial_isometry(f: Matrix, mode: DaggerMode = DaggerMode.TRANSPOSE) -> bool:
    return equal(f @ dagger(f, mode) @ f, f)


def is_unitary(f: Matrix, mode: DaggerMode = DaggerMode.TRANSPOSE) -> bool:
    fd = dagger(f, mode)
    return (equal(f @ fd, Matrix.identity(f.rows, f.field))
            and equal(fd @ f, Matrix.identity(f.cols, f.field)))


def is_isomorphism(f: Matrix) -> bool:
    return f.is_square and rank(f) == f.rows


def is_dagger_idempotent(e: Matrix, mode: DaggerMode = DaggerMode.TRANSPOSE) -> bool:
    return e.is_square and equal(e @ e, e) and equal(dagger(e, mode), e)


def is_self_adjoint(x: Matrix, mode: DaggerMode = DaggerMode.TRANSPOSE) -> bool:
    return x.is_square and equal(dagger(x, mode), x)


def _chequear_casos_especiales(f: Matrix, res: DaggerDrazinResult) -> None:
    # Valores que la teoría predice para isomorfismos, unitarios,
    # isometrías parciales y †-idempotentes
    mode = res.mode
    fallas = []
    if is_isomorphism(f) and res.index != 0:
        fallas.append("isomorfismo con índice != 0")
    if is_partial_isometry(f, mode):
        if not equal(res.inverse, dagger(f, mode)) or res.index > 1:
            fallas.append("isometría parcial con f^∂ != f†")
        if is_unitary(f, mode) and res.index != 0:
            fallas.append("unitario con índice != 0")
    if is_dagger_idempotent(f, mode) and not equal(res.inverse, f):
        fallas.append("†-idempotente con e^∂ != e")
    if fallas:
        detalle = f"Casos especiales inconsistentes: {fallas}"
        if f.field.exact:
            raise InternalCheckFailure(detalle)
        logger.warning(detalle)


# ================================================================================
# †-DRAZIN
# ================================================================================

def dagger_drazin(f: Matrix, mode: DaggerMode = DaggerMode.TRANSPOSE) -> DaggerDrazinResult:
    """Inversa †-Drazin f^∂ con su índice, verificada contra [D†.1]-[D†.4]"""
    fd = dagger(f, mode)
    positivo_a = drazin_inverse(f @ fd)
    positivo_b = drazin_inverse(fd @ f)

    izquierda = fd @ positivo_a.inverse
    derecha = positivo_b.inverse @ fd
    if not equal(izquierda, derecha):
        detalle = "Las dos fórmulas de f^∂ no coinciden"
        if f.field.exact:
            raise InternalCheckFailure(detalle)
        logger.warning(detalle)

    index = max(positivo_a.index, positivo_b.index)
    logger.debug(f"ind(ff†)={positivo_a.index}, ind(f†f)={positivo_b.index}")

    # El índice se confirma evaluando [D†.1] directamente, no con la fórmula
    report = verify_dagger_drazin(f, izquierda, mode, k_max=max(f.rows, f.cols))
    certificar(report, f.field.exact, index, "Inversa †-Drazin")

    resultado = DaggerDrazinResult(izquierda, index, mode)
    _chequear_casos_especiales(f, resultado)
    return resultado


def dagger_group_inverse(f: Matrix, mode: DaggerMode = DaggerMode.TRANSPOSE) -> Matrix:
    """†-inversa de grupo: existe si y sólo si ind^∂(f) <= 1"""
    resultado = dagger_drazin(f, mode)
    if resultado.index > 1:
        raise NoDaggerGroupInverse(resultado.index)
    report = verify_dagger_group(f, resultado.inverse, mode)
    certificar(report, f.field.exact, None, "†-Inversa de grupo")
    return resultado.inverse


def positive_group_inverses(f: Matrix, mode: DaggerMode = DaggerMode.TRANSPOSE
                            ) -> Optional[Tuple[Matrix, Matrix]]:
    """Inversas de grupo de ff† y f†f, o None si alguna no existe"""
    fd = dagger(f, mode)
    try:
        return group_inverse(f @ fd), group_inverse(fd @ f)
    except NoGroupInverse as e:
        logger.info(f"Un mapa positivo no tiene inversa de grupo: {e}")
        return None


# ================================================================================
# MOORE-PENROSE
# ================================================================================

def moore_penrose(f: Matrix, mode: DaggerMode = DaggerMode.TRANSPOSE) -> MoorePenroseResult:
    """f° existe si y sólo si f^∂∂ = f f^∂ f = f, y entonces f° = f^∂"""
    resultado = dagger_drazin(f, mode)
    testigo = f @ resultado.inverse @ f
    if not equal(testigo, f):
        logger.info(f"Sin inversa de Moore-Penrose para {f.rows}×{f.cols} con {mode.value}")
        return MoorePenroseResult(None, testigo)

    report = verify_mp(f, resultado.inverse, mode)
    certificar(report, f.field.exact, None, "Inversa de Moore-Penrose")
    if resultado.index > 1:
        detalle = f"Moore-Penrose con índice †-Drazin {resultado.index} > 1"
        if f.field.exact:
            raise InternalCheckFailure(detalle)
        logger.warning(detalle)
    return MoorePenroseResult(resultado.inverse)


# ================================================================================
# PUENTE AUTOADJUNTO
# ================================================================================

def self_adjoint_bridge(x: Matrix, mode: DaggerMode = DaggerMode.TRANSPOSE) -> SelfAdjointRecord:
    """Para x autoadjunto: x^D = x^∂, ambos autoadjuntos"""
    if not x.is_square:
        raise DimensionMismatch(f"Se esperaba una matriz cuadrada, se recibió {x.rows}×{x.cols}")
    if not is_self_adjoint(x, mode):
        raise NotSelfAdjoint(f"La matriz no es autoadjunta respecto de {mode.value}")

    x_d = drazin_inverse(x)
    x_p = dagger_drazin(x, mode)
    coinciden = equal(x_d.inverse, x_p.inverse)
    autoadjuntas = is_self_adjoint(x_d.inverse, mode) and is_self_adjoint(x_p.inverse, mode)
    if x.field.exact and not (coinciden and autoadjuntas):
        raise InternalCheckFailure("x^D y x^∂ difieren para un x autoadjunto")
    return SelfAdjointRecord(x_d.inverse, x_p.inverse, x_d.index, x_p.index, coinciden, autoadjuntas)
