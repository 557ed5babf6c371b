"""
================================================================================
Inversas de Drazin e Inversas de Grupo
================================================================================

La construcción usa la recursión de Cline sobre factorizaciones de rango
completo: si A = F·G entonces A^D = F·((G·F)^D)²·G. Sólo necesita rango y
eliminación racional, así que es exacta en Q y en Qi. El índice se calcula
por separado con la cadena de rangos y toda salida pasa por el verificador
de [D.1]-[D.3] antes de devolverse.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from gidkit.errors import DimensionMismatch, InternalCheckFailure, NoGroupInverse
from gidkit.matrix import (
    Matrix, descent, full_rank_factorization, inverse, matpow, rank, solve
)
from gidkit.verifier import VerificationReport, verify_drazin

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DrazinResult:
    inverse: Matrix
    index: int


def _exigir_cuadrada(a: Matrix) -> None:
    if not a.is_square:
        raise DimensionMismatch(f"Se esperaba una matriz cuadrada, se recibió {a.rows}×{a.cols}")


def certificar(report: VerificationReport, exacta: bool, index: Optional[int], que: str) -> None:
    """Una construcción exacta que no pasa sus axiomas es un error interno"""
    ok = report.all_pass and (index is None or report.minimal_index == index)
    if ok:
        return
    detalle = f"{que}: fallan {report.failed()}, índice {report.minimal_index} (esperado {index})"
    if exacta:
        raise InternalCheckFailure(detalle)
    logger.warning(detalle)
    report.warnings.append(detalle)


# ================================================================================
# ÍNDICE
# ================================================================================

def drazin_index(a: Matrix) -> int:
    """Menor k con rank(A^{k+1}) = rank(A^k); siempre <= n"""
    _exigir_cuadrada(a)
    return descent(a)


# ================================================================================
# CONSTRUCCIÓN
# ================================================================================

def _cline(a: Matrix, profundidad: int = 0) -> Matrix:
    n = a.rows
    if n == 0:
        return a
    r = rank(a)
    logger.debug(f"Cline nivel {profundidad}: {n}×{n} de rango {r}")
    if r == n:
        return inverse(a)
    if r == 0:
        return Matrix.zeros(n, n, a.field)
    f, g = full_rank_factorization(a)
    b_d = _cline(g @ f, profundidad + 1)
    return f @ b_d @ b_d @ g


def drazin_inverse(a: Matrix) -> DrazinResult:
    """Inversa de Drazin verificada, con su índice"""
    _exigir_cuadrada(a)
    a_d = _cline(a)
    index = drazin_index(a)
    report = verify_drazin(a, a_d, k_max=a.rows)
    certificar(report, a.field.exact, index, "Inversa de Drazin")
    return DrazinResult(a_d, index)


def drazin_via_solve(a: Matrix) -> Matrix:
    """
    Construcción independiente: A^D = A^k·S·A^k con S cualquier solución de
    A^{2k+1}·S = A^k, k = índice. Sirve de oráculo para la recursión de Cline.
    """
    _exigir_cuadrada(a)
    k = drazin_index(a)
    a_k = matpow(a, k)
    s = solve(matpow(a, 2 * k + 1), a_k)
    return a_k @ s @ a_k


def group_inverse(a: Matrix) -> Matrix:
    """Inversa de grupo: existe si y sólo si el índice de Drazin es <= 1"""
    resultado = drazin_inverse(a)
    if resultado.index > 1:
        raise NoGroupInverse(resultado.index)
    return resultado.inverse


def core_nilpotent_split(a: Matrix) -> Tuple[Matrix, Matrix]:
    """A = C + N con C = A·A^D·A (parte núcleo) y N nilpotente de orden = índice"""
    a_d = drazin_inverse(a).inverse
    core = a @ a_d @ a
    return core, a - core
