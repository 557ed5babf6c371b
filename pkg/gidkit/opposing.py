"""
================================================================================
Pares Opuestos y la Categoría Dagger Cofree MAT^⇄
================================================================================

Un par opuesto (f, g): A → B consta de f: A → B y g: B → A. En MAT^⇄ la
composición es (f,g)(h,k) = (fh, kg), la identidad (1, 1) y el dagger
(f,g)† = (g,f). La inversa de Drazin del par se obtiene de los endomorfismos
fg y gf:

    f^{D/g} = g(fg)^D = (gf)^D g        g^{D/f} = f(gf)^D = (fg)^D f
    ind^D(f,g) = max{ind^D(fg), ind^D(gf)}
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from gidkit.drazin import certificar, drazin_inverse
from gidkit.errors import DimensionMismatch, InternalCheckFailure, KindMismatch
from gidkit.matrix import DaggerMode, Matrix, dagger, equal, first_difference
from gidkit.verifier import verify_dagger_drazin, verify_drazin, verify_opposing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OpposingPair:
    fwd: Matrix
    bwd: Matrix

    def __post_init__(self):
        if self.fwd.field is not self.bwd.field:
            raise KindMismatch("Las componentes del par son de cuerpos distintos")
        if self.fwd.shape != (self.bwd.cols, self.bwd.rows):
            raise DimensionMismatch(
                f"Par no opuesto: f es {self.fwd.rows}×{self.fwd.cols}, "
                f"g es {self.bwd.rows}×{self.bwd.cols}"
            )

    @classmethod
    def identity(cls, n: int, field) -> 'OpposingPair':
        return cls(Matrix.identity(n, field), Matrix.identity(n, field))

    @property
    def is_endo(self) -> bool:
        return self.fwd.is_square


@dataclass(frozen=True)
class OpposingDrazinResult:
    f_over_g: Matrix
    g_over_f: Matrix
    index: int

    def as_pair(self) -> OpposingPair:
        return OpposingPair(self.f_over_g, self.g_over_f)


@dataclass(frozen=True)
class CofreeRecord:
    opposing: OpposingDrazinResult
    dagger_drazin: OpposingPair
    dagger_index: int
    agree: bool
    indices_match: bool


# ================================================================================
# ARITMÉTICA DE PARES
# ================================================================================

def pair_compose(p: OpposingPair, q: OpposingPair) -> OpposingPair:
    """(f,g)(h,k) = (fh, kg)"""
    if p.fwd.cols != q.fwd.rows:
        raise DimensionMismatch(f"No se puede componer {p.fwd.shape} con {q.fwd.shape}")
    return OpposingPair(p.fwd @ q.fwd, q.bwd @ p.bwd)


def pair_dagger(p: OpposingPair) -> OpposingPair:
    """(f,g)† = (g,f)"""
    return OpposingPair(p.bwd, p.fwd)


class PairCategory:
    """MAT^⇄ para el motor de verificación; igualdad componente a componente"""

    def __init__(self, tol: Optional[float] = None):
        self.tol = tol

    def compose(self, p, q):
        return pair_compose(p, q)

    def dagger(self, p):
        return pair_dagger(p)

    def dom(self, p):
        return p.fwd.rows

    def cod(self, p):
        return p.fwd.cols

    def identity_dom(self, p):
        return OpposingPair.identity(p.fwd.rows, p.fwd.field)

    def identity_cod(self, p):
        return OpposingPair.identity(p.fwd.cols, p.fwd.field)

    def equal(self, p, q):
        return equal(p.fwd, q.fwd, self.tol) and equal(p.bwd, q.bwd, self.tol)

    def first_difference(self, p, q):
        pos = first_difference(p.fwd, q.fwd, self.tol)
        if pos is not None:
            return ('fwd', pos)
        pos = first_difference(p.bwd, q.bwd, self.tol)
        if pos is not None:
            return ('bwd', pos)
        return None

    def is_exact(self, p) -> bool:
        return p.fwd.field.exact


def _exigir_igualdad(a: Matrix, b: Matrix, detalle: str) -> None:
    if equal(a, b):
        return
    if a.field.exact:
        raise InternalCheckFailure(detalle)
    logger.warning(detalle)


# ================================================================================
# DRAZIN DE PARES OPUESTOS
# ================================================================================

def opposing_drazin(p: OpposingPair) -> OpposingDrazinResult:
    """(f^{D/g}, g^{D/f}) verificada contra [DV.1]-[DV.3]"""
    f, g = p.fwd, p.bwd
    fg = drazin_inverse(f @ g)
    gf = drazin_inverse(g @ f)

    f_over_g = g @ fg.inverse
    g_over_f = f @ gf.inverse
    _exigir_igualdad(f_over_g, gf.inverse @ g, "g(fg)^D != (gf)^D g")
    _exigir_igualdad(g_over_f, fg.inverse @ f, "f(gf)^D != (fg)^D f")
    _exigir_igualdad(fg.inverse, g_over_f @ f_over_g, "(fg)^D != g^{D/f} f^{D/g}")
    _exigir_igualdad(gf.inverse, f_over_g @ g_over_f, "(gf)^D != f^{D/g} g^{D/f}")

    index = max(fg.index, gf.index)
    report = verify_opposing(f, g, f_over_g, g_over_f, k_max=max(f.rows, f.cols))
    certificar(report, f.field.exact, index, "Drazin de par opuesto")
    return OpposingDrazinResult(f_over_g, g_over_f, index)


def recover_endomorphism_drazin(x: Matrix) -> Matrix:
    """x^D como la inversa de x sobre la identidad en el par (x, 1)"""
    if not x.is_square:
        raise DimensionMismatch(f"Se esperaba una matriz cuadrada, se recibió {x.rows}×{x.cols}")
    return opposing_drazin(OpposingPair(x, Matrix.identity(x.rows, x.field))).f_over_g


def adjoint_pair(f: Matrix, mode: DaggerMode = DaggerMode.TRANSPOSE) -> OpposingPair:
    """El par opuesto adjunto (f, f†)"""
    return OpposingPair(f, dagger(f, mode))


# ================================================================================
# †-DRAZIN EN MAT^⇄
# ================================================================================

def pair_drazin_endo(e: OpposingPair) -> Tuple[OpposingPair, int]:
    """
    Inversa de Drazin de un endomorfismo (x, y) de MAT^⇄: como
    (x,y)^n = (x^n, y^n), es (x^D, y^D) con índice max{ind x, ind y}.
    """
    if not e.is_endo:
        raise DimensionMismatch("Se esperaba un endomorfismo de MAT^⇄")
    dx, dy = drazin_inverse(e.fwd), drazin_inverse(e.bwd)
    inversa = OpposingPair(dx.inverse, dy.inverse)
    index = max(dx.index, dy.index)
    report = verify_drazin(e, inversa, k_max=e.fwd.rows, category=PairCategory())
    certificar(report, e.fwd.field.exact, index, "Drazin en MAT^⇄")
    return inversa, index


def pair_dagger_drazin(p: OpposingPair) -> Tuple[OpposingPair, int]:
    """(f,g)^∂ = (f,g)†((f,g)(f,g)†)^D calculada con aritmética de pares"""
    cat = PairCategory()
    pd = pair_dagger(p)
    positivo_a, ind_a = pair_drazin_endo(pair_compose(p, pd))
    positivo_b, ind_b = pair_drazin_endo(pair_compose(pd, p))
    inversa = pair_compose(pd, positivo_a)
    if not cat.equal(inversa, pair_compose(positivo_b, pd)):
        raise InternalCheckFailure("Las dos fórmulas de (f,g)^∂ no coinciden en MAT^⇄")
    index = max(ind_a, ind_b)
    report = verify_dagger_drazin(p, inversa, k_max=max(p.fwd.rows, p.fwd.cols), category=cat)
    certificar(report, p.fwd.field.exact, index, "†-Drazin en MAT^⇄")
    return inversa, index


def cofree_equivalence(p: OpposingPair) -> CofreeRecord:
    """(f,g)^D en MAT coincide con (f,g)^∂ en MAT^⇄, con el mismo índice"""
    opuesta = opposing_drazin(p)
    inversa, index = pair_dagger_drazin(p)
    coinciden = PairCategory().equal(opuesta.as_pair(), inversa)
    indices = opuesta.index == index
    if p.fwd.field.exact and not (coinciden and indices):
        raise InternalCheckFailure("MAT y MAT^⇄ no coinciden para el par")
    logger.debug(f"Equivalencia cofree: índice {index}")
    return CofreeRecord(opuesta, inversa, index, coinciden, indices)
