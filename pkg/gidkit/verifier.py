"""
================================================================================
Motor de Verificación de Axiomas
Familias: Drazin, Grupo, †-Drazin, condiciones laterales, †-Grupo,
Moore-Penrose y Drazin de pares opuestos
================================================================================

Cada axioma se evalúa literalmente sobre morfismos concretos, usando sólo las
operaciones de una `DaggerCategory` (composición diagramática, dagger,
identidades e igualdad). Así los mismos textos corren sobre matrices,
inyecciones parciales y pares opuestos.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Protocol, Tuple

from gidkit.config import config_actual
from gidkit.errors import DimensionMismatch
from gidkit.matrix import DaggerMode, MatrixCategory

logger = logging.getLogger(__name__)


class Family(Enum):
    DRAZIN = 'Drazin'
    GROUP = 'Group'
    DAGGER_DRAZIN = 'DaggerDrazin'
    DAGGER_SIDE = 'DaggerSide'
    DAGGER_GROUP = 'DaggerGroup'
    MOORE_PENROSE = 'MoorePenrose'
    OPPOSING_DRAZIN = 'OpposingDrazin'


class DaggerCategory(Protocol):
    def compose(self, f: Any, g: Any) -> Any: ...
    def dagger(self, f: Any) -> Any: ...
    def dom(self, f: Any) -> Any: ...
    def cod(self, f: Any) -> Any: ...
    def identity_dom(self, f: Any) -> Any: ...
    def identity_cod(self, f: Any) -> Any: ...
    def equal(self, f: Any, g: Any) -> bool: ...
    def first_difference(self, f: Any, g: Any) -> Optional[Any]: ...
    def is_exact(self, f: Any) -> bool: ...


# ================================================================================
# REPORTES
# ================================================================================

@dataclass
class AxiomResult:
    passed: bool
    k: Optional[int] = None
    counterexample: Optional[Any] = None
    warning: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        datos: Dict[str, Any] = {"pass": self.passed, "k": self.k}
        if self.counterexample is not None:
            datos["counterexample"] = _json_seguro(self.counterexample)
        return datos


@dataclass
class VerificationReport:
    family: Family
    axioms: Dict[str, AxiomResult] = field(default_factory=dict)
    minimal_index: Optional[int] = None
    k_max_searched: Optional[int] = None
    warnings: List[str] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(a.passed for a in self.axioms.values())

    def failed(self) -> List[str]:
        return [nombre for nombre, a in self.axioms.items() if not a.passed]

    def to_dict(self) -> Dict[str, Any]:
        datos: Dict[str, Any] = {
            "family": self.family.value,
            "axioms": {nombre: a.to_dict() for nombre, a in self.axioms.items()},
            "minimal_index": self.minimal_index,
        }
        if self.k_max_searched is not None:
            datos["k_max_searched"] = self.k_max_searched
        if self.warnings:
            datos["warnings"] = list(self.warnings)
        return datos


def _json_seguro(valor: Any) -> Any:
    if isinstance(valor, (tuple, list)):
        return [_json_seguro(v) for v in valor]
    return valor


# ================================================================================
# AUXILIARES
# ================================================================================

def resolve_k_max(k_max: Optional[int], defecto: int) -> int:
    """Prioridad: argumento explícito, GIDKIT_KMAX, dimensión"""
    if k_max is not None:
        return k_max
    global_kmax = config_actual().k_max
    if global_kmax is not None:
        return global_kmax
    return defecto


def _comparar(cat: DaggerCategory, lhs: Any, rhs: Any, etiqueta: Optional[str] = None) -> AxiomResult:
    pos = cat.first_difference(lhs, rhs)
    if pos is None:
        return AxiomResult(True)
    return AxiomResult(False, counterexample=(etiqueta, pos) if etiqueta else pos)


def _conjunto(*resultados: AxiomResult) -> AxiomResult:
    for r in resultados:
        if not r.passed:
            return r
    return AxiomResult(True)


def _buscar_k(cat: DaggerCategory, k_max: int,
              condiciones: List[Tuple[str, Any, Callable[[Any], Any]]]) -> AxiomResult:
    """
    Menor k <= k_max con lado(P^k) = P^k para cada condición (etiqueta, P, lado).
    Se recorren todas las potencias para comprobar también la monotonía.
    """
    potencias = [cat.identity_dom(base) for _, base, _ in condiciones]
    minimo: Optional[int] = None
    contraejemplo = None
    monotona = True
    for k in range(k_max + 1):
        ok = True
        for idx, (etiqueta, base, lado) in enumerate(condiciones):
            pk = potencias[idx]
            pos = cat.first_difference(lado(pk), pk)
            if pos is not None:
                ok = False
                contraejemplo = (etiqueta, pos) if etiqueta else pos
                break
        if ok and minimo is None:
            minimo = k
        elif not ok and minimo is not None:
            monotona = False
        if k < k_max:
            potencias = [cat.compose(pk, base) for pk, (_, base, _) in zip(potencias, condiciones)]
    if minimo is None:
        return AxiomResult(False, counterexample=contraejemplo)
    if not monotona:
        aviso = f"vale en k={minimo} pero deja de valer en algún k <= {k_max}"
        logger.warning(f"Axioma de iteración no monótono: {aviso}")
        return AxiomResult(True, k=minimo, warning=aviso)
    return AxiomResult(True, k=minimo)


def _cerrar(report: VerificationReport, cat: DaggerCategory, muestra: Any) -> VerificationReport:
    for nombre, a in report.axioms.items():
        if a.warning:
            report.warnings.append(f"{nombre}: {a.warning}")
    if not report.all_pass and not cat.is_exact(muestra):
        tol = config_actual().float_tol
        for nombre in report.failed():
            report.warnings.append(f"{nombre} falla con tolerancia {tol:g}")
        logger.warning(f"Familia {report.family.value}: fallan {report.failed()} en modo C64")
    return report


def _exigir_endo(cat: DaggerCategory, x: Any, cand: Any) -> None:
    if cat.dom(x) != cat.cod(x):
        raise DimensionMismatch("Se esperaba un endomorfismo")
    if cat.dom(cand) != cat.dom(x) or cat.cod(cand) != cat.cod(x):
        raise DimensionMismatch("El candidato no tiene el tipo del endomorfismo")


def _exigir_dual(cat: DaggerCategory, f: Any, cand: Any) -> None:
    if cat.dom(cand) != cat.cod(f) or cat.cod(cand) != cat.dom(f):
        raise DimensionMismatch("El candidato no tiene el tipo dual de f")


def _categoria(category: Optional[DaggerCategory], mode: DaggerMode) -> DaggerCategory:
    return category if category is not None else MatrixCategory(mode)


def _tamano(cat: DaggerCategory, f: Any) -> int:
    dom, cod = cat.dom(f), cat.cod(f)
    if isinstance(dom, int) and isinstance(cod, int):
        return max(dom, cod)
    return 0


# ================================================================================
# FAMILIAS DE AXIOMAS
# ================================================================================

def verify_drazin(x: Any, cand: Any, k_max: Optional[int] = None,
                  category: Optional[DaggerCategory] = None) -> VerificationReport:
    """[D.1] x^{k+1} x^D = x^k, [D.2] x^D x x^D = x^D, [D.3] x x^D = x^D x"""
    cat = _categoria(category, DaggerMode.TRANSPOSE)
    _exigir_endo(cat, x, cand)
    k_max = resolve_k_max(k_max, _tamano(cat, x))
    c = cat.compose

    x_cand = c(x, cand)
    report = VerificationReport(Family.DRAZIN, k_max_searched=k_max)
    report.axioms['D1'] = _buscar_k(cat, k_max, [(None, x, lambda pk: c(pk, x_cand))])
    report.axioms['D2'] = _comparar(cat, c(c(cand, x), cand), cand)
    report.axioms['D3'] = _comparar(cat, x_cand, c(cand, x))
    report.minimal_index = report.axioms['D1'].k
    return _cerrar(report, cat, x)


def verify_group(x: Any, cand: Any, category: Optional[DaggerCategory] = None) -> VerificationReport:
    """[G.1] x x^D x = x, [G.2] x^D x x^D = x^D, [G.3] x^D x = x x^D"""
    cat = _categoria(category, DaggerMode.TRANSPOSE)
    _exigir_endo(cat, x, cand)
    c = cat.compose

    report = VerificationReport(Family.GROUP)
    report.axioms['G1'] = _comparar(cat, c(c(x, cand), x), x)
    report.axioms['G2'] = _comparar(cat, c(c(cand, x), cand), cand)
    report.axioms['G3'] = _comparar(cat, c(cand, x), c(x, cand))
    return _cerrar(report, cat, x)


def _condiciones_laterales(cat: DaggerCategory, f: Any, cand: Any,
                           k_max: int) -> Dict[str, AxiomResult]:
    c = cat.compose
    fd = cat.dagger(f)
    p, q = c(f, fd), c(fd, f)
    f_cand, cand_f = c(f, cand), c(cand, f)
    return {
        # ff^∂ (ff†)^j = (ff†)^j
        'D5': _buscar_k(cat, k_max, [(None, p, lambda pk: c(f_cand, pk))]),
        # (ff†)^k ff^∂ = (ff†)^k
        'D6': _buscar_k(cat, k_max, [(None, p, lambda pk: c(pk, f_cand))]),
        # f^∂f (f†f)^m = (f†f)^m
        'D7': _buscar_k(cat, k_max, [(None, q, lambda pk: c(cand_f, pk))]),
        # (f†f)^n f^∂f = (f†f)^n
        'D8': _buscar_k(cat, k_max, [(None, q, lambda pk: c(pk, cand_f))]),
    }


def verify_dagger_drazin(f: Any, cand: Any, mode: DaggerMode = DaggerMode.TRANSPOSE,
                         k_max: Optional[int] = None, side: bool = False,
                         category: Optional[DaggerCategory] = None) -> VerificationReport:
    """
    [D†.1] (ff†)^k ff^∂ = (ff†)^k y f^∂f (f†f)^k = (f†f)^k
    [D†.2] f^∂ f f^∂ = f^∂
    [D†.3] (ff^∂)† = ff^∂
    [D†.4] (f^∂f)† = f^∂f
    Con side=True se agregan [D†.5]-[D†.8], cada una con su propio índice.
    """
    cat = _categoria(category, mode)
    _exigir_dual(cat, f, cand)
    k_max = resolve_k_max(k_max, _tamano(cat, f))
    c, d = cat.compose, cat.dagger

    fd = d(f)
    p, q = c(f, fd), c(fd, f)
    f_cand, cand_f = c(f, cand), c(cand, f)

    report = VerificationReport(Family.DAGGER_DRAZIN, k_max_searched=k_max)
    report.axioms['D1'] = _buscar_k(cat, k_max, [
        ('a', p, lambda pk: c(pk, f_cand)),
        ('b', q, lambda qk: c(cand_f, qk)),
    ])
    report.axioms['D2'] = _comparar(cat, c(cand_f, cand), cand)
    report.axioms['D3'] = _comparar(cat, d(f_cand), f_cand)
    report.axioms['D4'] = _comparar(cat, d(cand_f), cand_f)
    if side:
        report.axioms.update(_condiciones_laterales(cat, f, cand, k_max))
    report.minimal_index = report.axioms['D1'].k
    return _cerrar(report, cat, f)


def verify_dagger_side(f: Any, cand: Any, mode: DaggerMode = DaggerMode.TRANSPOSE,
                       k_max: Optional[int] = None,
                       category: Optional[DaggerCategory] = None) -> VerificationReport:
    """
    Condiciones [D†.5]-[D†.8] como familia propia. El índice mínimo reportado
    es el menor k a partir del cual valen las cuatro.
    """
    cat = _categoria(category, mode)
    _exigir_dual(cat, f, cand)
    k_max = resolve_k_max(k_max, _tamano(cat, f))

    report = VerificationReport(Family.DAGGER_SIDE, k_max_searched=k_max)
    report.axioms.update(_condiciones_laterales(cat, f, cand, k_max))
    if report.all_pass:
        report.minimal_index = max(a.k for a in report.axioms.values())
    return _cerrar(report, cat, f)


def verify_mp(f: Any, cand: Any, mode: DaggerMode = DaggerMode.TRANSPOSE,
              category: Optional[DaggerCategory] = None) -> VerificationReport:
    """
    [MP.1] f f° f = f, [MP.2] f° f f° = f°,
    [MP.3] (f° f)† = f° f, [MP.4] (f f°)† = f f°
    """
    cat = _categoria(category, mode)
    _exigir_dual(cat, f, cand)
    c, d = cat.compose, cat.dagger

    f_cand, cand_f = c(f, cand), c(cand, f)
    report = VerificationReport(Family.MOORE_PENROSE)
    report.axioms['MP1'] = _comparar(cat, c(f_cand, f), f)
    report.axioms['MP2'] = _comparar(cat, c(cand_f, cand), cand)
    report.axioms['MP3'] = _comparar(cat, d(cand_f), cand_f)
    report.axioms['MP4'] = _comparar(cat, d(f_cand), f_cand)
    return _cerrar(report, cat, f)


def verify_dagger_group(f: Any, cand: Any, mode: DaggerMode = DaggerMode.TRANSPOSE,
                        category: Optional[DaggerCategory] = None) -> VerificationReport:
    """
    [G†.1.a] ff†ff^∂ = ff†        [G†.1.b] f^∂ff†f = f†f
    [G†.1.c] ff^∂ff† = ff†        [G†.1.d] f†ff^∂f = f†f
    [G†.2] f^∂ff^∂ = f^∂   [G†.3] (ff^∂)† = ff^∂   [G†.4] (f^∂f)† = f^∂f
    """
    cat = _categoria(category, mode)
    _exigir_dual(cat, f, cand)
    c, d = cat.compose, cat.dagger

    fd = d(f)
    p, q = c(f, fd), c(fd, f)
    f_cand, cand_f = c(f, cand), c(cand, f)
    report = VerificationReport(Family.DAGGER_GROUP)
    report.axioms['G1a'] = _comparar(cat, c(p, f_cand), p)
    report.axioms['G1b'] = _comparar(cat, c(cand_f, q), q)
    report.axioms['G1c'] = _comparar(cat, c(f_cand, p), p)
    report.axioms['G1d'] = _comparar(cat, c(q, cand_f), q)
    report.axioms['G2'] = _comparar(cat, c(cand_f, cand), cand)
    report.axioms['G3'] = _comparar(cat, d(f_cand), f_cand)
    report.axioms['G4'] = _comparar(cat, d(cand_f), cand_f)
    return _cerrar(report, cat, f)


def verify_opposing(f: Any, g: Any, cand_fg: Any, cand_gf: Any, k_max: Optional[int] = None,
                    category: Optional[DaggerCategory] = None) -> VerificationReport:
    """
    Par opuesto (f, g) con candidato (f^{D/g}, g^{D/f}):
    [DV.1] (fg)^k f f^{D/g} = (fg)^k y (gf)^k g g^{D/f} = (gf)^k
    [DV.2] f^{D/g} f f^{D/g} = f^{D/g} y g^{D/f} g g^{D/f} = g^{D/f}
    [DV.3] f f^{D/g} = g^{D/f} g y f^{D/g} f = g g^{D/f}
    """
    cat = _categoria(category, DaggerMode.TRANSPOSE)
    _exigir_dual(cat, f, g)
    _exigir_dual(cat, f, cand_fg)
    if cat.dom(cand_gf) != cat.dom(f) or cat.cod(cand_gf) != cat.cod(f):
        raise DimensionMismatch("g^{D/f} debe tener el tipo de f")
    k_max = resolve_k_max(k_max, _tamano(cat, f))
    c = cat.compose

    fg, gf = c(f, g), c(g, f)
    f_cfg, g_cgf = c(f, cand_fg), c(g, cand_gf)
    report = VerificationReport(Family.OPPOSING_DRAZIN, k_max_searched=k_max)
    report.axioms['DV1'] = _buscar_k(cat, k_max, [
        ('a', fg, lambda pk: c(pk, f_cfg)),
        ('b', gf, lambda qk: c(qk, g_cgf)),
    ])
    report.axioms['DV2'] = _conjunto(
        _comparar(cat, c(c(cand_fg, f), cand_fg), cand_fg, 'a'),
        _comparar(cat, c(c(cand_gf, g), cand_gf), cand_gf, 'b'),
    )
    report.axioms['DV3'] = _conjunto(
        _comparar(cat, f_cfg, c(cand_gf, g), 'a'),
        _comparar(cat, c(cand_fg, f), g_cgf, 'b'),
    )
    report.minimal_index = report.axioms['DV1'].k
    return _cerrar(report, cat, f)
