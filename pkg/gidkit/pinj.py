"""
================================================================================
Inyecciones Parciales Finitas (PINJ)
================================================================================

PINJ es una categoría inversa: el dagger es la conversa f°, y toda inyección
parcial es †-Drazin con f^∂ = f°. Como endomorfismo, una inyección parcial
finita se descompone en ciclos más cadenas nilpotentes; su inversa de Drazin
invierte los ciclos y su índice es la longitud de la cadena más larga. En el
caso infinito el sucesor no tiene inversa de Drazin: la versión truncada a
{0..n} tiene índice n+1, que crece sin cota.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

from gidkit.drazin import certificar
from gidkit.errors import DimensionMismatch, InvalidPartialInjection
from gidkit.verifier import verify_dagger_drazin, verify_drazin

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartialInjection:
    dom_size: int
    cod_size: int
    pairs: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        pares = frozenset((int(x), int(y)) for x, y in self.pairs)
        object.__setattr__(self, 'pairs', pares)
        if self.dom_size < 0 or self.cod_size < 0:
            raise InvalidPartialInjection(f"Tamaños negativos ({self.dom_size}, {self.cod_size})")
        fuentes = [x for x, _ in pares]
        destinos = [y for _, y in pares]
        if len(set(fuentes)) != len(fuentes):
            raise InvalidPartialInjection("Un punto de origen aparece dos veces (no es función)")
        if len(set(destinos)) != len(destinos):
            raise InvalidPartialInjection("Un punto de destino aparece dos veces (no es inyectiva)")
        for x, y in pares:
            if not (0 <= x < self.dom_size and 0 <= y < self.cod_size):
                raise InvalidPartialInjection(
                    f"Par ({x}, {y}) fuera de {self.dom_size}→{self.cod_size}"
                )

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], dom_size: int,
                     cod_size: Optional[int] = None) -> 'PartialInjection':
        return cls(dom_size, dom_size if cod_size is None else cod_size,
                   frozenset(mapping.items()))

    @classmethod
    def identity(cls, n: int) -> 'PartialInjection':
        return cls(n, n, frozenset((x, x) for x in range(n)))

    @classmethod
    def empty(cls, dom_size: int, cod_size: int) -> 'PartialInjection':
        return cls(dom_size, cod_size, frozenset())

    def as_dict(self) -> Dict[int, int]:
        return dict(self.pairs)

    def __call__(self, x: int) -> Optional[int]:
        return self.as_dict().get(x)

    def sorted_pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self.pairs))

    def __repr__(self):
        flechas = ', '.join(f"{x}↦{y}" for x, y in self.sorted_pairs())
        return f"PartialInjection({self.dom_size}→{self.cod_size}: {{{flechas}}})"


@dataclass(frozen=True)
class PinjInverseResult:
    inverse: PartialInjection
    index: int


# ================================================================================
# COMPOSICIÓN Y CONVERSA
# ================================================================================

def compose(f: PartialInjection, g: PartialInjection) -> PartialInjection:
    """Primero f, luego g; definida donde ambas lo están"""
    if f.cod_size != g.dom_size:
        raise DimensionMismatch(f"No se puede componer {f.dom_size}→{f.cod_size} "
                                f"con {g.dom_size}→{g.cod_size}")
    g_map = g.as_dict()
    return PartialInjection(f.dom_size, g.cod_size,
                            frozenset((x, g_map[y]) for x, y in f.pairs if y in g_map))


def converse(f: PartialInjection) -> PartialInjection:
    return PartialInjection(f.cod_size, f.dom_size, frozenset((y, x) for x, y in f.pairs))


def power(f: PartialInjection, k: int) -> PartialInjection:
    if f.dom_size != f.cod_size:
        raise DimensionMismatch("Potencia de una inyección parcial que no es endomorfismo")
    resultado = PartialInjection.identity(f.dom_size)
    for _ in range(k):
        resultado = compose(resultado, f)
    return resultado


def is_bijection(f: PartialInjection) -> bool:
    return f.dom_size == f.cod_size and len(f.pairs) == f.dom_size


def truncated_successor(n: int) -> PartialInjection:
    """s(i) = i+1 sobre {0..n}, indefinido en n"""
    return PartialInjection(n + 1, n + 1, frozenset((i, i + 1) for i in range(n)))


def inverse_category_laws(f: PartialInjection,
                          g: Optional[PartialInjection] = None) -> Dict[str, bool]:
    """f f° f = f y, para g paralelo, ff°gg° = gg°ff°"""
    leyes = {'partial_isometry': compose(compose(f, converse(f)), f) == f}
    if g is not None:
        if (g.dom_size, g.cod_size) != (f.dom_size, f.cod_size):
            raise DimensionMismatch("Las leyes de conmutación requieren mapas paralelos")
        ff = compose(f, converse(f))
        gg = compose(g, converse(g))
        leyes['restrictions_commute'] = compose(ff, gg) == compose(gg, ff)
    return leyes


# ================================================================================
# CATEGORÍA PINJ
# ================================================================================

class PinjCategory:
    """PINJ con la conversa como dagger, para el motor de verificación"""

    def compose(self, f, g):
        return compose(f, g)

    def dagger(self, f):
        return converse(f)

    def dom(self, f):
        return f.dom_size

    def cod(self, f):
        return f.cod_size

    def identity_dom(self, f):
        return PartialInjection.identity(f.dom_size)

    def identity_cod(self, f):
        return PartialInjection.identity(f.cod_size)

    def equal(self, f, g):
        return f == g

    def first_difference(self, f, g) -> Optional[int]:
        if f == g:
            return None
        mf, mg = f.as_dict(), g.as_dict()
        distintos = [x for x in set(mf) | set(mg) if mf.get(x) != mg.get(x)]
        return min(distintos) if distintos else 0

    def is_exact(self, f) -> bool:
        return True


# ================================================================================
# INVERSAS
# ================================================================================

def dagger_drazin_pinj(f: PartialInjection) -> PinjInverseResult:
    """f^∂ = f°, con índice 0 sólo para biyecciones"""
    resultado = PinjInverseResult(converse(f), 0 if is_bijection(f) else 1)
    report = verify_dagger_drazin(f, resultado.inverse, k_max=max(f.dom_size, f.cod_size, 1),
                                  category=PinjCategory())
    certificar(report, True, resultado.index, "†-Drazin en PINJ")
    return resultado


def _puntos_ciclicos(f: PartialInjection) -> FrozenSet[int]:
    mapa = f.as_dict()
    ciclicos = set()
    for inicio in mapa:
        x = mapa[inicio]
        pasos = 0
        while x is not None and x != inicio and pasos <= f.dom_size:
            x = mapa.get(x)
            pasos += 1
        if x == inicio:
            ciclicos.add(inicio)
    return frozenset(ciclicos)


def _cadena_mas_larga(f: PartialInjection, ciclicos: Iterable[int]) -> int:
    mapa = f.as_dict()
    ciclicos = set(ciclicos)
    mayor = 0
    for x in range(f.dom_size):
        if x in ciclicos:
            continue
        largo = 1
        y = mapa.get(x)
        while y is not None:
            largo += 1
            y = mapa.get(y)
        mayor = max(mayor, largo)
    return mayor


def drazin_endo_pinj(f: PartialInjection) -> PinjInverseResult:
    """Inversa de Drazin: la permutación inversa sobre los ciclos, indefinida fuera"""
    if f.dom_size != f.cod_size:
        raise DimensionMismatch(f"Se esperaba un endomorfismo, se recibió {f.dom_size}→{f.cod_size}")
    ciclicos = _puntos_ciclicos(f)
    inversa = PartialInjection(f.dom_size, f.dom_size,
                               frozenset((y, x) for x, y in f.pairs if x in ciclicos))
    index = _cadena_mas_larga(f, ciclicos)
    logger.debug(f"PINJ: {len(ciclicos)} puntos cíclicos, cadena más larga {index}")

    report = verify_drazin(f, inversa, k_max=f.dom_size, category=PinjCategory())
    certificar(report, True, index, "Drazin en PINJ")
    return PinjInverseResult(inversa, index)
