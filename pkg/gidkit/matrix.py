"""
================================================================================
Matrices densas sobre Q, Qi y C64
Incluye: productos, potencias, daggers, rango exacto (Bareiss), forma
escalonada reducida, factorización de rango completo, inversa, ascenso/descenso
================================================================================

Convención de orientación: un mapa n → m es una matriz n × m que actúa sobre
vectores fila (x ↦ x·A). Así la composición diagramática "fg" (primero f,
luego g) es exactamente el producto F·G y las ecuaciones se transcriben sin
invertir el orden.
"""

import logging
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Any, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from gidkit import scalar
from gidkit.config import config_actual
from gidkit.errors import DimensionMismatch, KindMismatch, Singular
from gidkit.scalar import Field, GaussianRational, Involution, Scalar

logger = logging.getLogger(__name__)


class DaggerMode(Enum):
    TRANSPOSE = 'transpose'
    CONJUGATE_TRANSPOSE = 'conjugate-transpose'

    @property
    def involution(self) -> Involution:
        if self is DaggerMode.TRANSPOSE:
            return Involution.IDENTITY
        return Involution.CONJUGATION


# ================================================================================
# TIPO MATRIX
# ================================================================================

class Matrix:
    """Matriz inmutable, de filas homogéneas en un único cuerpo"""

    __slots__ = ('field', 'rows', 'cols', '_data')

    def __init__(self, data: Iterable[Iterable[Any]] = (), field: Optional[Field] = None,
                 shape: Optional[Tuple[int, int]] = None):
        filas = [list(fila) for fila in data]
        if shape is None:
            if not filas:
                raise DimensionMismatch("Matriz vacía sin forma explícita")
            shape = (len(filas), len(filas[0]))
        rows, cols = shape
        if rows < 0 or cols < 0:
            raise DimensionMismatch(f"Forma inválida {shape}")
        if rows * cols == 0:
            filas = [[] for _ in range(rows)]
        if len(filas) != rows or any(len(f) != cols for f in filas):
            raise DimensionMismatch(f"Las entradas no forman una matriz {rows}×{cols}")

        if field is None:
            field = scalar.infer_field(v for f in filas for v in f)
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data: Tuple[Tuple[Scalar, ...], ...] = tuple(
            tuple(scalar.coerce(v, field) for v in f) for f in filas
        )

    @classmethod
    def _crudo(cls, data, field: Field, rows: int, cols: int) -> 'Matrix':
        # Entradas ya coercidas: se evita recorrerlas de nuevo
        m = cls.__new__(cls)
        m.field = field
        m.rows = rows
        m.cols = cols
        m._data = tuple(tuple(f) for f in data) if rows * cols else tuple(() for _ in range(rows))
        return m

    @classmethod
    def identity(cls, n: int, field: Field = Field.Q) -> 'Matrix':
        uno, cero = scalar.one(field), scalar.zero(field)
        return cls._crudo([[uno if i == j else cero for j in range(n)] for i in range(n)],
                          field, n, n)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = Field.Q) -> 'Matrix':
        cero = scalar.zero(field)
        return cls._crudo([[cero] * cols for _ in range(rows)], field, rows, cols)

    @classmethod
    def from_numpy(cls, arr: np.ndarray) -> 'Matrix':
        arr = np.asarray(arr, dtype=complex)
        if not np.all(np.isfinite(arr)):
            raise scalar.InvalidScalar("La matriz C64 contiene NaN o Inf")
        rows, cols = arr.shape
        return cls._crudo([[complex(v) for v in fila] for fila in arr.tolist()],
                          Field.C64, rows, cols)

    # ============ ACCESO ============

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, pos: Tuple[int, int]) -> Scalar:
        i, j = pos
        return self._data[i][j]

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self._data[i]

    def col(self, j: int) -> Tuple[Scalar, ...]:
        return tuple(f[j] for f in self._data)

    def to_lists(self) -> List[List[Scalar]]:
        return [list(f) for f in self._data]

    def to_numpy(self) -> np.ndarray:
        arr = np.zeros((self.rows, self.cols), dtype=complex)
        for i, fila in enumerate(self._data):
            for j, v in enumerate(fila):
                arr[i, j] = complex(v)
        return arr

    def to_field(self, field: Field) -> 'Matrix':
        return Matrix(self._data, field, shape=self.shape)

    def select_rows(self, indices: Sequence[int]) -> 'Matrix':
        return Matrix._crudo([self._data[i] for i in indices], self.field, len(indices), self.cols)

    def select_cols(self, indices: Sequence[int]) -> 'Matrix':
        return Matrix._crudo([[f[j] for j in indices] for f in self._data],
                             self.field, self.rows, len(indices))

    def is_zero(self) -> bool:
        return equal(self, Matrix.zeros(self.rows, self.cols, self.field))

    # ============ ARITMÉTICA ============

    def __matmul__(self, otra: 'Matrix') -> 'Matrix':
        return matmul(self, otra)

    def __add__(self, otra: 'Matrix') -> 'Matrix':
        _mismo_cuerpo(self, otra)
        if self.shape != otra.shape:
            raise DimensionMismatch(f"Suma de {self.shape} con {otra.shape}")
        return Matrix._crudo([[a + b for a, b in zip(fa, fb)]
                              for fa, fb in zip(self._data, otra._data)],
                             self.field, self.rows, self.cols)

    def __neg__(self) -> 'Matrix':
        return Matrix._crudo([[-a for a in f] for f in self._data], self.field, self.rows, self.cols)

    def __sub__(self, otra: 'Matrix') -> 'Matrix':
        return self + (-otra)

    def scale(self, c: Any) -> 'Matrix':
        c = scalar.coerce(c, self.field)
        return Matrix._crudo([[c * a for a in f] for f in self._data], self.field, self.rows, self.cols)

    def transpose(self) -> 'Matrix':
        return Matrix._crudo([list(c) for c in zip(*self._data)] if self.rows and self.cols
                             else [], self.field, self.cols, self.rows)

    # ============ IGUALDAD ============

    def __eq__(self, otra):
        if not isinstance(otra, Matrix):
            return NotImplemented
        return self.field is otra.field and self.shape == otra.shape and self._data == otra._data

    def __hash__(self):
        return hash((self.field, self.shape, self._data))

    def __repr__(self):
        filas = '; '.join(' '.join(_mostrar(v) for v in f) for f in self._data)
        return f"Matrix[{self.field.value} {self.rows}×{self.cols}]({filas})"


def _mostrar(v: Scalar) -> str:
    if isinstance(v, Fraction):
        return scalar.render_rational(v)
    return str(v)


def _mismo_cuerpo(a: Matrix, b: Matrix) -> None:
    if a.field is not b.field:
        raise KindMismatch(f"Matrices de cuerpos distintos: {a.field.value} y {b.field.value}")


# ================================================================================
# PRODUCTOS, POTENCIAS, DAGGER
# ================================================================================

def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Producto ordinario; equivale a la composición diagramática ab"""
    _mismo_cuerpo(a, b)
    if a.cols != b.rows:
        raise DimensionMismatch(f"Producto {a.rows}×{a.cols} por {b.rows}×{b.cols}")
    if a.field is Field.C64:
        if a.rows == 0 or b.cols == 0:
            return Matrix.zeros(a.rows, b.cols, Field.C64)
        return Matrix.from_numpy(a.to_numpy() @ b.to_numpy())

    cero = scalar.zero(a.field)
    columnas = [b.col(j) for j in range(b.cols)]
    datos = [[sum((x * y for x, y in zip(fila, col) if x and y), cero) for col in columnas]
             for fila in a._data]
    return Matrix._crudo(datos, a.field, a.rows, b.cols)


def matpow(a: Matrix, k: int) -> Matrix:
    """A^k con A^0 = I"""
    if not a.is_square:
        raise DimensionMismatch(f"Potencia de una matriz no cuadrada {a.shape}")
    if k < 0:
        raise ValueError(f"Exponente negativo {k}")
    resultado = Matrix.identity(a.rows, a.field)
    base = a
    while k:
        if k & 1:
            resultado = resultado @ base
        k >>= 1
        if k:
            base = base @ base
    return resultado


def dagger(a: Matrix, mode: DaggerMode = DaggerMode.TRANSPOSE) -> Matrix:
    """Entrada (i, j) = involución de A(j, i)"""
    t = a.transpose()
    if mode.involution is Involution.IDENTITY or a.field is Field.Q:
        return t
    return Matrix._crudo([[scalar.conjugate(v, mode.involution) for v in f] for f in t._data],
                         a.field, t.rows, t.cols)


# ================================================================================
# COMPARACIÓN
# ================================================================================

def frobenius_distance(a: Matrix, b: Matrix) -> float:
    _mismo_cuerpo(a, b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"Distancia entre {a.shape} y {b.shape}")
    if a.rows * a.cols == 0:
        return 0.0
    return float(np.linalg.norm(a.to_numpy() - b.to_numpy()))


def equal(a: Matrix, b: Matrix, tol: Optional[float] = None) -> bool:
    """
    Igualdad estructural en cuerpos exactos. En C64, distancia de Frobenius
    <= tol·max(1, ‖a‖, ‖b‖): absoluta para matrices de norma <= 1, relativa
    por encima
    """
    _mismo_cuerpo(a, b)
    if a.shape != b.shape:
        return False
    if a.field.exact:
        return a._data == b._data
    if tol is None:
        tol = config_actual().float_tol
    escala = max(1.0, _norma(a), _norma(b))
    return frobenius_distance(a, b) <= tol * escala


def _norma(a: Matrix) -> float:
    return float(np.linalg.norm(a.to_numpy())) if a.rows * a.cols else 0.0


def first_difference(a: Matrix, b: Matrix, tol: Optional[float] = None) -> Optional[Tuple[int, int]]:
    """Primera posición (i, j) donde difieren; None si son iguales"""
    if equal(a, b, tol):
        return None
    if a.shape != b.shape:
        return (0, 0)
    if a.field.exact:
        for i in range(a.rows):
            for j in range(a.cols):
                if a[i, j] != b[i, j]:
                    return (i, j)
    diff = np.abs(a.to_numpy() - b.to_numpy())
    i, j = np.unravel_index(int(np.argmax(diff)), diff.shape)
    return (int(i), int(j))


# ================================================================================
# RANGO (BAREISS)
# ================================================================================

def _a_enteros(a: Matrix) -> List[List[Any]]:
    # Escala por el mcm de los denominadores: el rango no cambia
    dens = [1]
    for f in a._data:
        for v in f:
            if isinstance(v, GaussianRational):
                dens.extend((v.re.denominator, v.im.denominator))
            else:
                dens.append(v.denominator)
    m = lcm(*dens)
    if a.field is Field.Q:
        return [[int(v * m) for v in f] for f in a._data]
    return [[v * m for v in f] for f in a._data]


def _bareiss_rank(filas: List[List[Any]], exacta) -> int:
    n_filas = len(filas)
    n_cols = len(filas[0]) if filas else 0
    r = 0
    previo = 1
    for c in range(n_cols):
        if r == n_filas:
            break
        pivote = next((i for i in range(r, n_filas) if filas[i][c] != 0), None)
        if pivote is None:
            continue
        filas[r], filas[pivote] = filas[pivote], filas[r]
        p = filas[r][c]
        for i in range(r + 1, n_filas):
            q = filas[i][c]
            for j in range(c + 1, n_cols):
                filas[i][j] = exacta(p * filas[i][j] - q * filas[r][j], previo)
            filas[i][c] = 0
        previo = p
        r += 1
    return r


def _umbral(arr: np.ndarray) -> float:
    return config_actual().rank_eps * (float(np.max(np.abs(arr))) if arr.size else 0.0)


def _pivotes_float(arr: np.ndarray, umbral: Optional[float] = None) -> Tuple[np.ndarray, List[int]]:
    """
    Eliminación de Gauss-Jordan con pivoteo parcial. Sin umbral explícito se
    usa eps·max|arr|; inverse y solve lo fijan a partir de A sola, no de [A | B]
    """
    arr = np.array(arr, dtype=complex)
    n_filas, n_cols = arr.shape
    if umbral is None:
        umbral = _umbral(arr)
    pivotes: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_filas:
            break
        i = r + int(np.argmax(np.abs(arr[r:, c])))
        if abs(arr[i, c]) <= umbral:
            arr[r:, c] = 0
            continue
        arr[[r, i]] = arr[[i, r]]
        arr[r] = arr[r] / arr[r, c]
        for k in range(n_filas):
            if k != r:
                arr[k] = arr[k] - arr[k, c] * arr[r]
        pivotes.append(c)
        r += 1
    return arr, pivotes


def rank(a: Matrix) -> int:
    """Rango exacto por Bareiss; rango numérico con umbral en C64"""
    if a.rows == 0 or a.cols == 0:
        return 0
    if a.field is Field.C64:
        return len(_pivotes_float(a.to_numpy())[1])
    if a.field is Field.Q:
        return _bareiss_rank(_a_enteros(a), lambda x, d: x // d)
    return _bareiss_rank(_a_enteros(a), lambda x, d: x / d)


# ================================================================================
# FORMA ESCALONADA REDUCIDA Y DERIVADOS
# ================================================================================

def rref(a: Matrix, umbral: Optional[float] = None) -> Tuple[Matrix, Tuple[int, ...]]:
    """Forma escalonada reducida por filas y columnas pivote (umbral absoluto opcional en C64)"""
    if a.field is Field.C64:
        if a.rows * a.cols == 0:
            return a, ()
        arr, pivotes = _pivotes_float(a.to_numpy(), umbral)
        return Matrix.from_numpy(arr), tuple(pivotes)

    filas = a.to_lists()
    cero = scalar.zero(a.field)
    pivotes: List[int] = []
    r = 0
    for c in range(a.cols):
        if r == a.rows:
            break
        pivote = next((i for i in range(r, a.rows) if filas[i][c] != 0), None)
        if pivote is None:
            continue
        filas[r], filas[pivote] = filas[pivote], filas[r]
        p = filas[r][c]
        filas[r] = [v / p for v in filas[r]]
        for i in range(a.rows):
            q = filas[i][c]
            if i != r and q != 0:
                filas[i] = [x - q * y for x, y in zip(filas[i], filas[r])]
        for i in range(a.rows):
            if i != r:
                filas[i][c] = cero
        pivotes.append(c)
        r += 1
    return Matrix._crudo(filas, a.field, a.rows, a.cols), tuple(pivotes)


def full_rank_factorization(a: Matrix) -> Tuple[Matrix, Matrix]:
    """A = F·G con F de rango columna completo y G de rango fila completo"""
    r_mat, pivotes = rref(a)
    g = r_mat.select_rows(range(len(pivotes)))
    f = a.select_cols(pivotes)
    return f, g


def _hstack(a: Matrix, b: Matrix) -> Matrix:
    return Matrix._crudo([list(fa) + list(fb) for fa, fb in zip(a._data, b._data)],
                         a.field, a.rows, a.cols + b.cols)


def _umbral_de(a: Matrix) -> Optional[float]:
    # El umbral de pivote depende sólo de A, como en rank
    if a.field is not Field.C64 or a.rows * a.cols == 0:
        return None
    return _umbral(a.to_numpy())


def inverse(a: Matrix) -> Matrix:
    """Inversa de una matriz cuadrada invertible"""
    if not a.is_square:
        raise DimensionMismatch(f"Inversa de una matriz no cuadrada {a.shape}")
    n = a.rows
    if n == 0:
        return a
    r_mat, pivotes = rref(_hstack(a, Matrix.identity(n, a.field)), _umbral_de(a))
    if tuple(pivotes[:n]) != tuple(range(n)):
        raise Singular(f"Matriz {n}×{n} singular (rango {rank(a)})")
    return r_mat.select_cols(range(n, 2 * n))


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Una solución X de A·X = B (variables libres en cero)"""
    _mismo_cuerpo(a, b)
    if a.rows != b.rows:
        raise DimensionMismatch(f"Sistema {a.shape} con lado derecho {b.shape}")
    r_mat, pivotes = rref(_hstack(a, b), _umbral_de(a))
    if any(p >= a.cols for p in pivotes):
        raise Singular("Sistema incompatible")
    x = [[scalar.zero(a.field)] * b.cols for _ in range(a.cols)]
    for i, p in enumerate(pivotes):
        x[p] = list(r_mat.row(i)[a.cols:])
    return Matrix._crudo(x, a.field, a.cols, b.cols)


def left_kernel(a: Matrix) -> Matrix:
    """Base (por filas) de {x : x·A = 0}"""
    t = a.transpose()
    r_mat, pivotes = rref(t)
    libres = [j for j in range(t.cols) if j not in pivotes]
    cero, uno = scalar.zero(a.field), scalar.one(a.field)
    base = []
    for libre in libres:
        v = [cero] * t.cols
        v[libre] = uno
        for i, p in enumerate(pivotes):
            v[p] = -r_mat[i, libre]
        base.append(v)
    return Matrix._crudo(base, a.field, len(base), a.rows)


# ================================================================================
# ASCENSO Y DESCENSO
# ================================================================================

def descent(a: Matrix) -> int:
    """Menor k con rank(A^k) = rank(A^{k+1})"""
    if not a.is_square:
        raise DimensionMismatch(f"Descenso de una matriz no cuadrada {a.shape}")
    potencia = Matrix.identity(a.rows, a.field)
    rango = a.rows
    for k in range(a.rows + 1):
        siguiente = potencia @ a
        rango_sig = rank(siguiente)
        if rango_sig == rango:
            return k
        potencia, rango = siguiente, rango_sig
    return a.rows


def ascent(a: Matrix) -> int:
    """Menor k con null(A^k) = null(A^{k+1}), por inclusión de núcleos"""
    if not a.is_square:
        raise DimensionMismatch(f"Ascenso de una matriz no cuadrada {a.shape}")
    potencia = Matrix.identity(a.rows, a.field)
    for k in range(a.rows + 1):
        siguiente = potencia @ a
        nucleo = left_kernel(siguiente)
        # null(A^k) ⊆ null(A^{k+1}) siempre; basta ver la otra inclusión
        if (nucleo @ potencia).is_zero():
            return k
        potencia = siguiente
    return a.rows


# ================================================================================
# CATEGORÍA DE MATRICES
# ================================================================================

class MatrixCategory:
    """MAT(K) con el dagger elegido, para el motor de verificación"""

    def __init__(self, mode: DaggerMode = DaggerMode.TRANSPOSE, tol: Optional[float] = None):
        self.mode = mode
        self.tol = tol

    def compose(self, f: Matrix, g: Matrix) -> Matrix:
        return f @ g

    def dagger(self, f: Matrix) -> Matrix:
        return dagger(f, self.mode)

    def dom(self, f: Matrix) -> int:
        return f.rows

    def cod(self, f: Matrix) -> int:
        return f.cols

    def identity_dom(self, f: Matrix) -> Matrix:
        return Matrix.identity(f.rows, f.field)

    def identity_cod(self, f: Matrix) -> Matrix:
        return Matrix.identity(f.cols, f.field)

    def equal(self, f: Matrix, g: Matrix) -> bool:
        return equal(f, g, self.tol)

    def first_difference(self, f: Matrix, g: Matrix):
        return first_difference(f, g, self.tol)

    def is_exact(self, f: Matrix) -> bool:
        return f.field.exact
