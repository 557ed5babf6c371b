"""
================================================================================
Excepciones de gidkit
================================================================================
"""


class GidkitError(Exception):
    """Error base de todo el paquete"""


class KindMismatch(GidkitError):
    """Escalares o matrices de cuerpos distintos"""


class DivisionByZero(GidkitError, ZeroDivisionError):
    """División por cero en aritmética exacta"""


class InvalidScalar(GidkitError):
    """Escalar no representable (NaN, Inf, texto inválido)"""


class DimensionMismatch(GidkitError):
    """Dimensiones incompatibles para la operación"""


class Singular(GidkitError):
    """La matriz cuadrada no es invertible"""


class NoGroupInverse(GidkitError):
    """Índice de Drazin >= 2: no hay inversa de grupo"""

    def __init__(self, index: int):
        super().__init__(f"No existe inversa de grupo (índice de Drazin = {index})")
        self.index = index


class NoDaggerGroupInverse(GidkitError):
    """Índice †-Drazin >= 2: no hay †-inversa de grupo"""

    def __init__(self, index: int):
        super().__init__(f"No existe †-inversa de grupo (índice †-Drazin = {index})")
        self.index = index


class NotSelfAdjoint(GidkitError):
    """Se esperaba un endomorfismo autoadjunto"""


class InvalidPartialInjection(GidkitError):
    """Pares que no forman una inyección parcial"""


class ConfigError(GidkitError):
    """Variable de entorno con valor inválido"""


class InputError(GidkitError):
    """JSON de entrada mal formado o que no cumple el esquema"""


class InternalCheckFailure(GidkitError):
    """Una construcción exacta no pasó su propia verificación"""
