"""
================================================================================
Configuración - Variables de entorno
================================================================================

Variables reconocidas:
    GIDKIT_KMAX            - Cota global para la búsqueda de índices
    GIDKIT_FLOAT_RANK_EPS  - Umbral relativo de pivote en modo C64
    GIDKIT_FLOAT_TOL       - Tolerancia de Frobenius en modo C64
    GIDKIT_LOG_LEVEL       - Nivel de logging de la CLI
"""

import os
import logging
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from gidkit.errors import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_RANK_EPS = 1e-9
DEFAULT_FLOAT_TOL = 1e-8


@dataclass(frozen=True)
class Config:
    k_max: Optional[int] = None
    rank_eps: float = DEFAULT_RANK_EPS
    float_tol: float = DEFAULT_FLOAT_TOL
    log_level: str = 'WARNING'


def _leer_entero(nombre: str) -> Optional[int]:
    valor = os.environ.get(nombre)
    if valor is None or valor.strip() == '':
        return None
    try:
        entero = int(valor)
    except ValueError:
        raise ConfigError(f"{nombre} debe ser un entero, se recibió {valor!r}")
    if entero < 0:
        raise ConfigError(f"{nombre} no puede ser negativo ({entero})")
    return entero


def _leer_float(nombre: str, defecto: float) -> float:
    valor = os.environ.get(nombre)
    if valor is None or valor.strip() == '':
        return defecto
    try:
        numero = float(valor)
    except ValueError:
        raise ConfigError(f"{nombre} debe ser un número, se recibió {valor!r}")
    if not numero > 0:
        raise ConfigError(f"{nombre} debe ser positivo ({numero})")
    return numero


def cargar_config(dotenv: bool = True) -> Config:
    """Construye la configuración desde el entorno (y .env si existe)"""
    if dotenv:
        load_dotenv()

    config = Config(
        k_max=_leer_entero('GIDKIT_KMAX'),
        rank_eps=_leer_float('GIDKIT_FLOAT_RANK_EPS', DEFAULT_RANK_EPS),
        float_tol=_leer_float('GIDKIT_FLOAT_TOL', DEFAULT_FLOAT_TOL),
        log_level=os.environ.get('GIDKIT_LOG_LEVEL', 'WARNING').upper(),
    )
    logger.debug(f"Configuración cargada: {config}")
    return config


# Tolerancias vigentes para las comparaciones en modo C64
_vigente = Config()


def config_actual() -> Config:
    return _vigente


def establecer_config(config: Config) -> None:
    """Fija la configuración usada por las comparaciones en coma flotante"""
    global _vigente
    _vigente = config
