import json

import pytest
from hypothesis import HealthCheck, settings

from gidkit.config import Config, establecer_config

settings.register_profile('gidkit', max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow,
                                                 HealthCheck.function_scoped_fixture])
settings.register_profile('rapido', max_examples=25, deadline=None,
                          suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile('gidkit')


@pytest.fixture(autouse=True)
def config_por_defecto(monkeypatch):
    """Cada test arranca con la configuración por defecto y sin GIDKIT_*"""
    for nombre in ('GIDKIT_KMAX', 'GIDKIT_FLOAT_RANK_EPS', 'GIDKIT_FLOAT_TOL', 'GIDKIT_LOG_LEVEL'):
        monkeypatch.delenv(nombre, raising=False)
    establecer_config(Config())
    yield
    establecer_config(Config())


@pytest.fixture
def escribir_json(tmp_path):
    def _escribir(nombre, datos):
        ruta = tmp_path / nombre
        ruta.write_text(json.dumps(datos), encoding='utf-8')
        return ruta
    return _escribir
