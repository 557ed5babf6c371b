import pytest

from gidkit.config import (
    DEFAULT_FLOAT_TOL, DEFAULT_RANK_EPS, Config, cargar_config, config_actual, establecer_config
)
from gidkit.errors import ConfigError


class TestCargarConfig:
    def test_defaults(self):
        config = cargar_config(dotenv=False)
        assert config == Config()
        assert config.rank_eps == DEFAULT_RANK_EPS
        assert config.float_tol == DEFAULT_FLOAT_TOL

    def test_environment(self, monkeypatch):
        monkeypatch.setenv('GIDKIT_KMAX', '7')
        monkeypatch.setenv('GIDKIT_FLOAT_TOL', '1e-6')
        monkeypatch.setenv('GIDKIT_LOG_LEVEL', 'debug')
        config = cargar_config(dotenv=False)
        assert config.k_max == 7
        assert config.float_tol == 1e-6
        assert config.log_level == 'DEBUG'

    def test_blank_k_max_is_unset(self, monkeypatch):
        monkeypatch.setenv('GIDKIT_KMAX', '  ')
        assert cargar_config(dotenv=False).k_max is None

    @pytest.mark.parametrize('nombre,valor', [
        ('GIDKIT_KMAX', 'tres'),
        ('GIDKIT_KMAX', '-1'),
        ('GIDKIT_FLOAT_TOL', 'x'),
        ('GIDKIT_FLOAT_RANK_EPS', '0'),
    ])
    def test_invalid_values(self, monkeypatch, nombre, valor):
        monkeypatch.setenv(nombre, valor)
        with pytest.raises(ConfigError) as exc:
            cargar_config(dotenv=False)
        assert nombre in str(exc.value)


def test_establecer_config():
    establecer_config(Config(float_tol=1e-3))
    assert config_actual().float_tol == 1e-3
