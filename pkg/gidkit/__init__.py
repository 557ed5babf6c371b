"""
================================================================================
gidkit - Inversas generalizadas exactas
Drazin, grupo, †-Drazin, †-grupo, Moore-Penrose, PINJ y pares opuestos
================================================================================
"""

import logging

__version__ = '1.0.0'


def configurar_logging(nivel: str) -> None:
    """Nivel del logger del paquete; los handlers los instala el punto de entrada"""
    logging.getLogger(__name__).setLevel(getattr(logging, nivel, logging.WARNING))


def create_app():
    import click

    from gidkit.commands.comun import GidkitGroup, maneja_errores
    from gidkit.config import cargar_config, establecer_config

    @click.group('gidkit', cls=GidkitGroup)
    @click.version_option(__version__, prog_name='gidkit')
    @click.option('--log-level', default=None,
                  type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False),
                  help='Sobrescribe GIDKIT_LOG_LEVEL')
    @maneja_errores
    def app(log_level):
        """Inversas generalizadas verificadas contra sus axiomas"""
        config = cargar_config()
        establecer_config(config)
        configurar_logging((log_level or config.log_level).upper())

    # Registrar comandos
    from gidkit.commands.inversas import COMANDOS as inversas
    from gidkit.commands.inyecciones import COMANDOS as inyecciones
    from gidkit.commands.verificar import COMANDOS as verificacion

    for comando in inversas + inyecciones + verificacion:
        app.add_command(comando)

    return app
