"""
================================================================================
Comandos sobre inyecciones parciales (PINJ)
================================================================================
"""

import logging
from pathlib import Path

import click

from gidkit import schemas
from gidkit.commands.comun import GidkitCommand, emitir_verificado, maneja_errores
from gidkit.pinj import PinjCategory, dagger_drazin_pinj, drazin_endo_pinj
from gidkit.verifier import verify_dagger_drazin, verify_drazin

logger = logging.getLogger(__name__)


def _opciones(func):
    func = click.option('--output', '-o', type=click.Path(dir_okay=False, path_type=Path),
                        default=None, help='Archivo de salida (por defecto stdout)')(func)
    func = click.option('--k-max', type=click.IntRange(min=0), default=None,
                        help='Cota de búsqueda del índice')(func)
    func = click.argument('entrada', type=click.Path(exists=True, dir_okay=False,
                                                     path_type=Path))(func)
    return func


@click.command('pinj-drazin', cls=GidkitCommand)
@_opciones
@click.pass_context
@maneja_errores
def pinj_drazin_cmd(ctx, entrada, k_max, output):
    """Inversa de Drazin de una inyección parcial endo"""
    f = schemas.parse_pinj(schemas.load_json(entrada))
    resultado = drazin_endo_pinj(f)
    report = verify_drazin(f, resultado.inverse, k_max=k_max, category=PinjCategory())
    logger.info(f"PINJ {f.dom_size} puntos: índice {resultado.index}")
    emitir_verificado(ctx, schemas.pinj_to_json(resultado.inverse), resultado.index,
                      report, output)


@click.command('pinj-dagger-drazin', cls=GidkitCommand)
@_opciones
@click.pass_context
@maneja_errores
def pinj_dagger_drazin_cmd(ctx, entrada, k_max, output):
    """Inversa †-Drazin de una inyección parcial: su conversa"""
    f = schemas.parse_pinj(schemas.load_json(entrada))
    resultado = dagger_drazin_pinj(f)
    report = verify_dagger_drazin(f, resultado.inverse, k_max=k_max, category=PinjCategory())
    emitir_verificado(ctx, schemas.pinj_to_json(resultado.inverse), resultado.index,
                      report, output)


COMANDOS = [pinj_drazin_cmd, pinj_dagger_drazin_cmd]
