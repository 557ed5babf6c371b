"""
================================================================================
Comandos de verificación e índices
================================================================================

verify   - evalúa una familia de axiomas sobre (entrada, candidato)
index    - rango, ascenso, descenso e índices de Drazin y †-Drazin, con el
           reporte de la inversa que certifica el índice
"""

import logging
from pathlib import Path

import click

from gidkit import schemas
from gidkit.commands.comun import (
    EXIT_NO_EXISTE, GidkitCommand, cuerpo, emitir, emitir_verificado, leer_matriz, maneja_errores,
    modo_dagger, opcion_dagger, opciones_matriz
)
from gidkit.dagger_inverse import dagger_drazin
from gidkit.drazin import drazin_inverse
from gidkit.errors import InputError
from gidkit.matrix import ascent, descent, rank
from gidkit.pinj import PinjCategory
from gidkit.verifier import (
    verify_dagger_drazin, verify_dagger_group, verify_dagger_side, verify_drazin, verify_group,
    verify_mp, verify_opposing
)

logger = logging.getLogger(__name__)

FAMILIAS = ['drazin', 'group', 'dagger-drazin', 'dagger-side', 'dagger-group', 'mp', 'opposing']


def _reporte(familia, x, cand, mode, k_max, category):
    if familia == 'drazin':
        return verify_drazin(x, cand, k_max=k_max, category=category)
    if familia == 'group':
        return verify_group(x, cand, category=category)
    if familia == 'dagger-drazin':
        return verify_dagger_drazin(x, cand, mode, k_max=k_max, category=category)
    if familia == 'dagger-side':
        return verify_dagger_side(x, cand, mode, k_max=k_max, category=category)
    if familia == 'dagger-group':
        return verify_dagger_group(x, cand, mode, category=category)
    return verify_mp(x, cand, mode, category=category)


@click.command('verify', cls=GidkitCommand)
@click.argument('entrada', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument('candidato', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@opciones_matriz
@opcion_dagger
@click.option('--family', 'familia', required=True, type=click.Choice(FAMILIAS),
              help='Familia de axiomas a evaluar')
@click.option('--pinj', 'es_pinj', is_flag=True, help='Entrada y candidato son inyecciones parciales')
@click.pass_context
@maneja_errores
def verify_cmd(ctx, entrada, candidato, field_name, dagger_name, k_max, output, familia, es_pinj):
    """Verifica un candidato contra los axiomas de una familia"""
    if familia == 'opposing':
        if es_pinj:
            raise InputError("La familia opposing se verifica sobre pares de matrices")
        par = schemas.parse_pair(schemas.load_json(entrada), cuerpo(field_name))
        cand = schemas.parse_pair(schemas.load_json(candidato), par.fwd.field)
        report = verify_opposing(par.fwd, par.bwd, cand.fwd, cand.bwd, k_max=k_max)
    elif es_pinj:
        x = schemas.parse_pinj(schemas.load_json(entrada))
        cand = schemas.parse_pinj(schemas.load_json(candidato))
        report = _reporte(familia, x, cand, None, k_max, PinjCategory())
    else:
        x = leer_matriz(entrada, field_name)
        cand = schemas.parse_matrix(schemas.load_json(candidato), x.field)
        mode = modo_dagger(dagger_name, x.field)
        report = _reporte(familia, x, cand, mode, k_max, None)

    logger.info(f"Verificación {familia}: fallan {report.failed() or 'ninguno'}")
    emitir({"result": report.all_pass, "index": report.minimal_index,
            "report": report.to_dict()}, output)
    if not report.all_pass:
        click.echo(f"El candidato no cumple {report.failed()}", err=True)
        ctx.exit(EXIT_NO_EXISTE)


@click.command('index', cls=GidkitCommand)
@click.argument('entrada', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@opciones_matriz
@opcion_dagger
@click.pass_context
@maneja_errores
def index_cmd(ctx, entrada, field_name, dagger_name, k_max, output):
    """Rango, ascenso, descenso e índices de una matriz"""
    f = leer_matriz(entrada, field_name)
    mode = modo_dagger(dagger_name, f.field)
    dd = dagger_drazin(f, mode)
    datos = {"rank": rank(f), "dagger_drazin_index": dd.index}
    if f.is_square:
        # Matriz cuadrada: el índice principal es el de Drazin
        d = drazin_inverse(f)
        datos.update(ascent=ascent(f), descent=descent(f), drazin_index=d.index)
        report = verify_drazin(f, d.inverse, k_max=k_max)
    else:
        report = verify_dagger_drazin(f, dd.inverse, mode, k_max=k_max)
    indice = datos.get('drazin_index', datos['dagger_drazin_index'])
    emitir_verificado(ctx, datos, indice, report, output)


COMANDOS = [verify_cmd, index_cmd]
