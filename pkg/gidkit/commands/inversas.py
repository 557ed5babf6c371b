"""
================================================================================
Comandos de inversas sobre matrices
================================================================================

Cada comando lee un JSON, calcula la inversa pedida, la vuelve a verificar
con el motor de axiomas y escribe {"result", "index", "report"}.
"""

import logging
from pathlib import Path

import click

from gidkit import schemas
from gidkit.commands.comun import (
    EXIT_NO_EXISTE, GidkitCommand, cuerpo, emitir, emitir_verificado, leer_matriz,
    maneja_errores, modo_dagger, opcion_dagger, opciones_matriz
)
from gidkit.dagger_inverse import dagger_drazin, dagger_group_inverse, moore_penrose
from gidkit.drazin import drazin_inverse, group_inverse
from gidkit.errors import NoDaggerGroupInverse, NoGroupInverse
from gidkit.opposing import cofree_equivalence, opposing_drazin
from gidkit.verifier import (
    verify_dagger_drazin, verify_dagger_group, verify_drazin, verify_group, verify_mp,
    verify_opposing
)

logger = logging.getLogger(__name__)

ENTRADA = click.argument('entrada', type=click.Path(exists=True, dir_okay=False, path_type=Path))


# ================================================================================
# DRAZIN Y GRUPO
# ================================================================================

@click.command('drazin', cls=GidkitCommand)
@ENTRADA
@opciones_matriz
@click.pass_context
@maneja_errores
def drazin_cmd(ctx, entrada, field_name, k_max, output):
    """Inversa de Drazin de una matriz cuadrada"""
    x = leer_matriz(entrada, field_name)
    resultado = drazin_inverse(x)
    report = verify_drazin(x, resultado.inverse, k_max=k_max)
    logger.info(f"Drazin {x.rows}×{x.cols}: índice {resultado.index}")
    emitir_verificado(ctx, schemas.matrix_to_json(resultado.inverse), resultado.index,
                      report, output)


@click.command('group', cls=GidkitCommand)
@ENTRADA
@opciones_matriz
@click.pass_context
@maneja_errores
def group_cmd(ctx, entrada, field_name, k_max, output):
    """Inversa de grupo (índice de Drazin <= 1)"""
    x = leer_matriz(entrada, field_name)
    try:
        inversa = group_inverse(x)
    except NoGroupInverse as e:
        # El reporte muestra qué axioma falla con la inversa de Drazin
        report = verify_group(x, drazin_inverse(x).inverse)
        emitir({"result": None, "index": e.index, "report": report.to_dict()}, output)
        click.echo(f"Sin inversa de grupo: {e}", err=True)
        ctx.exit(EXIT_NO_EXISTE)
    emitir_verificado(ctx, schemas.matrix_to_json(inversa), None, verify_group(x, inversa), output)


# ================================================================================
# †-DRAZIN, †-GRUPO Y MOORE-PENROSE
# ================================================================================

@click.command('dagger-drazin', cls=GidkitCommand)
@ENTRADA
@opciones_matriz
@opcion_dagger
@click.option('--side', is_flag=True, help='Incluir las condiciones laterales [D†.5]-[D†.8]')
@click.pass_context
@maneja_errores
def dagger_drazin_cmd(ctx, entrada, field_name, dagger_name, k_max, output, side):
    """Inversa †-Drazin de una matriz rectangular"""
    f = leer_matriz(entrada, field_name)
    mode = modo_dagger(dagger_name, f.field)
    resultado = dagger_drazin(f, mode)
    report = verify_dagger_drazin(f, resultado.inverse, mode, k_max=k_max, side=side)
    emitir_verificado(ctx, schemas.matrix_to_json(resultado.inverse), resultado.index,
                      report, output)


@click.command('dagger-group', cls=GidkitCommand)
@ENTRADA
@opciones_matriz
@opcion_dagger
@click.pass_context
@maneja_errores
def dagger_group_cmd(ctx, entrada, field_name, dagger_name, k_max, output):
    """†-Inversa de grupo (índice †-Drazin <= 1)"""
    f = leer_matriz(entrada, field_name)
    mode = modo_dagger(dagger_name, f.field)
    try:
        inversa = dagger_group_inverse(f, mode)
    except NoDaggerGroupInverse as e:
        report = verify_dagger_group(f, dagger_drazin(f, mode).inverse, mode)
        emitir({"result": None, "index": e.index, "report": report.to_dict()}, output)
        click.echo(f"Sin †-inversa de grupo: {e}", err=True)
        ctx.exit(EXIT_NO_EXISTE)
    emitir_verificado(ctx, schemas.matrix_to_json(inversa), None,
                      verify_dagger_group(f, inversa, mode), output)


@click.command('mp', cls=GidkitCommand)
@ENTRADA
@opciones_matriz
@opcion_dagger
@click.pass_context
@maneja_errores
def mp_cmd(ctx, entrada, field_name, dagger_name, k_max, output):
    """Inversa de Moore-Penrose, si existe para el dagger elegido"""
    f = leer_matriz(entrada, field_name)
    mode = modo_dagger(dagger_name, f.field)
    resultado = moore_penrose(f, mode)
    if not resultado.exists:
        # El candidato natural es f^∂; su reporte exhibe la falla de [MP.1]
        candidato = dagger_drazin(f, mode)
        report = verify_mp(f, candidato.inverse, mode)
        emitir({"result": None, "index": candidato.index, "report": report.to_dict(),
                "witness": schemas.matrix_to_json(resultado.witness)}, output)
        click.echo("Sin inversa de Moore-Penrose: f·f^∂·f != f", err=True)
        ctx.exit(EXIT_NO_EXISTE)
    emitir_verificado(ctx, schemas.matrix_to_json(resultado.inverse), None,
                      verify_mp(f, resultado.inverse, mode), output)


# ================================================================================
# PARES OPUESTOS
# ================================================================================

@click.command('opposing', cls=GidkitCommand)
@ENTRADA
@opciones_matriz
@click.option('--cofree', is_flag=True, help='Comparar además con (f,g)^∂ en MAT^⇄')
@click.pass_context
@maneja_errores
def opposing_cmd(ctx, entrada, field_name, k_max, output, cofree):
    """Inversa de Drazin de un par opuesto (f, g)"""
    par = schemas.parse_pair(schemas.load_json(entrada), cuerpo(field_name))
    resultado = opposing_drazin(par)
    report = verify_opposing(par.fwd, par.bwd, resultado.f_over_g, resultado.g_over_f,
                             k_max=k_max)
    extra = {}
    if cofree:
        registro = cofree_equivalence(par)
        extra['cofree'] = {"agree": registro.agree, "indices_match": registro.indices_match,
                           "dagger_index": registro.dagger_index}
    emitir_verificado(ctx, schemas.pair_to_json(resultado.as_pair()), resultado.index,
                      report, output, **extra)


COMANDOS = [drazin_cmd, group_cmd, dagger_drazin_cmd, dagger_group_cmd, mp_cmd, opposing_cmd]
