"""
================================================================================
Utilidades comunes de los comandos
Incluye: clases de comando, decoradores de errores, opciones, emisión de JSON
================================================================================
"""

import logging
from functools import wraps
from pathlib import Path
from typing import Any, Dict, Optional

import click

from gidkit.errors import GidkitError
from gidkit.matrix import DaggerMode, Matrix
from gidkit.scalar import Field
from gidkit import schemas

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO_EXISTE = 2


# ================================================================================
# CLASES DE COMANDO
# ================================================================================

class _UsoComoErrorDeEntrada:
    """Los errores de uso salen con código 1; el 2 queda para la no existencia"""

    def make_context(self, *args, **kwargs):
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = EXIT_ERROR
            raise


class GidkitCommand(_UsoComoErrorDeEntrada, click.Command):
    pass


class GidkitGroup(_UsoComoErrorDeEntrada, click.Group):
    command_class = GidkitCommand

    def resolve_command(self, ctx, args):
        try:
            return super().resolve_command(ctx, args)
        except click.UsageError as e:
            e.exit_code = EXIT_ERROR
            raise


# ================================================================================
# DECORADORES
# ================================================================================

def maneja_errores(func):
    """Decorador que convierte los errores del dominio en salida con código 1"""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except GidkitError as e:
            logger.error(f"{type(e).__name__}: {e}")
            raise click.ClickException(f"{type(e).__name__}: {e}")
    return wrapper


def opciones_matriz(func):
    """Opciones --field, --k-max y --output"""
    func = click.option('--output', '-o', type=click.Path(dir_okay=False, path_type=Path),
                        default=None, help='Archivo de salida (por defecto stdout)')(func)
    func = click.option('--k-max', type=click.IntRange(min=0), default=None,
                        help='Cota de búsqueda del índice (sobrescribe GIDKIT_KMAX)')(func)
    func = click.option('--field', 'field_name', default=None,
                        type=click.Choice([f.value for f in Field]),
                        help='Cuerpo (por defecto el del archivo)')(func)
    return func


def opcion_dagger(func):
    """Opción --dagger, sólo en los comandos que usan el dagger"""
    return click.option('--dagger', 'dagger_name', default='transpose',
                        type=click.Choice([m.value for m in DaggerMode]),
                        help='Dagger: transpuesta o transpuesta conjugada')(func)


# ================================================================================
# ENTRADA Y SALIDA
# ================================================================================

def cuerpo(field_name: Optional[str]) -> Optional[Field]:
    return Field(field_name) if field_name else None


def modo_dagger(dagger_name: str, field: Field) -> DaggerMode:
    """La transpuesta conjugada sólo tiene sentido en Qi y C64"""
    modo = DaggerMode(dagger_name)
    if modo is DaggerMode.CONJUGATE_TRANSPOSE and field is Field.Q:
        raise click.ClickException(
            "Combinación no soportada: --dagger conjugate-transpose requiere --field Qi o C64"
        )
    return modo


def leer_matriz(ruta: Path, field_name: Optional[str]) -> Matrix:
    return schemas.parse_matrix(schemas.load_json(ruta), cuerpo(field_name))


def emitir(datos: Dict[str, Any], output: Optional[Path]) -> None:
    texto = schemas.dump(datos)
    if output is None:
        click.echo(texto)
    else:
        output.write_text(texto + '\n', encoding='utf-8')
        logger.info(f"Resultado escrito en {output}")


def emitir_verificado(ctx: click.Context, resultado: Any, index: Optional[int], report,
                      output: Optional[Path], **extra) -> None:
    """Nunca se emite una inversa cuyo reporte no pase todos los axiomas"""
    datos = {"result": resultado if report.all_pass else None, "index": index,
             "report": report.to_dict()}
    datos.update(extra)
    emitir(datos, output)
    if not report.all_pass:
        logger.error(f"Verificación fallida: {report.failed()}")
        click.echo(f"Error: la verificación falló en {report.failed()}", err=True)
        ctx.exit(EXIT_ERROR)
