"""
Línea de órdenes: expand, pieri, hall-mult, schur, genfun, verify y dump-hall-table.
Los datos salen por stdout en el formato elegido; el registro va a stderr.
"""
import argparse
import json
import logging
import sys

from dhl import __version__, formato, ratfun
from dhl.combinat import parse_biparticion, parse_particion
from dhl.config import (
    FORMATO_POR_DEFECTO,
    FORMATOS,
    GRADO_MAXIMO,
    GRADO_POR_DEFECTO,
    GRADO_TOPE,
    SEMILLA_POR_DEFECTO,
    TABLA_HALL_TAMANO_MAXIMO,
)
from dhl.dhall import hall_multiply, hall_pieri, u, vhat, vhat_multiply
from dhl.dlambda import ESTRATEGIAS, double_hl, to_dhl_basis, vmon
from dhl.errores import ErrorDHL, ErrorEntrada, ErrorLimite
from dhl.genfun import IDENTIDADES, verify_identity
from dhl.hall import TABLA, TablaHall
from dhl.pieri import LADOS, pieri_horizontal, pieri_schur, pieri_vertical
from dhl.registro import configurar_logging
from dhl.schur import schur_laurent, verify_t0
from dhl.verificacion import SUITES, ejecutar_suite, resumen

logger = logging.getLogger(__name__)

TIPOS_CLI = ("horizontal", "vertical", "schur", "hall-row", "hall-column")


def _parser_comun():
    comun = argparse.ArgumentParser(add_help=False)
    comun.add_argument('--format', choices=FORMATOS, default=FORMATO_POR_DEFECTO,
                       help='Formato de salida (json, latex o plain)')
    comun.add_argument('--max-degree', type=int, default=None,
                       help=f'Cota de grado para series (por defecto {GRADO_MAXIMO}, tope {GRADO_TOPE})')
    comun.add_argument('--max-size', type=int, default=None,
                       help='Tamaño máximo de los barridos y de la tabla de Hall')
    comun.add_argument('--seed', type=int, default=SEMILLA_POR_DEFECTO,
                       help='Semilla de las suites con muestras aleatorias')
    comun.add_argument('--log', default=None, help='Archivo de registro adicional')
    comun.add_argument('--verbose', action='store_true', help='Registro en nivel DEBUG')
    return comun


def construir_parser() -> argparse.ArgumentParser:
    comun = _parser_comun()
    parser = argparse.ArgumentParser(
        prog='dhl',
        description='Funciones simétricas dobles y álgebra de Hall derivada de la aljaba de Jordan')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='orden', required=True)

    p = sub.add_parser('expand', parents=[comun], help='V_{λ,μ} en monomios (o v_{λ,μ} en la base V)')
    p.add_argument('--bip', required=True, help="Bipartición 'λ|μ', p. ej. '2,1|1' o '-|1'")
    p.add_argument('--inverse', action='store_true', help='Expandir el monomio v_{λ,μ} en la base V')
    p.add_argument('--vector', action='store_true', help='Admitir vectores enteros (V_{α,β})')
    p.add_argument('--strategy', choices=ESTRATEGIAS, default='mas', help='Orden de pelado')

    p = sub.add_parser('pieri', parents=[comun], help='Reglas de Pieri')
    p.add_argument('--bip', required=True, help="Bipartición 'ρ|ν'")
    p.add_argument('--r', type=int, required=True, help='Longitud de la fila o columna (>= 1)')
    p.add_argument('--side', choices=LADOS, default='plus')
    p.add_argument('--kind', choices=TIPOS_CLI, default='horizontal')

    p = sub.add_parser('hall-mult', parents=[comun], help='Producto en el álgebra de Hall derivada')
    p.add_argument('--m', required=True, help="Bipartición 'λ|μ' del primer factor")
    p.add_argument('--n', required=True, help="Bipartición 'ν|ν̃' del segundo factor")
    p.add_argument('--basis', choices=('u', 'vhat'), default='u',
                   help="'u': base [S^λ ⊕ S^μ[1]] en q; 'vhat': base V̂ en t = q⁻¹")
    p.add_argument('--q', default='formal', help="'formal' o un entero >= 2 en el que evaluar q")

    p = sub.add_parser('schur', parents=[comun], help='Función de Schur-Laurent s_{λ,μ}')
    p.add_argument('--lambda', dest='lam', required=True, help="Partición λ, p. ej. '2,1' o '-'")
    p.add_argument('--mu', required=True, help='Partición μ')
    p.add_argument('--check-t0', action='store_true', help='Comprobar s_{λ,μ} = V_{λ,μ}|_{t=0}')

    p = sub.add_parser('genfun', parents=[comun], help='Identidades de series generatrices')
    p.add_argument('--identity', required=True, choices=IDENTIDADES + ('all',))
    p.add_argument('--deg', type=int, default=GRADO_POR_DEFECTO, help='Grado total de truncamiento')

    p = sub.add_parser('verify', parents=[comun], help='Ejecutar una suite de verificación')
    p.add_argument('--suite', required=True, choices=tuple(SUITES) + ('all',))

    p = sub.add_parser('dump-hall-table', parents=[comun], help='Volcar la tabla de polinomios de Hall')
    p.add_argument('--salida', default=None, help='Archivo .json o .csv; sin él se escribe en stdout')
    p.add_argument('--cache', default=None, help='Memoria joblib de la tabla (se carga y se guarda)')
    return parser


def _evaluar_q(x, q, var):
    """Evalúa los coeficientes en q = q (en t, en t = 1/q)."""
    valor = q if var == "q" else f"1/{q}"
    return x.mapear(lambda c: ratfun.constante(ratfun.evaluar(c, valor), var))


def _leer_q(texto):
    if texto == 'formal':
        return None
    try:
        q = int(texto)
    except ValueError:
        raise ErrorEntrada(f"--q debe ser 'formal' o un entero, no '{texto}'")
    if q < 2:
        raise ErrorEntrada(f"--q debe ser >= 2, recibido {q}")
    return q


def _orden_expand(args):
    if args.vector:
        alfa, beta = parse_biparticion(args.bip, vector=True)
        if args.inverse:
            raise ErrorEntrada("--inverse requiere una bipartición, no vectores")
        return formato.elemento(double_hl(alfa, beta, args.strategy), args.format), 0
    bip = parse_biparticion(args.bip)
    if args.inverse:
        return formato.elemento(to_dhl_basis(vmon(bip)), args.format), 0
    return formato.elemento(double_hl(bip.mas, bip.menos, args.strategy), args.format), 0


def _orden_pieri(args):
    rho, nu = parse_biparticion(args.bip)
    if args.kind == 'horizontal':
        resultado = pieri_horizontal(rho, nu, args.r, args.side)
    elif args.kind == 'vertical':
        resultado = pieri_vertical(rho, nu, args.r, args.side)
    elif args.kind == 'schur':
        resultado = pieri_schur(rho, nu, args.r, args.side)
    else:
        tipo = 'row' if args.kind == 'hall-row' else 'column'
        resultado = hall_pieri(rho, nu, args.r, tipo, args.side)
    return formato.elemento(resultado, args.format), 0


def _orden_hall_mult(args):
    M, N = parse_biparticion(args.m), parse_biparticion(args.n)
    q = _leer_q(args.q)
    if args.basis == 'u':
        resultado = hall_multiply(u(M, "q"), u(N, "q"))
    else:
        resultado = vhat_multiply(vhat(M), vhat(N))
    if q is not None:
        resultado = _evaluar_q(resultado, q, resultado.var)
    return formato.elemento(resultado, args.format), 0


def _orden_schur(args):
    lam, mu = parse_particion(args.lam), parse_particion(args.mu)
    salida = formato.elemento(schur_laurent(lam, mu), args.format)
    if args.check_t0:
        ok = verify_t0(lam, mu)
        logger.info(f"{'✓' if ok else '❌'} s_{{{lam},{mu}}} = V|_(t=0): {ok}")
        return salida, 0 if ok else 1
    return salida, 0


def _orden_genfun(args):
    limite = GRADO_MAXIMO if args.max_degree is None else args.max_degree
    if limite > GRADO_TOPE:
        raise ErrorLimite(f"--max-degree {limite} supera el tope absoluto {GRADO_TOPE}")
    if args.deg < 0 or args.deg > limite:
        raise ErrorLimite(f"--deg debe estar entre 0 y {limite}, recibido {args.deg}")
    formateador = lambda x: formato.elemento_texto(x)  # noqa: E731
    nombres = IDENTIDADES if args.identity == 'all' else (args.identity,)
    informes = [verify_identity(nombre, args.deg, formateador) for nombre in nombres]
    codigo = 0 if all(i["status"] == "pass" for i in informes) else 1
    if args.format == 'json':
        datos = informes[0] if len(informes) == 1 else informes
        return json.dumps(datos, indent=2, ensure_ascii=False), codigo
    return "\n\n".join(formato.informe(i, args.format) for i in informes), codigo


def _orden_verify(args):
    if args.max_size is not None and not 0 <= args.max_size <= GRADO_TOPE:
        raise ErrorLimite(f"--max-size debe estar entre 0 y {GRADO_TOPE}, recibido {args.max_size}")
    nombres = tuple(SUITES) if args.suite == 'all' else (args.suite,)
    resultados = [ejecutar_suite(nombre, args.max_size, args.seed) for nombre in nombres]
    codigo = 0 if all(r["failures"] == 0 for r in resultados) else 1
    if args.format == 'json':
        datos = resultados[0] if len(resultados) == 1 else resultados
        return json.dumps(datos, indent=2, ensure_ascii=False), codigo
    if len(resultados) == 1:
        return formato.informe(resultados[0], args.format), codigo
    return resumen(resultados).to_string(index=False), codigo


def _tabla_latex(df) -> str:
    return "\n".join(
        f"F^{{{fila['lambda']}}}_{{{fila['mu']};{fila['nu']}}} = {fila['F']}"
        for _, fila in df.iterrows()
    )


def _orden_dump(args):
    n = TABLA_HALL_TAMANO_MAXIMO if args.max_size is None else args.max_size
    if n < 0 or n > TABLA_HALL_TAMANO_MAXIMO:
        raise ErrorLimite(f"--max-size debe estar entre 0 y {TABLA_HALL_TAMANO_MAXIMO}, recibido {n}")
    if args.cache:
        try:
            TABLA.incorporar(TablaHall.cargar(args.cache))
        except FileNotFoundError:
            logger.info(f"No existe la memoria {args.cache}; se creará")
    TABLA.construir(n)
    if args.cache:
        TABLA.guardar(args.cache)
    tabla = TablaHall()
    tabla.entradas = {
        clave: F for clave, F in TABLA.entradas.items()
        if sum(clave[2]) <= n
    }
    if args.salida:
        tabla.volcar(args.salida)
        return f"Tabla de Hall escrita en {args.salida} ({len(tabla)} entradas)", 0
    df = tabla.a_dataframe()
    if args.format == 'json':
        return json.dumps(df.to_dict(orient="records"), indent=2, ensure_ascii=False), 0
    if args.format == 'latex':
        return _tabla_latex(df), 0
    return df.to_string(index=False), 0


ORDENES = {
    'expand': _orden_expand,
    'pieri': _orden_pieri,
    'hall-mult': _orden_hall_mult,
    'schur': _orden_schur,
    'genfun': _orden_genfun,
    'verify': _orden_verify,
    'dump-hall-table': _orden_dump,
}


def main(argv=None) -> int:
    """
    Punto de entrada de la línea de órdenes.
    - 0: éxito o verificaciones superadas
    - 1: alguna verificación falla o error interno
    - 2: uso incorrecto (lo emite argparse)
    """
    parser = construir_parser()
    args = parser.parse_args(argv)
    configurar_logging('DEBUG' if args.verbose else 'INFO', args.log)
    logger.debug(f"Orden {args.orden} con {vars(args)}")
    try:
        salida, codigo = ORDENES[args.orden](args)
    except (ErrorEntrada, ErrorLimite) as e:
        parser.error(str(e))
    except ErrorDHL as e:
        logger.error(f"❌ {e}")
        return 1
    print(salida)
    return codigo


if __name__ == "__main__":
    sys.exit(main())
