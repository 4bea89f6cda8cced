"""
Suites de verificación con nombre: cada una recorre un barrido acotado de casos y
comprueba una propiedad de la biblioteca. Las usan la orden `verify` y las pruebas.
"""
import logging
import random

import pandas as pd

from dhl import ratfun
from dhl.combinat import (
    Comparacion,
    biparticiones_hasta,
    clave_canonica,
    conjugate,
    contiene,
    dominance_compare,
    aplicar_operador,
    is_horizontal_strip,
    is_vertical_strip,
    particiones,
    particiones_hasta,
    tamano,
    tiras_horizontales_arriba,
)
from dhl.config import ORACULO_PRIMOS, SEMILLA_POR_DEFECTO, TAMANOS_SUITE
from dhl.dhall import (
    TIPOS_PIERI,
    automorfismo_vhat_prima,
    comprobar_tabla1,
    compatibilidad_inclusion,
    generated_by_rows,
    hall_multiply,
    hall_pieri,
    hall_pieri_numbers,
    phi_isomorphism,
    u,
    vhat,
    vhat_multiply,
)
from dhl.dlambda import (
    ESTRATEGIAS,
    double_hl,
    dhl_multiply,
    from_dhl_basis,
    mirror_check,
    to_dhl_basis,
    vmon,
    vmon_multiply,
    vmon_specialize,
)
from dhl.elementos import DHL, SCHUR, ElementoAlgebra
from dhl.errores import ErrorEntrada
from dhl.genfun import IDENTIDADES, verify_identity
from dhl.hall import (
    comprobar_oraculo,
    hall_column_coeff,
    hall_pieri_row,
    hall_polynomial,
    aut_order,
    riedtmann_peng,
)
from dhl.pieri import (
    LADOS,
    b_poly,
    phi_skew,
    pieri_horizontal,
    pieri_schur,
    pieri_vertical,
    psi_skew,
    simetria_lados,
)
from dhl.schur import producto_por_h, schur_laurent, verify_t0

logger = logging.getLogger(__name__)


def _fmt(*partes) -> str:
    return " ".join(str(p) for p in partes)


# ---------------------------------------------------------------- combinat

def _suite_conjugate(n, rng):
    for lam in particiones_hasta(n):
        yield _fmt(lam), conjugate(conjugate(lam)) == lam and tamano(conjugate(lam)) == tamano(lam)


def _celdas(lam):
    return {(i, j) for i, parte in enumerate(lam) for j in range(parte)}


def _suite_strips(n, rng):
    for nu in particiones_hasta(n):
        for lam in particiones_hasta(tamano(nu)):
            if not contiene(nu, lam):
                continue
            diferencia = _celdas(nu) - _celdas(lam)
            columnas = [j for _, j in diferencia]
            filas = [i for i, _ in diferencia]
            horizontal = len(columnas) == len(set(columnas))
            vertical = len(filas) == len(set(filas))
            yield _fmt(lam, nu), (is_horizontal_strip(lam, nu) == horizontal
                                  and is_vertical_strip(lam, nu) == vertical)


def _suite_dominance(n, rng):
    todas = list(biparticiones_hasta(n))
    mayor = {
        (a, b): dominance_compare(a, b) in (Comparacion.DOMINA, Comparacion.IGUAL)
        for a in todas for b in todas
    }
    for a in todas:
        ok = dominance_compare(a, a) == Comparacion.IGUAL
        for b in todas:
            if a != b and mayor[(a, b)] and mayor[(b, a)]:
                ok = False
            if mayor[(a, b)]:
                ok = ok and all(mayor[(a, c)] for c in todas if mayor[(b, c)])
        yield _fmt(a), ok


def _suite_operators(n, rng):
    for bip in biparticiones_hasta(n):
        largo = max(len(bip.mas), len(bip.menos)) + 1
        for tipo in ("R+", "R-", "L"):
            for i in range(1, largo + 1):
                for j in range(1, largo + 1):
                    if tipo != "L" and i >= j:
                        continue
                    resultado = aplicar_operador(tipo, i, j, bip)
                    if resultado is None:
                        continue
                    yield _fmt(tipo, i, j, bip), dominance_compare(resultado, bip) == Comparacion.DOMINA


# ---------------------------------------------------------------- ratfun

def _aleatoria(rng, var="t"):
    x = ratfun.generador(var)
    terminos = rng.randint(1, 8)
    num = sum((rng.randint(-5, 5) * x ** rng.randint(-3, 3) for _ in range(terminos)),
              ratfun.campo(var).zero)
    den = sum((rng.randint(1, 5) * x ** rng.randint(0, 3) for _ in range(rng.randint(1, 3))),
              ratfun.campo(var).zero)
    return num / den


def _suite_ratfun(n, rng):
    for k in range(n):
        a, b, c = _aleatoria(rng), _aleatoria(rng), _aleatoria(rng)
        ok = (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c
        if a:
            ok = ok and a * (ratfun.campo("t").one / a) == 1
        for regla in ("t->1/q", "t->v^-2", "t=2"):
            try:
                ok = ok and ratfun.substitute(a * b, regla) == \
                    ratfun.substitute(a, regla) * ratfun.substitute(b, regla)
            except ZeroDivisionError:
                # polo en el valor elegido
                continue
        yield _fmt("muestra", k), ok


def _suite_qbinom(n, rng):
    t = ratfun.generador("t")
    for m in range(n + 1):
        for r in range(m + 1):
            esperado = ratfun.campo("t").one
            for i in range(1, r + 1):
                esperado *= (1 - t ** (m - r + i)) / (1 - t ** i)
            yield _fmt(m, r), ratfun.qbinom_plus(m, r) == esperado


# ---------------------------------------------------------------- dlambda

def _suite_triangularity(n, rng):
    for bip in biparticiones_hasta(n):
        expansion = double_hl(bip.mas, bip.menos)
        ok = expansion.coeficiente(bip) == 1 and all(
            dominance_compare(otra, bip) == Comparacion.DOMINA
            for otra in expansion.terminos if otra != bip
        )
        yield _fmt(bip), ok


def _suite_roundtrip(n, rng):
    for bip in biparticiones_hasta(n):
        V = ElementoAlgebra.monomio(DHL, "t", bip)
        ida = to_dhl_basis(from_dhl_basis(V)) == V
        vuelta = from_dhl_basis(to_dhl_basis(vmon(bip))) == vmon(bip)
        yield _fmt(bip), ida and vuelta


def _suite_order(n, rng):
    for bip in biparticiones_hasta(n):
        referencia = double_hl(bip.mas, bip.menos, "mas")
        yield _fmt(bip), all(double_hl(bip.mas, bip.menos, e) == referencia for e in ESTRATEGIAS)


def _coeficientes_enteros(x) -> bool:
    return all(ratfun.es_polinomio(c) and c.numer.is_ground and ratfun.evaluar(c, 0).is_integer
               for c in x.terminos.values())


def _suite_specialization(n, rng):
    for lam in particiones_hasta(n):
        especial = vmon_specialize(double_hl(lam, ()), 0)
        yield _fmt(lam), _coeficientes_enteros(especial) and especial == schur_laurent(lam, ())


def _suite_mirror(n, rng):
    for base in particiones_hasta(n):
        for otra in particiones_hasta(n):
            for cota in range(n + 1):
                for identidad in ("I", "II"):
                    if identidad == "II" and cota > tamano(base):
                        continue
                    for lado in ("mas", "menos"):
                        yield (_fmt(identidad, lado, base, otra, cota),
                               mirror_check(identidad, base, otra, cota, lado))


# ---------------------------------------------------------------- pieri

def _suite_phipsi(n, rng):
    for lam in particiones_hasta(n):
        for k in range(tamano(lam) + 1):
            for rho in particiones(tamano(lam) - k):
                if is_horizontal_strip(rho, lam):
                    esperado = phi_skew(lam, rho) * b_poly(rho) / b_poly(lam)
                    yield _fmt(lam, rho), psi_skew(lam, rho) == esperado


def _pares(n):
    for bip in biparticiones_hasta(n):
        yield bip.mas, bip.menos


def _suite_pieri_horizontal(n, rng):
    for rho, nu in _pares(n):
        V = from_dhl_basis(ElementoAlgebra.monomio(DHL, "t", (rho, nu)))
        for r in range(1, 4):
            for lado in LADOS:
                generador = vmon(((r,), ()) if lado == "plus" else ((), (r,)))
                directo = to_dhl_basis(vmon_multiply(V, generador))
                yield _fmt(rho, nu, r, lado), directo == pieri_horizontal(rho, nu, r, lado)


def _suite_pieri_vertical(n, rng):
    for rho, nu in _pares(n):
        V = from_dhl_basis(ElementoAlgebra.monomio(DHL, "t", (rho, nu)))
        for r in range(1, 4):
            columna = (1,) * r
            for lado in LADOS:
                generador = double_hl(columna, ()) if lado == "plus" else double_hl((), columna)
                directo = to_dhl_basis(vmon_multiply(V, generador))
                yield _fmt(rho, nu, r, lado), directo == pieri_vertical(rho, nu, r, lado)


def _suite_pieri_schur(n, rng):
    for rho, nu in _pares(n):
        for r in range(1, 4):
            for lado in LADOS:
                regla = pieri_schur(rho, nu, r, lado)
                en_cero = vmon_specialize(pieri_horizontal(rho, nu, r, lado), 0)
                ok = regla == en_cero.mapear(lambda c: c, base=SCHUR)
                ok = ok and regla == producto_por_h(rho, nu, r, lado)
                yield _fmt(rho, nu, r, lado), ok


def _suite_pieri_symmetry(n, rng):
    for rho, nu in _pares(n):
        for r in range(1, 4):
            yield _fmt(rho, nu, r), simetria_lados(rho, nu, r)


# ---------------------------------------------------------------- hall

def _triples(n):
    for total in range(n + 1):
        for k in range(total + 1):
            for mu in particiones(k):
                for nu in particiones(total - k):
                    for lam in particiones(total):
                        yield mu, nu, lam


def _suite_hall_symmetry(n, rng):
    for mu, nu, lam in _triples(n):
        yield _fmt(mu, nu, lam), hall_polynomial(mu, nu, lam) == hall_polynomial(nu, mu, lam)


def _suite_hall_oracle(n, rng):
    for mu, nu, lam in _triples(n):
        for q in ORACULO_PRIMOS:
            yield _fmt(mu, nu, lam, q), comprobar_oraculo(mu, nu, lam, q)


def _suite_hall_pieri(n, rng):
    for nu in particiones_hasta(n):
        for r in range(1, tamano(nu) + 1):
            for mu in particiones(tamano(nu) - r):
                fila = hall_pieri_row(mu, r, nu) == hall_polynomial(mu, (r,), nu) * aut_order((r,))
                columna = hall_column_coeff(mu, r, nu) == hall_polynomial(mu, (1,) * r, nu)
                yield _fmt(mu, r, nu), fila and columna


def _suite_riedtmann_peng(n, rng):
    for mu, nu, lam in _triples(n):
        for q in ORACULO_PRIMOS:
            yield _fmt(mu, nu, lam, q), riedtmann_peng(mu, nu, lam, q)


def _suite_hall_support(n, rng):
    for mu in particiones_hasta(n):
        for r in range(1, n - tamano(mu) + 1):
            soporte = {lam for lam in particiones(tamano(mu) + r) if hall_polynomial(mu, (r,), lam)}
            yield _fmt(mu, r), soporte == set(tiras_horizontales_arriba(mu, r))


# ---------------------------------------------------------------- dhall

def _generador_hall(r, tipo, lado):
    forma = (r,) if tipo == "row" else (1,) * r
    return (forma, ()) if lado == "plus" else ((), forma)


def _suite_dhall_pieri(n, rng):
    for rho, nu in _pares(n):
        for r in range(1, 4):
            for tipo in TIPOS_PIERI:
                for lado in LADOS:
                    generico = vhat_multiply(vhat((rho, nu)), vhat(_generador_hall(r, tipo, lado)))
                    yield _fmt(rho, nu, r, tipo, lado), generico == hall_pieri(rho, nu, r, tipo, lado)


def _suite_hall_numbers(n, rng):
    for rho, nu in _pares(n):
        for r in range(1, 3):
            for tipo in TIPOS_PIERI:
                for lado in LADOS:
                    producto = hall_multiply(u((rho, nu), "q"), u(_generador_hall(r, tipo, lado), "q"))
                    cerrada = hall_pieri_numbers(rho, nu, r, tipo, lado)
                    yield _fmt(rho, nu, r, tipo, lado), producto == cerrada


def _suite_isomorphism(n, rng):
    indices = sorted(biparticiones_hasta(n), key=clave_canonica)
    for M in indices:
        for N in indices:
            if clave_canonica(M)[0] + clave_canonica(N)[0] > n:
                continue
            izquierda = phi_isomorphism(vhat_multiply(vhat(M), vhat(N)))
            derecha = dhl_multiply(phi_isomorphism(vhat(M)), phi_isomorphism(vhat(N)))
            yield _fmt(M, N), izquierda == derecha


def _suite_table1(n, rng):
    for r in range(2, n + 1):
        for t in range(2, n + 1):
            for a in range(3):
                for b in range(3):
                    yield _fmt(r, t, a, b), comprobar_tabla1(r, t, a, b)


def _suite_generation(n, rng):
    yield _fmt("tamaño", n), generated_by_rows(n)


def _suite_embeddings(n, rng):
    for mu in particiones_hasta(n):
        for nu in particiones_hasta(n - tamano(mu)):
            for lado in LADOS:
                yield _fmt(mu, nu, lado), compatibilidad_inclusion(mu, nu, lado)
    indices = list(biparticiones_hasta(n))
    for M in indices:
        for N in indices:
            if sum(map(tamano, M + N)) <= n:
                yield _fmt("V̂'", M, N), automorfismo_vhat_prima(M, N)


# ---------------------------------------------------------------- schur / genfun

def _suite_schur_t0(n, rng):
    for bip in biparticiones_hasta(n):
        enteros = _coeficientes_enteros(schur_laurent(bip.mas, bip.menos))
        yield _fmt(bip), enteros and verify_t0(bip.mas, bip.menos)


def _suite_genfun(n, rng):
    for identidad in IDENTIDADES:
        yield _fmt(identidad, n), verify_identity(identidad, n)["status"] == "pass"


SUITES = {
    "conjugate": _suite_conjugate,
    "strips": _suite_strips,
    "dominance": _suite_dominance,
    "operators": _suite_operators,
    "ratfun": _suite_ratfun,
    "qbinom": _suite_qbinom,
    "triangularity": _suite_triangularity,
    "roundtrip": _suite_roundtrip,
    "order": _suite_order,
    "specialization": _suite_specialization,
    "mirror": _suite_mirror,
    "phipsi": _suite_phipsi,
    "pieri-horizontal": _suite_pieri_horizontal,
    "pieri-vertical": _suite_pieri_vertical,
    "pieri-schur": _suite_pieri_schur,
    "pieri-symmetry": _suite_pieri_symmetry,
    "hall-symmetry": _suite_hall_symmetry,
    "hall-oracle": _suite_hall_oracle,
    "hall-pieri": _suite_hall_pieri,
    "riedtmann-peng": _suite_riedtmann_peng,
    "hall-support": _suite_hall_support,
    "dhall-pieri": _suite_dhall_pieri,
    "hall-numbers": _suite_hall_numbers,
    "isomorphism": _suite_isomorphism,
    "table1": _suite_table1,
    "generation": _suite_generation,
    "embeddings": _suite_embeddings,
    "schur-t0": _suite_schur_t0,
    "genfun": _suite_genfun,
}


def ejecutar_suite(nombre: str, tamano_maximo=None, semilla: int = SEMILLA_POR_DEFECTO) -> dict:
    """
    Ejecuta una suite y devuelve {suite, size, cases, failures, first_failure}.

    Args:
        nombre: Nombre de la suite (ver SUITES)
        tamano_maximo: Tamaño del barrido; por defecto el de config.TAMANOS_SUITE
        semilla: Semilla de las suites con muestras aleatorias
    """
    if nombre not in SUITES:
        raise ErrorEntrada(f"Suite desconocida: '{nombre}' (opciones: {', '.join(SUITES)})")
    n = TAMANOS_SUITE[nombre] if tamano_maximo is None else tamano_maximo
    if n < 0:
        raise ErrorEntrada(f"El tamaño de la suite debe ser >= 0, recibido {n}")
    rng = random.Random(semilla)
    logger.info(f"Ejecutando la suite {nombre} (tamaño {n})")
    casos = fallos = 0
    primer_fallo = None
    for caso, ok in SUITES[nombre](n, rng):
        casos += 1
        if not ok:
            fallos += 1
            if primer_fallo is None:
                primer_fallo = caso
                logger.warning(f"⚠️ {nombre}: falla el caso {caso}")
    if fallos:
        logger.error(f"❌ {nombre}: {fallos} de {casos} casos fallan")
    else:
        logger.info(f"✓ {nombre}: {casos} casos correctos")
    return {
        "suite": nombre,
        "size": n,
        "cases": casos,
        "failures": fallos,
        "first_failure": primer_fallo,
    }


def resumen(resultados) -> pd.DataFrame:
    """Tabla con una fila por suite ejecutada."""
    return pd.DataFrame(list(resultados), columns=["suite", "size", "cases", "failures", "first_failure"])
