"""
Álgebra de Hall derivada de la aljaba de Jordan.

Las constantes de estructura de la base [S^λ ⊕ S^μ[1]] se calculan en q con la suma
séxtuple de números de Hall y se llevan a t (q ↦ t⁻¹) o a v (q ↦ v²) sólo al multiplicar.
También: la base renormalizada V̂, las reglas de Pieri del lado de Hall, el isomorfismo Φ
con DΛ_t y las comprobaciones de la tabla del producto de ganchos.
"""
import logging
from collections import defaultdict
from functools import cache

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from dhl import ratfun
from dhl.combinat import (
    Biparticion,
    VACIA,
    biparticiones_hasta,
    clave_canonica,
    n_stat,
    particion,
    particiones,
    tamano,
)
from dhl.elementos import DHL, HALL_U, HALL_VHAT, ElementoAlgebra
from dhl.errores import ErrorEntrada, ErrorInterno
from dhl.hall import TABLA, aut_order, classical_multiply, hall_polynomial
from dhl.pieri import pieri_horizontal, pieri_vertical

logger = logging.getLogger(__name__)

HALL_VHAT_PRIMA = "HallVhat'"
TIPOS_PIERI = ("row", "column")

_SUSTITUCION = {"q": None, "t": "q->1/t", "v": "q->v^2"}


def _bip(x) -> Biparticion:
    return Biparticion(particion(x[0]), particion(x[1]))


def _en_variable(G, var: str):
    if var not in _SUSTITUCION:
        raise ErrorEntrada(f"Variable no admitida para el álgebra de Hall: '{var}'")
    regla = _SUSTITUCION[var]
    return G if regla is None else ratfun.substitute(G, regla)


def _potencia_t(var: str, n: int):
    """t^n escrito en la variable `var` (t = q⁻¹ = v⁻²)."""
    exponente = {"t": n, "q": -n, "v": -2 * n}[var]
    return ratfun.potencia(var, exponente)


def _fila_hall(mu, nu) -> dict:
    return TABLA.fila(mu, nu)


@cache
def fila_derivada(M: Biparticion, N: Biparticion) -> dict:
    """
    Todas las constantes G^L_{MN}(q) no nulas para M, N fijos, recorriendo los seis
    módulos (A₀, A₁, B₀, B₁, C₀, C₁) con tamaños forzados por los seis números de Hall.
    """
    M0, M1 = M
    N0, N1 = N
    m0, m1, n0, n1 = tamano(M0), tamano(M1), tamano(N0), tamano(N1)
    acumulado = defaultdict(lambda: ratfun.campo("q").zero)
    for a0 in range(min(m0, n1) + 1):
        b0, c1 = m0 - a0, n1 - a0
        for c0 in range(max(0, n0 - m1), n0 + 1):
            a1 = n0 - c0
            b1 = m1 - a1
            for A0 in particiones(a0):
                for B0 in particiones(b0):
                    f_m0 = hall_polynomial(A0, B0, M0)
                    if not f_m0:
                        continue
                    for C1 in particiones(c1):
                        f_n1 = hall_polynomial(C1, A0, N1)
                        if not f_n1:
                            continue
                        for C0 in particiones(c0):
                            for A1 in particiones(a1):
                                f_n0 = hall_polynomial(C0, A1, N0)
                                if not f_n0:
                                    continue
                                for B1 in particiones(b1):
                                    f_m1 = hall_polynomial(A1, B1, M1)
                                    if not f_m1:
                                        continue
                                    base = f_m0 * f_n1 * f_n0 * f_m1
                                    auts = (aut_order(A0) * aut_order(A1) * aut_order(B0)
                                            * aut_order(B1) * aut_order(C0) * aut_order(C1))
                                    for L0, f_l0 in _fila_hall(B0, C0).items():
                                        for L1, f_l1 in _fila_hall(B1, C1).items():
                                            acumulado[Biparticion(L0, L1)] += (
                                                base * f_l0 * f_l1 * auts
                                                / (aut_order(L0) * aut_order(L1))
                                            )
    fila = {}
    for L, G in acumulado.items():
        if not G:
            continue
        if not ratfun.es_laurent(G):
            raise ErrorInterno(f"G^{L}_{{{M},{N}}} no es un polinomio de Laurent: {G.as_expr()}")
        fila[L] = G
    logger.debug(f"Fila derivada {M} ∗ {N}: {len(fila)} términos")
    return fila


@cache
def _fila_en_variable(M: Biparticion, N: Biparticion, var: str) -> dict:
    return {L: _en_variable(G, var) for L, G in fila_derivada(M, N).items()}


def derived_structure_constant(M, N, L):
    """G^L_{MN}(q) de la suma séxtuple de números de Hall."""
    M, N, L = _bip(M), _bip(N), _bip(L)
    m0, m1 = tamano(M.mas), tamano(M.menos)
    n0, n1 = tamano(N.mas), tamano(N.menos)
    if tamano(L.mas) - tamano(L.menos) != m0 - m1 + n0 - n1:
        return ratfun.campo("q").zero
    return fila_derivada(M, N).get(L, ratfun.campo("q").zero)


def hall_multiply(a: ElementoAlgebra, b: ElementoAlgebra) -> ElementoAlgebra:
    """Producto en la base [S^λ ⊕ S^μ[1]] con coeficientes en q, t (q ↦ t⁻¹) o v (q ↦ v²)."""
    for x in (a, b):
        if x.base != HALL_U:
            raise ErrorEntrada(f"hall_multiply opera en la base {HALL_U}, no {x.base}")
    if a.var != b.var:
        raise ErrorEntrada(f"Variables distintas: {a.var} y {b.var}")
    var = a.var
    pares = []
    for M, ca in a.terminos.items():
        for N, cb in b.terminos.items():
            if M == VACIA:
                pares.append((N, ca * cb))
                continue
            if N == VACIA:
                pares.append((M, ca * cb))
                continue
            for L, G in _fila_en_variable(M, N, var).items():
                pares.append((L, ca * cb * G))
    return ElementoAlgebra.desde_pares(HALL_U, var, pares)


def generic_multiply(a: ElementoAlgebra, b: ElementoAlgebra) -> ElementoAlgebra:
    """Producto del álgebra genérica sobre Q(t)."""
    if a.var != "t" or b.var != "t":
        raise ErrorEntrada("El álgebra genérica trabaja en la variable t")
    return hall_multiply(a, b)


def u(bip, var: str = "t", coef=1) -> ElementoAlgebra:
    """Elemento básico 𝔲_{λ,μ} (o [S^λ ⊕ S^μ[1]] si var = q)."""
    return ElementoAlgebra.monomio(HALL_U, var, _bip(bip), coef)


def exponente_vhat(bip: Biparticion) -> int:
    return tamano(bip.mas) + n_stat(bip.mas) + n_stat(bip.menos)


def vhat_normalize(x: ElementoAlgebra) -> ElementoAlgebra:
    """Pasa de la base 𝔲 a la base V̂ con V̂_{λ,μ} = t^{|λ|+n(λ)+n(μ)}·𝔲_{λ,μ}."""
    if x.base != HALL_U:
        raise ErrorEntrada(f"vhat_normalize espera la base {HALL_U}")
    terminos = {b: c * _potencia_t(x.var, -exponente_vhat(b)) for b, c in x.terminos.items()}
    return ElementoAlgebra(HALL_VHAT, x.var, terminos)


def vhat_denormalize(x: ElementoAlgebra) -> ElementoAlgebra:
    if x.base != HALL_VHAT:
        raise ErrorEntrada(f"vhat_denormalize espera la base {HALL_VHAT}")
    terminos = {b: c * _potencia_t(x.var, exponente_vhat(b)) for b, c in x.terminos.items()}
    return ElementoAlgebra(HALL_U, x.var, terminos)


def vhat_multiply(a: ElementoAlgebra, b: ElementoAlgebra) -> ElementoAlgebra:
    return vhat_normalize(hall_multiply(vhat_denormalize(a), vhat_denormalize(b)))


def vhat(bip, var: str = "t", coef=1) -> ElementoAlgebra:
    return ElementoAlgebra.monomio(HALL_VHAT, var, _bip(bip), coef)


def exponente_vhat_prima(bip: Biparticion) -> int:
    return tamano(bip.menos) + n_stat(bip.mas) + n_stat(bip.menos)


def vhat_prime_normalize(x: ElementoAlgebra) -> ElementoAlgebra:
    """Base alternativa V̂'_{λ,μ} = q^{−|μ|−n(λ)−n(μ)}·[S^λ ⊕ S^μ[1]]."""
    if x.base != HALL_U:
        raise ErrorEntrada(f"vhat_prime_normalize espera la base {HALL_U}")
    terminos = {b: c * _potencia_t(x.var, -exponente_vhat_prima(b)) for b, c in x.terminos.items()}
    return ElementoAlgebra(HALL_VHAT_PRIMA, x.var, terminos)


def _constantes_en_base(M, N, exponente, var):
    """Constantes de estructura del producto de dos elementos de una base reescalada."""
    escala = lambda b: _potencia_t(var, exponente(b))  # noqa: E731
    producto = hall_multiply(u(M, var), u(N, var))
    return {
        L: c * escala(M) * escala(N) / escala(L)
        for L, c in producto.terminos.items()
    }


def automorfismo_vhat_prima(M, N, var: str = "t") -> bool:
    """V̂ y V̂' tienen las mismas constantes de estructura para el par (M, N)."""
    M, N = _bip(M), _bip(N)
    return (_constantes_en_base(M, N, exponente_vhat, var)
            == _constantes_en_base(M, N, exponente_vhat_prima, var))


def hall_pieri(rho, nu, r: int, tipo: str, lado: str) -> ElementoAlgebra:
    """
    V̂_{ρ,ν} ∗ V̂^±_{(r)} (tipo 'row') o V̂_{ρ,ν} ∗ V̂^±_{(1^r)} (tipo 'column') en la base V̂,
    con los coeficientes φ/ψ o b·φ_r·f en t = q⁻¹.
    """
    if tipo not in TIPOS_PIERI:
        raise ErrorEntrada(f"Tipo de Pieri desconocido: '{tipo}' (use row o column)")
    regla = pieri_horizontal if tipo == "row" else pieri_vertical
    return regla(rho, nu, r, lado).mapear(lambda c: c, base=HALL_VHAT)


def _aut(lam, var):
    return _en_variable(aut_order(lam), var)


def hall_pieri_numbers(rho, nu, r: int, tipo: str, lado: str, var: str = "q") -> ElementoAlgebra:
    """
    Reglas de Pieri como números de Hall en la base [S^λ ⊕ S^μ[1]]:
    [S^ρ ⊕ S^ν[1]] ∗ [S^{(r)}], ∗ [S^{(1^r)}], ∗ [S^{(r)}[1]] o ∗ [S^{(1^r)}[1]].
    """
    rho, nu = particion(rho), particion(nu)
    if r < 1:
        raise ErrorEntrada(f"r debe ser >= 1, recibido {r}")
    if tipo not in TIPOS_PIERI or lado not in ("plus", "minus"):
        raise ErrorEntrada(f"Combinación no admitida: {tipo}/{lado}")
    q = ratfun.generador("q")
    forma = (lambda k: (k,) if k else ()) if tipo == "row" else (lambda k: (1,) * k)
    pares = []
    for a in range(r + 1):
        uno_a, uno_resto = forma(a), forma(r - a)
        if tipo == "row":
            escala = aut_order(uno_a) * aut_order(uno_resto)
        else:
            escala = aut_order((1,) * r) / q ** (a * (r - a))
        if lado == "plus":
            for lam, f_lam in _fila_hall(rho, uno_a).items():
                for mu in particiones(tamano(nu) - (r - a)):
                    f_nu = hall_polynomial(uno_resto, mu, nu)
                    if f_nu:
                        coef = f_lam * f_nu * aut_order(rho) * escala / aut_order(lam)
                        pares.append((Biparticion(lam, mu), coef))
        else:
            for mu, f_mu in _fila_hall(uno_resto, nu).items():
                for lam in particiones(tamano(rho) - a):
                    f_rho = hall_polynomial(lam, uno_a, rho)
                    if f_rho:
                        coef = f_rho * f_mu * aut_order(nu) * escala / aut_order(mu)
                        pares.append((Biparticion(lam, mu), coef))
    resultado = ElementoAlgebra.desde_pares(HALL_U, "q", pares)
    return resultado if var == "q" else resultado.mapear(lambda c: _en_variable(c, var), var=var)


def phi_isomorphism(x: ElementoAlgebra) -> ElementoAlgebra:
    """Φ: V̂_{λ,μ} ↦ V_{λ,μ}; un elemento en base 𝔲 se renormaliza antes."""
    if x.var != "t":
        raise ErrorEntrada("Φ está definido sobre el álgebra genérica en t")
    if x.base == HALL_U:
        x = vhat_normalize(x)
    if x.base != HALL_VHAT:
        raise ErrorEntrada(f"Φ no está definido en la base {x.base}")
    return ElementoAlgebra(DHL, "t", x.terminos)


def embedding_plus(x: ElementoAlgebra) -> ElementoAlgebra:
    """ι⁺([S^λ]) = [S^λ]."""
    return ElementoAlgebra(HALL_U, x.var, {Biparticion(b.mas, ()): c for b, c in x.terminos.items()})


def embedding_minus(x: ElementoAlgebra) -> ElementoAlgebra:
    """ι⁻([S^λ]) = [S^λ[1]]."""
    return ElementoAlgebra(HALL_U, x.var, {Biparticion((), b.mas): c for b, c in x.terminos.items()})


def compatibilidad_inclusion(mu, nu, lado: str = "plus") -> bool:
    """ι(x ∗ y) = ι(x) ∗ ι(y) para [S^μ] y [S^ν] del álgebra clásica."""
    inclusion = embedding_plus if lado == "plus" else embedding_minus
    x, y = u((mu, ()), "q"), u((nu, ()), "q")
    return inclusion(classical_multiply(x, y)) == hall_multiply(inclusion(x), inclusion(y))


# Filas del producto [S^{(r)} ⊕ S^{(t)}[1]] ∗ [S^{(1^a)} ⊕ S^{(1^b)}[1]]:
# (etiqueta, c, d, gancho positivo, gancho negativo, coeficiente); un gancho (x, k) es (x, 1^k)
def _filas_tabla(r, t, a, b):
    q = ratfun.generador("q")
    return [
        ("a", 0, 0, (r, a), (t, b), q ** (-a - b)),
        ("b", 0, 0, (r + 1, a - 1), (t, b), (1 - q ** -a) * q ** -b),
        ("c", 0, 0, (r, a), (t + 1, b - 1), q ** -a * (1 - q ** -b)),
        ("d", 0, 0, (r + 1, a - 1), (t + 1, b - 1), (1 - q ** -a) * (1 - q ** -b)),
        ("e", 1, 0, (r, a - 1), (t - 1, b), (q ** a - 1) * q ** (1 - a - b)),
        ("f", 1, 0, (r + 1, a - 2), (t - 1, b), (q ** a - 1) * (1 - q ** (1 - a)) * q ** -b),
        ("g", 1, 0, (r, a - 1), (t, b - 1), (q ** a - 1) * q ** (1 - a) * (1 - q ** -b)),
        ("h", 1, 0, (r + 1, a - 2), (t, b - 1),
         (q ** a - 1) * (1 - q ** (1 - a)) * (1 - q ** -b)),
        ("i", 0, 1, (r - 1, a), (t, b - 1), (q ** b - 1) * q ** (1 - a - b)),
        ("j", 0, 1, (r, a - 1), (t, b - 1), (q ** b - 1) * q ** (1 - b) * (1 - q ** -a)),
        ("k", 0, 1, (r - 1, a), (t + 1, b - 2), (q ** b - 1) * q ** -a * (1 - q ** (1 - b))),
        ("l", 0, 1, (r, a - 1), (t + 1, b - 2),
         (q ** b - 1) * (1 - q ** -a) * (1 - q ** (1 - b))),
        ("m", 1, 1, (r - 1, a - 1), (t - 1, b - 1), (q ** b - 1) * (q ** a - 1) * q ** (2 - a - b)),
        ("n", 1, 1, (r, a - 2), (t - 1, b - 1),
         (q ** b - 1) * (q ** a - 1) * q ** (1 - b) * (1 - q ** (1 - a))),
        ("o", 1, 1, (r - 1, a - 1), (t, b - 2),
         (q ** b - 1) * (q ** a - 1) * q ** (1 - a) * (1 - q ** (1 - b))),
        ("p", 1, 1, (r, a - 2), (t, b - 2),
         (q ** b - 1) * (q ** a - 1) * (1 - q ** (1 - a)) * (1 - q ** (1 - b))),
    ]


def _gancho(primera, unos):
    if unos < 0:
        raise ErrorInterno(f"Gancho con número negativo de unos: ({primera}, 1^{unos})")
    return particion((primera,) + (1,) * unos)


def table1_rows(r: int, t: int, a: int, b: int) -> list[dict]:
    """
    Filas no nulas de la tabla del producto de ganchos, con su bipartición y coeficiente en q.

    La tabla supone r, t >= 2: con r = 1 (o t = 1) y c = 1 (o d = 1) el cociente α es vacío,
    la extensión no trivial no existe y las filas con ganchos (r - 1, 1^k) dejan de ser
    particiones. Para r = 1 o t = 1 se usa directamente hall_multiply.
    """
    if r < 2 or t < 2 or a < 0 or b < 0:
        raise ErrorEntrada(
            f"La tabla requiere r, t >= 2 (con r o t = 1 los ganchos (r - 1, 1^k) no son "
            f"particiones; usar hall_multiply) y a, b >= 0: ({r}, {t}, {a}, {b})")
    filas = []
    for etiqueta, c, d, mas, menos, coef in _filas_tabla(r, t, a, b):
        if not coef:
            continue
        filas.append({
            "fila": etiqueta,
            "c": c,
            "d": d,
            "L": Biparticion(_gancho(*mas), _gancho(*menos)),
            "coef": coef,
        })
    return filas


def tabla1_esperada(r: int, t: int, a: int, b: int) -> dict:
    """Coeficiente esperado por bipartición; las filas con la misma forma se suman."""
    esperado = defaultdict(lambda: ratfun.campo("q").zero)
    for fila in table1_rows(r, t, a, b):
        esperado[fila["L"]] += fila["coef"]
    return {L: c for L, c in esperado.items() if c}


def comprobar_tabla1(r: int, t: int, a: int, b: int) -> bool:
    """El producto séxtuple coincide con la tabla, soporte incluido."""
    M = Biparticion((r,), (t,))
    N = Biparticion((1,) * a, (1,) * b)
    producto = hall_multiply(u(M, "q"), u(N, "q"))
    return producto.terminos == tabla1_esperada(r, t, a, b)


def _producto_generadores(bip: Biparticion, var: str) -> ElementoAlgebra:
    resultado = u(VACIA, var)
    for r in bip.mas:
        resultado = hall_multiply(resultado, u(((r,), ()), var))
    for r in bip.menos:
        resultado = hall_multiply(resultado, u(((), (r,)), var))
    return resultado


def generated_by_rows(tamano_maximo: int, valor=2) -> bool:
    """
    Comprueba que los productos de generadores 𝔲_{(r),∅}, 𝔲_{∅,(r)} indexados por las
    biparticiones de tamaño <= tamano_maximo generan todos los 𝔲_{λ,μ} de ese tamaño.
    El rango se calcula tras especializar t en `valor`; rango completo ahí implica
    rango completo genérico.
    """
    indices = sorted(biparticiones_hasta(tamano_maximo), key=clave_canonica)
    posicion = {bip: i for i, bip in enumerate(indices)}
    filas = []
    for bip in indices:
        producto = _producto_generadores(bip, "t")
        fila = [QQ(0)] * len(indices)
        for L, c in producto.terminos.items():
            if L not in posicion:
                raise ErrorInterno(f"El producto {bip} sale del rango de tamaños: {L}")
            fila[posicion[L]] = QQ.convert(ratfun.evaluar(c, valor))
        filas.append(fila)
    rango = DomainMatrix(filas, (len(indices), len(indices)), QQ).rank()
    logger.info(f"Generación polinómica hasta tamaño {tamano_maximo}: rango {rango} de {len(indices)}")
    return rango == len(indices)


def unidad(var: str = "t") -> ElementoAlgebra:
    return u(VACIA, var)
