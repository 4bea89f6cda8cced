"""
Funciones de Schur-Laurent s_{λ,μ} por su determinante en los h^±_k, y la comprobación
s_{λ,μ} = V_{λ,μ}|_{t=0}.
"""
import logging
from functools import cache

import sympy

from dhl.combinat import Biparticion, particion
from dhl.dlambda import double_hl, eliminacion_triangular, vmon_multiply, vmon_specialize
from dhl.elementos import SCHUR, VMON, ElementoAlgebra

logger = logging.getLogger(__name__)


@cache
def _h(signo: str, k: int):
    if k < 0:
        return sympy.Integer(0)
    if k == 0:
        return sympy.Integer(1)
    return sympy.Symbol(f"h{signo}{k}")


def matriz_h(lam, mu) -> sympy.Matrix:
    """
    Matriz (ℓ(λ)+ℓ(μ)) × (ℓ(λ)+ℓ(μ)): primero las filas de μ en orden inverso con
    entradas h⁻, después las filas de λ con entradas h⁺.
    """
    s, r = len(mu), len(lam)
    n = r + s
    filas = []
    for i in range(s, 0, -1):
        filas.append([_h("m", mu[i - 1] + (s - i) - c) for c in range(n)])
    for j in range(1, r + 1):
        filas.append([_h("p", lam[j - 1] - s - (j - 1) + c) for c in range(n)])
    return sympy.Matrix(n, n, [x for fila in filas for x in fila]) if n else sympy.Matrix(0, 0, [])


def _leer_monomio(exponentes, generadores) -> Biparticion:
    mas, menos = [], []
    for simbolo, e in zip(generadores, exponentes):
        nombre = simbolo.name
        k = int(nombre[2:])
        (mas if nombre[1] == "p" else menos).extend([k] * e)
    return Biparticion(tuple(sorted(mas, reverse=True)), tuple(sorted(menos, reverse=True)))


@cache
def schur_laurent(lam, mu) -> ElementoAlgebra:
    """s_{λ,μ} en monomios de los generadores (leídos como v^±), con coeficientes enteros."""
    lam, mu = particion(lam), particion(mu)
    matriz = matriz_h(lam, mu)
    if matriz.rows == 0:
        return ElementoAlgebra.monomio(VMON, "t", Biparticion((), ()))
    determinante = sympy.expand(matriz.det(method="berkowitz"))
    generadores = sorted(determinante.free_symbols, key=lambda s: s.name)
    if not generadores:
        return ElementoAlgebra.monomio(VMON, "t", Biparticion((), ()), sympy.Rational(determinante))
    polinomio = sympy.Poly(determinante, *generadores)
    pares = (
        (_leer_monomio(exponentes, generadores), sympy.Rational(coef))
        for exponentes, coef in polinomio.terms()
    )
    return ElementoAlgebra.desde_pares(VMON, "t", pares)


def verify_t0(lam, mu) -> bool:
    """Compara s_{λ,μ} con V_{λ,μ} especializado en t = 0."""
    izquierda = schur_laurent(lam, mu)
    derecha = vmon_specialize(double_hl(particion(lam), particion(mu)), 0)
    if izquierda != derecha:
        logger.warning(f"⚠️ s_{{{lam},{mu}}} no coincide con V|_(t=0)")
        return False
    return True


def to_schur_basis(x: ElementoAlgebra) -> ElementoAlgebra:
    """Expansión de un elemento en monomios en la base de Schur-Laurent."""
    return eliminacion_triangular(x, lambda b: schur_laurent(b.mas, b.menos), SCHUR)


def producto_por_h(rho, nu, r: int, lado: str) -> ElementoAlgebra:
    """s_{ρ,ν}·h^±_r reexpandido en la base de Schur-Laurent."""
    generador = Biparticion((r,), ()) if lado == "plus" else Biparticion((), (r,))
    producto = vmon_multiply(schur_laurent(rho, nu), ElementoAlgebra.monomio(VMON, "t", generador))
    return to_schur_basis(producto)
