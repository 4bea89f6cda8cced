"""
Coeficientes de tiras (φ, ψ, b, f) y reglas de Pieri horizontales y verticales en la
base V_{λ,μ}, junto con la regla de Pieri de las funciones de Schur-Laurent.
"""
import logging
from functools import cache

from dhl import ratfun
from dhl.combinat import (
    Biparticion,
    conjugate,
    is_horizontal_strip,
    is_vertical_strip,
    multiplicity,
    particion,
    strip_size,
    tiras_horizontales_abajo,
    tiras_horizontales_arriba,
    tiras_verticales_abajo,
    tiras_verticales_arriba,
)
from dhl.elementos import DHL, SCHUR, ElementoAlgebra
from dhl.errores import ErrorEntrada

logger = logging.getLogger(__name__)

LADOS = ("plus", "minus")


def _sigma_conjugada(lam, nu):
    lc, nc = conjugate(lam), conjugate(nu)
    nc = nc + (0,) * (len(lc) - len(nc))
    return [a - b for a, b in zip(lc, nc)]


def _sigma(sigma, i):
    """σ'_i con índices desde 1 y ceros fuera de rango."""
    return sigma[i - 1] if 1 <= i <= len(sigma) else 0


@cache
def phi_skew(lam, nu, var: str = "t"):
    """φ_{λ/ν} = Π_{i∈I} (1 − x^{m_i(λ)}), con I = {i : σ'_i = 1, σ'_{i+1} = 0}; 0 fuera de tiras."""
    lam, nu = tuple(lam), tuple(nu)
    if not is_horizontal_strip(nu, lam):
        return ratfun.campo(var).zero
    sigma = _sigma_conjugada(lam, nu)
    x = ratfun.generador(var)
    resultado = ratfun.campo(var).one
    for i in range(1, len(sigma) + 1):
        if _sigma(sigma, i) == 1 and _sigma(sigma, i + 1) == 0:
            resultado *= 1 - x ** multiplicity(lam, i)
    return resultado


@cache
def psi_skew(lam, nu, var: str = "t"):
    """ψ_{λ/ν} = Π_{j∈J} (1 − x^{m_j(ν)}), con J = {j : σ'_j = 0, σ'_{j+1} = 1}; 0 fuera de tiras."""
    lam, nu = tuple(lam), tuple(nu)
    if not is_horizontal_strip(nu, lam):
        return ratfun.campo(var).zero
    sigma = _sigma_conjugada(lam, nu)
    x = ratfun.generador(var)
    resultado = ratfun.campo(var).one
    for j in range(1, len(sigma)):
        if _sigma(sigma, j) == 0 and _sigma(sigma, j + 1) == 1:
            resultado *= 1 - x ** multiplicity(nu, j)
    return resultado


@cache
def b_poly(lam, var: str = "t"):
    resultado = ratfun.campo(var).one
    for parte in set(lam):
        resultado *= ratfun.phi_m(multiplicity(lam, parte), var)
    return resultado


@cache
def f_vertical(mu, m: int, lam, var: str = "t"):
    """
    f^λ_{μ,(1^m)}: producto de q-binomiales sobre las columnas si λ − μ es tira
    vertical de tamaño m, y 0 en otro caso.
    """
    mu, lam = tuple(mu), tuple(lam)
    if not is_vertical_strip(mu, lam) or strip_size(mu, lam) != m:
        return ratfun.campo(var).zero
    lc, mc = conjugate(lam), conjugate(mu)
    resultado = ratfun.campo(var).one
    for i in range(len(lc)):
        siguiente = lc[i + 1] if i + 1 < len(lc) else 0
        actual_mu = mc[i] if i < len(mc) else 0
        resultado *= ratfun.qbinom_plus(lc[i] - siguiente, lc[i] - actual_mu, var)
    return resultado


def _validar(rho, nu, r, lado):
    if r < 1:
        raise ErrorEntrada(f"Las reglas de Pieri requieren r >= 1, recibido {r}")
    if lado not in LADOS:
        raise ErrorEntrada(f"Lado desconocido: '{lado}' (use plus o minus)")
    return particion(rho), particion(nu)


def terminos_pieri_horizontal(rho, nu, r: int, lado: str):
    """Pares (bipartición, φ, ψ) de la regla horizontal, sin multiplicar."""
    rho, nu = _validar(rho, nu, r, lado)
    for a in range(r + 1):
        b = r - a
        if lado == "plus":
            # μ ⊆ ν tira de tamaño a, λ ⊇ ρ tira de tamaño b
            for mu in tiras_horizontales_abajo(nu, a):
                for lam in tiras_horizontales_arriba(rho, b):
                    yield Biparticion(lam, mu), phi_skew(nu, mu), psi_skew(lam, rho)
        else:
            # μ ⊇ ν tira de tamaño a, λ ⊆ ρ tira de tamaño b
            for mu in tiras_horizontales_arriba(nu, a):
                for lam in tiras_horizontales_abajo(rho, b):
                    yield Biparticion(lam, mu), psi_skew(mu, nu), phi_skew(rho, lam)


def pieri_horizontal(rho, nu, r: int, lado: str) -> ElementoAlgebra:
    """Expansión de V_{ρ,ν}·v_r^± en la base V."""
    pares = ((bip, x * y) for bip, x, y in terminos_pieri_horizontal(rho, nu, r, lado))
    return ElementoAlgebra.desde_pares(DHL, "t", pares)


def pieri_vertical(rho, nu, r: int, lado: str) -> ElementoAlgebra:
    """Expansión de V_{ρ,ν}·V^±_{(1^r)} en la base V."""
    rho, nu = _validar(rho, nu, r, lado)
    phi_r = ratfun.phi_m(r)
    pares = []
    for a in range(r + 1):
        b = r - a
        if lado == "plus":
            for lam in tiras_verticales_arriba(rho, a):
                for mu in tiras_verticales_abajo(nu, b):
                    coef = (b_poly(rho) / b_poly(lam)) * phi_r \
                        * f_vertical(rho, a, lam) * f_vertical(mu, b, nu)
                    pares.append((Biparticion(lam, mu), coef))
        else:
            for lam in tiras_verticales_abajo(rho, a):
                for mu in tiras_verticales_arriba(nu, b):
                    coef = (b_poly(nu) / b_poly(mu)) * phi_r \
                        * f_vertical(lam, a, rho) * f_vertical(nu, b, mu)
                    pares.append((Biparticion(lam, mu), coef))
    return ElementoAlgebra.desde_pares(DHL, "t", pares)


def pieri_schur(rho, nu, r: int, lado: str) -> ElementoAlgebra:
    """Regla de Pieri de Schur-Laurent: los mismos pares de tiras con coeficiente 1."""
    pares = ((bip, 1) for bip, _, _ in terminos_pieri_horizontal(rho, nu, r, lado))
    return ElementoAlgebra.desde_pares(SCHUR, "t", pares)


def simetria_lados(rho, nu, r: int) -> bool:
    """Intercambiar lados y componentes lleva la regla 'plus' sobre la regla 'minus'."""
    directa = pieri_horizontal(rho, nu, r, "plus")
    espejo = pieri_horizontal(nu, rho, r, "minus")
    reflejada = {Biparticion(b.menos, b.mas): c for b, c in espejo.terminos.items()}
    return directa.terminos == reflejada

