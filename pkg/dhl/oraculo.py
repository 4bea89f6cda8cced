"""
Oráculo por fuerza bruta sobre F_q: módulos nilpotentes de tipo λ, conteo de submódulos,
de extensiones y de homomorfismos. Sólo para |λ| pequeño y q primo.
"""
import itertools
import logging
from collections import Counter
from functools import cache

from sympy import GF, Rational
from sympy.polys.matrices import DomainMatrix

from dhl.combinat import conjugate, particion, tamano
from dhl.config import ORACULO_PRIMOS, ORACULO_TAMANO_MAXIMO
from dhl.errores import ErrorLimite

logger = logging.getLogger(__name__)


def _comprobar(q: int, *particiones):
    if q not in ORACULO_PRIMOS:
        raise ErrorLimite(f"El oráculo sólo admite q en {ORACULO_PRIMOS}, no {q}")
    for lam in particiones:
        if tamano(lam) > ORACULO_TAMANO_MAXIMO:
            raise ErrorLimite(
                f"El oráculo admite |λ| <= {ORACULO_TAMANO_MAXIMO}, recibido {lam}")


def nilpotente(lam) -> list[list[int]]:
    """Matriz nilpotente por bloques de Jordan de tamaños λ_i (1 en la subdiagonal)."""
    n = tamano(lam)
    matriz = [[0] * n for _ in range(n)]
    inicio = 0
    for parte in lam:
        for j in range(inicio, inicio + parte - 1):
            matriz[j + 1][j] = 1
        inicio += parte
    return matriz


def _dm(filas, q, columnas=None):
    if not filas:
        return DomainMatrix.zeros((0, columnas or 0), GF(q))
    return DomainMatrix.from_list(filas, GF(q))


def tipo_nilpotente(matriz: DomainMatrix) -> tuple[int, ...]:
    """Tipo de Jordan de una matriz nilpotente a partir de los rangos de sus potencias."""
    n = matriz.shape[0]
    rangos = [n]
    potencia = matriz
    while rangos[-1] > 0:
        rangos.append(potencia.rank())
        potencia = potencia * matriz
    conjugada = tuple(rangos[j] - rangos[j + 1] for j in range(len(rangos) - 1))
    return conjugate(particion(conjugada))


def subespacios_rref(n: int, k: int, q: int):
    """Bases en forma escalonada reducida de los subespacios de dimensión k de F_q^n."""
    for pivotes in itertools.combinations(range(n), k):
        libres = [
            (i, c) for i, p in enumerate(pivotes)
            for c in range(p + 1, n) if c not in pivotes
        ]
        for valores in itertools.product(range(q), repeat=len(libres)):
            filas = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivotes):
                filas[i][p] = 1
            for (i, c), valor in zip(libres, valores):
                filas[i][c] = valor
            yield filas


def _dimensiones_imagen(X: DomainMatrix, NT: DomainMatrix, longitud: int):
    """dim N^j X para j = 0..longitud."""
    dimensiones = []
    actual = X
    for _ in range(longitud + 1):
        dimensiones.append(actual.rank())
        actual = actual * NT
    return dimensiones


def _particion_desde_dimensiones(dimensiones):
    conjugada = [dimensiones[j] - dimensiones[j + 1] for j in range(len(dimensiones) - 1)]
    return conjugate(particion(conjugada))


@cache
def conteos_submodulos(lam, q: int) -> Counter:
    """Cuenta los submódulos X del módulo de tipo λ por (tipo de L/X, tipo de X)."""
    lam = particion(lam)
    _comprobar(q, lam)
    n = tamano(lam)
    longitud = lam[0] if lam else 0
    NT = _dm(nilpotente(lam), q).transpose()
    potencias = [DomainMatrix.eye(n, GF(q)).to_dense()] if n else []
    for _ in range(longitud):
        potencias.append(potencias[-1] * NT)
    conteos = Counter()
    conteos[(lam, ())] += 1
    for k in range(1, n + 1):
        for filas in subespacios_rref(n, k, q):
            X = _dm(filas, q)
            if X.vstack(X * NT).rank() != k:
                continue
            sub = _particion_desde_dimensiones(_dimensiones_imagen(X, NT, longitud))
            dim_cociente = [potencias[j].vstack(X).rank() - k for j in range(longitud + 1)]
            cociente = _particion_desde_dimensiones(dim_cociente)
            conteos[(cociente, sub)] += 1
    logger.debug(f"Submódulos del tipo {lam} sobre F_{q}: {sum(conteos.values())}")
    return conteos


def brute_force_hall(mu, nu, lam, q: int) -> int:
    """Número de submódulos X ⊆ L(λ) con X ≅ L(ν) y L(λ)/X ≅ L(μ)."""
    mu, nu, lam = particion(mu), particion(nu), particion(lam)
    _comprobar(q, lam)
    if tamano(lam) != tamano(mu) + tamano(nu):
        return 0
    return conteos_submodulos(lam, q)[(mu, nu)]


def _bloque(mu, nu, phi, q):
    """Matriz [[N_ν, φ], [0, N_μ]] de la extensión de L(μ) por L(ν)."""
    a, b = tamano(nu), tamano(mu)
    n_nu, n_mu = nilpotente(nu), nilpotente(mu)
    filas = []
    for i in range(a):
        filas.append(n_nu[i] + [phi[i * b + j] for j in range(b)])
    for i in range(b):
        filas.append([0] * a + n_mu[i])
    return _dm(filas, q)


@cache
def conteos_extensiones(mu, nu, q: int) -> Counter:
    """Cuenta los cociclos φ por el tipo del módulo central que determinan."""
    _comprobar(q, mu, nu)
    a, b = tamano(nu), tamano(mu)
    conteos = Counter()
    for phi in itertools.product(range(q), repeat=a * b):
        matriz = _bloque(mu, nu, phi, q)
        tipo = tipo_nilpotente(matriz) if a + b else ()
        conteos[tipo] += 1
    return conteos


def brute_force_ext(mu, nu, lam, q: int) -> Rational:
    """|Ext¹(L(μ), L(ν))_λ| / |Hom(L(μ), L(ν))| contando cociclos."""
    mu, nu, lam = particion(mu), particion(nu), particion(lam)
    _comprobar(q, mu, nu, lam)
    total = q ** (tamano(mu) * tamano(nu))
    return Rational(conteos_extensiones(mu, nu, q)[lam], total)


def brute_force_hom(mu, nu, q: int) -> int:
    """|Hom(L(μ), L(ν))| = q^{dim ker(f ↦ N_ν f − f N_μ)}."""
    mu, nu = particion(mu), particion(nu)
    _comprobar(q, mu, nu)
    a, b = tamano(nu), tamano(mu)
    if a * b == 0:
        return 1
    n_nu, n_mu = nilpotente(nu), nilpotente(mu)
    # f es a×b; la entrada (i, j) ocupa la coordenada i*b + j
    columnas = []
    for i in range(a):
        for j in range(b):
            imagen = [0] * (a * b)
            for fila in range(a):
                imagen[fila * b + j] += n_nu[fila][i]
            for col in range(b):
                imagen[i * b + col] -= n_mu[j][col]
            columnas.append([x % q for x in imagen])
    operador = _dm(columnas, q).transpose()
    return q ** (a * b - operador.rank())
