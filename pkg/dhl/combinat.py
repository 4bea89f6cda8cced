"""
Capa de índices: particiones, biparticiones, conjugación, tiras, multiplicidades
y el orden de dominancia extendido.

Una partición es una tupla decreciente de enteros positivos (sin ceros finales).
Un vector entero (IntVector) es una tupla cualquiera de enteros; lo producen las
recursiones de operadores y no se valida.
"""
import enum
import itertools
from functools import cache
from typing import NamedTuple, Optional

from dhl.errores import ErrorEntrada

Particion = tuple[int, ...]
VectorEntero = tuple[int, ...]


class Biparticion(NamedTuple):
    mas: Particion
    menos: Particion


VACIA = Biparticion((), ())


class Comparacion(enum.Enum):
    DOMINA = "dominates"
    DOMINADA = "dominated"
    IGUAL = "equal"
    INCOMPARABLE = "incomparable"


def particion(partes) -> Particion:
    """
    Normaliza una secuencia de enteros a partición: elimina ceros finales y
    comprueba que sea decreciente y no negativa.
    """
    partes = tuple(int(p) for p in partes)
    while partes and partes[-1] == 0:
        partes = partes[:-1]
    if any(p <= 0 for p in partes):
        raise ErrorEntrada(f"Partes no positivas en {partes}")
    if any(partes[i] < partes[i + 1] for i in range(len(partes) - 1)):
        raise ErrorEntrada(f"La secuencia {partes} no es decreciente")
    return partes


def biparticion(mas, menos) -> Biparticion:
    return Biparticion(particion(mas), particion(menos))


def tamano(lam) -> int:
    return sum(lam)


def tamano_total(bip: Biparticion) -> int:
    return sum(bip.mas) + sum(bip.menos)


def es_particion(vector) -> bool:
    """True si el vector, quitando ceros finales, es una partición."""
    try:
        particion(vector)
    except ErrorEntrada:
        return False
    return True


def conjugate(lam: Particion) -> Particion:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def n_stat(lam: Particion) -> int:
    return sum(i * p for i, p in enumerate(lam))


def multiplicity(lam: Particion, i: int) -> int:
    if i < 1:
        raise ErrorEntrada(f"La multiplicidad se define para partes i >= 1, no {i}")
    return lam.count(i)


def numero_no_nulos(vector) -> int:
    return sum(1 for x in vector if x != 0)


def contiene(lam: Particion, mu: Particion) -> bool:
    """True si mu ⊆ lam como diagramas de Young."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def _diferencias(grande, pequena):
    pequena = tuple(pequena) + (0,) * (len(grande) - len(pequena))
    return [g - p for g, p in zip(grande, pequena)]


def is_horizontal_strip(nu: Particion, lam: Particion) -> bool:
    """True si lam − nu es una tira horizontal (a lo sumo una caja por columna)."""
    if not contiene(lam, nu):
        return False
    return all(d in (0, 1) for d in _diferencias(conjugate(lam), conjugate(nu)))


def is_vertical_strip(nu: Particion, lam: Particion) -> bool:
    """True si lam − nu es una tira vertical (a lo sumo una caja por fila)."""
    if not contiene(lam, nu):
        return False
    return all(d in (0, 1) for d in _diferencias(lam, nu))


def strip_size(nu: Particion, lam: Particion) -> int:
    return tamano(lam) - tamano(nu)


@cache
def particiones(n: int) -> tuple[Particion, ...]:
    """Particiones de n en orden lexicográfico decreciente."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)

    def _generar(resto, maximo):
        if resto == 0:
            yield ()
            return
        for primera in range(min(resto, maximo), 0, -1):
            for cola in _generar(resto - primera, primera):
                yield (primera,) + cola

    return tuple(_generar(n, n))


def particiones_hasta(n: int):
    for k in range(n + 1):
        yield from particiones(k)


@cache
def biparticiones(n: int) -> tuple[Biparticion, ...]:
    """Biparticiones de tamaño total n."""
    return tuple(
        Biparticion(lam, mu)
        for k in range(n + 1)
        for lam in particiones(k)
        for mu in particiones(n - k)
    )


def biparticiones_hasta(n: int):
    for k in range(n + 1):
        yield from biparticiones(k)


@cache
def composiciones_debiles(total: int, longitud: int) -> tuple[VectorEntero, ...]:
    """Vectores de `longitud` enteros no negativos que suman `total`."""
    if total < 0:
        return ()
    if longitud == 0:
        return ((),) if total == 0 else ()
    resultado = []
    for cortes in itertools.combinations(range(total + longitud - 1), longitud - 1):
        previo = -1
        partes = []
        for c in cortes:
            partes.append(c - previo - 1)
            previo = c
        partes.append(total + longitud - 1 - previo - 1)
        resultado.append(tuple(partes))
    return tuple(resultado)


@cache
def tiras_horizontales_arriba(rho: Particion, b: int) -> tuple[Particion, ...]:
    """Particiones lam ⊇ rho con lam − rho tira horizontal de tamaño b."""
    cota = (rho[0] if rho else 0) + b
    return tuple(
        lam for lam in particiones(tamano(rho) + b)
        if (not lam or lam[0] <= cota) and is_horizontal_strip(rho, lam)
    )


@cache
def tiras_horizontales_abajo(nu: Particion, a: int) -> tuple[Particion, ...]:
    """Particiones mu ⊆ nu con nu − mu tira horizontal de tamaño a."""
    return tuple(mu for mu in particiones(tamano(nu) - a) if is_horizontal_strip(mu, nu))


@cache
def tiras_verticales_arriba(rho: Particion, a: int) -> tuple[Particion, ...]:
    return tuple(lam for lam in particiones(tamano(rho) + a) if is_vertical_strip(rho, lam))


@cache
def tiras_verticales_abajo(nu: Particion, b: int) -> tuple[Particion, ...]:
    return tuple(mu for mu in particiones(tamano(nu) - b) if is_vertical_strip(mu, nu))


def _domina_clasico(lam: Particion, mu: Particion) -> bool:
    suma_l = suma_m = 0
    for k in range(max(len(lam), len(mu))):
        suma_l += lam[k] if k < len(lam) else 0
        suma_m += mu[k] if k < len(mu) else 0
        if suma_l < suma_m:
            return False
    return True


def domina_particion(lam: Particion, mu: Particion) -> bool:
    """Orden extendido: lam ⊵ mu si |lam| < |mu|, o si |lam| = |mu| y domina clásicamente."""
    if tamano(lam) != tamano(mu):
        return tamano(lam) < tamano(mu)
    return _domina_clasico(lam, mu)


def dominance_compare(a: Biparticion, b: Biparticion) -> Comparacion:
    """Compara dos biparticiones componente a componente con el orden extendido."""
    if a == b:
        return Comparacion.IGUAL
    if domina_particion(a.mas, b.mas) and domina_particion(a.menos, b.menos):
        return Comparacion.DOMINA
    if domina_particion(b.mas, a.mas) and domina_particion(b.menos, a.menos):
        return Comparacion.DOMINADA
    return Comparacion.INCOMPARABLE


def clave_canonica(bip: Biparticion):
    """Orden total de serialización: tamaño total, luego lexicográfico en mas y en menos."""
    return (tamano_total(bip), bip.mas, bip.menos)


def aplicar_operador(tipo: str, i: int, j: int, bip: Biparticion) -> Optional[Biparticion]:
    """
    Aplica R⁺_ij, R⁻_ij (i < j, mueven una unidad de la posición j a la i) o L_ij
    (resta una unidad a la posición i de mas y a la j de menos), con posiciones desde 1.
    Devuelve None si el resultado no es una bipartición.
    """
    if tipo in ("R+", "R-"):
        if not 1 <= i < j:
            raise ErrorEntrada(f"Se requiere 1 <= i < j, recibido ({i}, {j})")
        lado = list(bip.mas if tipo == "R+" else bip.menos)
        lado += [0] * (j - len(lado))
        lado[i - 1] += 1
        lado[j - 1] -= 1
        if not es_particion(lado):
            return None
        nuevo = particion(lado)
        return Biparticion(nuevo, bip.menos) if tipo == "R+" else Biparticion(bip.mas, nuevo)
    if tipo == "L":
        mas = list(bip.mas) + [0] * max(0, i - len(bip.mas))
        menos = list(bip.menos) + [0] * max(0, j - len(bip.menos))
        mas[i - 1] -= 1
        menos[j - 1] -= 1
        if not (es_particion(mas) and es_particion(menos)):
            return None
        return Biparticion(particion(mas), particion(menos))
    raise ErrorEntrada(f"Operador desconocido: {tipo}")


def parse_particion(texto: str, vector: bool = False):
    """
    Lee una partición en formato de texto: partes separadas por comas, '-' para la vacía.
    Con vector=True se admite cualquier vector entero (ceros y negativos incluidos).
    """
    texto = texto.strip()
    if texto in ("", "-"):
        return ()
    try:
        partes = tuple(int(p) for p in texto.split(","))
    except ValueError:
        raise ErrorEntrada(f"Partición mal formada: '{texto}'")
    return partes if vector else particion(partes)


def parse_biparticion(texto: str, vector: bool = False):
    """Lee una bipartición 'λ|μ', por ejemplo '2,1|1' o '-|1'."""
    if texto.count("|") != 1:
        raise ErrorEntrada(f"Bipartición mal formada (se espera 'λ|μ'): '{texto}'")
    izquierda, derecha = texto.split("|")
    mas = parse_particion(izquierda, vector)
    menos = parse_particion(derecha, vector)
    return (mas, menos) if vector else Biparticion(mas, menos)


def formatear_particion(lam) -> str:
    return ",".join(str(p) for p in lam) if lam else "-"


def formatear_biparticion(bip) -> str:
    return f"{formatear_particion(bip[0])}|{formatear_particion(bip[1])}"
