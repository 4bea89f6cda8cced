"""
Anillo DΛ_t de funciones simétricas dobles: base de monomios v_{λ,μ}, producto,
base de Hall-Littlewood doble V_{λ,μ} por las recursiones de pelado y cambios de base.
"""
import logging
from functools import cache

from dhl import ratfun
from dhl.combinat import (
    Biparticion,
    VACIA,
    composiciones_debiles,
    numero_no_nulos,
    particion,
    tamano_total,
    tiras_horizontales_abajo,
    tiras_horizontales_arriba,
)
from dhl.elementos import DHL, VMON, ElementoAlgebra
from dhl.errores import ErrorEntrada, ErrorInterno

logger = logging.getLogger(__name__)

ESTRATEGIAS = ("mas", "menos", "alterna")


def vmon(bip, coef=1) -> ElementoAlgebra:
    return ElementoAlgebra.monomio(VMON, "t", bip, coef)


def uno() -> ElementoAlgebra:
    return vmon(VACIA)


def v_mas(r: int) -> ElementoAlgebra:
    """Generador v_r^+ con v_0 = 1 y v_r = 0 para r < 0."""
    if r < 0:
        return ElementoAlgebra.cero(VMON, "t")
    return vmon(Biparticion((r,) if r else (), ()))


def v_menos(r: int) -> ElementoAlgebra:
    if r < 0:
        return ElementoAlgebra.cero(VMON, "t")
    return vmon(Biparticion((), (r,) if r else ()))


def _fusionar(a: Biparticion, b: Biparticion) -> Biparticion:
    return Biparticion(
        tuple(sorted(a.mas + b.mas, reverse=True)),
        tuple(sorted(a.menos + b.menos, reverse=True)),
    )


def vmon_multiply(a: ElementoAlgebra, b: ElementoAlgebra) -> ElementoAlgebra:
    """Producto en la base de monomios: concatenar y ordenar cada componente."""
    if a.base != VMON or b.base != VMON:
        raise ErrorEntrada("vmon_multiply solo opera en la base Vmon")
    pares = (
        (_fusionar(x, y), cx * cy)
        for x, cx in a.terminos.items()
        for y, cy in b.terminos.items()
    )
    return ElementoAlgebra.desde_pares(VMON, "t", pares)


def _por_generador(elemento: ElementoAlgebra, lado: str, k: int) -> ElementoAlgebra:
    """Multiplica por v_k^± sin pasar por el producto general."""
    if k < 0:
        return ElementoAlgebra.cero(VMON, "t")
    if k == 0:
        return elemento
    terminos = {}
    for bip, coef in elemento.terminos.items():
        if lado == "mas":
            nueva = Biparticion(tuple(sorted(bip.mas + (k,), reverse=True)), bip.menos)
        else:
            nueva = Biparticion(bip.mas, tuple(sorted(bip.menos + (k,), reverse=True)))
        terminos[nueva] = coef
    return ElementoAlgebra(VMON, "t", terminos)


@cache
def _factor_pelado(s: int, no_nulos: int):
    """t^s (1 − t⁻¹)^no_nulos."""
    t = ratfun.generador("t")
    return t ** s * (1 - t ** -1) ** no_nulos


def _sumar(vector, extra, signo):
    return tuple(x + signo * e for x, e in zip(vector, extra))


def _pelar(alfa, beta, lado, estrategia):
    """
    Quita la última parte r del lado indicado y reparte hasta r unidades:
    se suman al resto de ese lado y se restan del otro.
    """
    if lado == "mas":
        propio, r, otro = alfa[:-1], alfa[-1], beta
    else:
        propio, r, otro = beta[:-1], beta[-1], alfa
    if r < 0:
        return ElementoAlgebra.cero(VMON, "t")
    total = ElementoAlgebra.cero(VMON, "t")
    for s in range(r + 1):
        for s_propio in range(s + 1):
            for eta in composiciones_debiles(s_propio, len(propio)):
                for gamma in composiciones_debiles(s - s_propio, len(otro)):
                    nuevo_propio = _sumar(propio, eta, +1)
                    nuevo_otro = _sumar(otro, gamma, -1)
                    if lado == "mas":
                        previo = _double_hl(nuevo_propio, nuevo_otro, estrategia)
                    else:
                        previo = _double_hl(nuevo_otro, nuevo_propio, estrategia)
                    if not previo:
                        continue
                    factor = _factor_pelado(s, numero_no_nulos(eta) + numero_no_nulos(gamma))
                    total = total + _por_generador(previo, lado, r - s).escalar(factor)
    return total


def _lado_a_pelar(alfa, beta, estrategia):
    if not beta:
        return "mas"
    if not alfa:
        return "menos"
    if estrategia == "mas":
        return "mas"
    if estrategia == "menos":
        return "menos"
    return "mas" if (len(alfa) + len(beta)) % 2 == 0 else "menos"


@cache
def _double_hl(alfa, beta, estrategia):
    if not alfa and not beta:
        return uno()
    return _pelar(alfa, beta, _lado_a_pelar(alfa, beta, estrategia), estrategia)


def double_hl(alfa, beta, estrategia: str = "mas") -> ElementoAlgebra:
    """
    V_{α,β} en la base de monomios para vectores enteros α, β.

    Args:
        alfa: vector de la parte positiva (se admiten ceros y negativos)
        beta: vector de la parte negativa
        estrategia: orden de pelado, 'mas' (canónico), 'menos' o 'alterna'
    """
    if estrategia not in ESTRATEGIAS:
        raise ErrorEntrada(f"Estrategia de pelado desconocida: '{estrategia}'")
    return _double_hl(tuple(alfa), tuple(beta), estrategia)


def from_dhl_basis(x: ElementoAlgebra) -> ElementoAlgebra:
    if x.base != DHL:
        raise ErrorEntrada(f"Se esperaba un elemento en base DHL, no {x.base}")
    total = ElementoAlgebra.cero(VMON, "t")
    for bip, coef in x.terminos.items():
        total = total + double_hl(bip.mas, bip.menos).escalar(coef)
    return total


def eliminacion_triangular(x: ElementoAlgebra, expandir, base_destino: str) -> ElementoAlgebra:
    """
    Reescribe `x` (en monomios) en una base triangular respecto a la dominancia.
    `expandir(bip)` da el elemento de la base destino en monomios, con término
    principal v_bip de coeficiente 1.
    """
    resto = x
    resultado = {}
    limite = 10 * len(x) + 10_000
    for _ in range(limite):
        if not resto:
            return ElementoAlgebra(base_destino, x.var, resultado)
        maximo = max(tamano_total(b) for b in resto.terminos)
        bip = min(b for b in resto.terminos if tamano_total(b) == maximo)
        if bip in resultado:
            raise ErrorInterno(f"La expansión no es triangular: {bip} reaparece")
        coef = resto.terminos[bip]
        resultado[bip] = coef
        resto = resto - expandir(bip).escalar(coef)
    raise ErrorInterno("La eliminación triangular no termina")


def to_dhl_basis(x: ElementoAlgebra) -> ElementoAlgebra:
    if x.base != VMON:
        raise ErrorEntrada(f"Se esperaba un elemento en base Vmon, no {x.base}")
    return eliminacion_triangular(x, lambda b: double_hl(b.mas, b.menos), DHL)


def dhl_multiply(a: ElementoAlgebra, b: ElementoAlgebra) -> ElementoAlgebra:
    """Producto de dos elementos en base DHL, resultado en base DHL."""
    return to_dhl_basis(vmon_multiply(from_dhl_basis(a), from_dhl_basis(b)))


def vmon_specialize(x: ElementoAlgebra, valor) -> ElementoAlgebra:
    """Especializa t ↦ valor en todos los coeficientes."""
    return x.mapear(lambda c: ratfun.constante(ratfun.evaluar(c, valor), x.var))


def _lado_izquierdo_I(rho, otra, b, lado):
    uno_menos_t = 1 - ratfun.generador("t")
    rho0 = tuple(rho) + (0,)
    total = ElementoAlgebra.cero(VMON, "t")
    for gamma in composiciones_debiles(b, len(rho0)):
        vector = _sumar(rho0, gamma, +1)
        factor = uno_menos_t ** numero_no_nulos(gamma[:-1])
        par = (vector, otra) if lado == "mas" else (otra, vector)
        total = total + double_hl(*par).escalar(factor)
    return total


def _lado_izquierdo_II(nu, otra, a, lado):
    uno_menos_t = 1 - ratfun.generador("t")
    total = ElementoAlgebra.cero(VMON, "t")
    for beta in composiciones_debiles(a, len(nu)):
        vector = _sumar(nu, beta, -1)
        factor = uno_menos_t ** numero_no_nulos(beta)
        par = (vector, otra) if lado == "mas" else (otra, vector)
        total = total + double_hl(*par).escalar(factor)
    return total


def lados_espejo(identidad: str, base, otra, cota: int, lado: str = "mas"):
    """Ambos lados de una identidad espejo, expandidos en monomios."""
    from dhl.pieri import phi_skew, psi_skew

    base, otra = particion(base), particion(otra)

    def _v(forma):
        par = (forma, otra) if lado == "mas" else (otra, forma)
        return double_hl(*par)

    derecho = ElementoAlgebra.cero(VMON, "t")
    if identidad == "I":
        izquierdo = _lado_izquierdo_I(base, otra, cota, lado)
        for lam in tiras_horizontales_arriba(base, cota):
            derecho = derecho + _v(lam).escalar(psi_skew(lam, base))
    elif identidad == "II":
        izquierdo = _lado_izquierdo_II(base, otra, cota, lado)
        for mu in tiras_horizontales_abajo(base, cota):
            derecho = derecho + _v(mu).escalar(phi_skew(base, mu))
    else:
        raise ErrorEntrada(f"Identidad espejo desconocida: '{identidad}'")
    return izquierdo, derecho


def mirror_check(identidad: str, base, otra, cota: int, lado: str = "mas") -> bool:
    """
    Comprueba la identidad espejo I (base = ρ, tira horizontal hacia arriba de tamaño `cota`)
    o II (base = ν, tira hacia abajo). `otra` es la partición fija del lado contrario; con
    lado='menos' se comprueba la versión reflejada.
    """
    if cota < 0:
        raise ErrorEntrada(f"La cota de la tira debe ser >= 0, recibido {cota}")
    izquierdo, derecho = lados_espejo(identidad, base, otra, cota, lado)
    iguales = izquierdo == derecho
    if not iguales:
        logger.warning(f"⚠️ Identidad espejo {identidad} falla para {base}, {otra}, cota {cota}")
    return iguales
