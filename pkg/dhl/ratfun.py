"""
Cuerpo de coeficientes: funciones racionales exactas en una variable formal (t, q o v)
sobre los racionales, apoyadas en los cuerpos de fracciones de sympy.

Los elementos de `sympy.polys.fields` se cancelan al construirse, así que la igualdad
es estructural. Un polinomio de Laurent es un elemento cuyo denominador es un monomio.
"""
import logging
import operator
import re
from functools import cache

from sympy import QQ, Rational, latex
from sympy.polys.fields import FracElement, field

from dhl.errores import ErrorEntrada, ErrorInterno, ErrorPolo, ErrorVariable

logger = logging.getLogger(__name__)

VARIABLES = ("t", "q", "v")

# regla -> (variable origen, variable destino, exponente): x ↦ y^exponente
REGLAS_SIMBOLICAS = {
    "t->1/q": ("t", "q", -1),
    "q->1/t": ("q", "t", -1),
    "q->v^2": ("q", "v", 2),
    "t->v^-2": ("t", "v", -2),
}

_REGLA_VALOR = re.compile(r"^\s*([tqv])\s*=\s*(-?\d+(?:/\d+)?)\s*$")

_OPERACIONES = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


@cache
def campo(var: str = "t"):
    if var not in VARIABLES:
        raise ErrorVariable(f"Variable formal desconocida: '{var}'")
    K, _ = field(var, QQ)
    return K


def generador(var: str = "t") -> FracElement:
    return campo(var).gens[0]


def constante(valor, var: str = "t") -> FracElement:
    """Inyecta un entero, racional o `sympy.Rational` en el cuerpo de `var`."""
    if isinstance(valor, str):
        valor = Rational(valor)
    return campo(var).ground_new(QQ.convert(valor))


def potencia(var: str, n: int) -> FracElement:
    return generador(var) ** n


def variable(f: FracElement) -> str:
    return f.field.symbols[0].name


def desde_expresion(expr, var: str = "t") -> FracElement:
    """Convierte una expresión de sympy (o cadena) en elemento del cuerpo de `var`."""
    try:
        return campo(var).from_expr(expr)
    except ValueError as exc:
        raise ErrorEntrada(str(exc))


def arith(a: FracElement, b: FracElement, op: str) -> FracElement:
    """Aritmética exacta con comprobación de variable: op ∈ {add, sub, mul, div}."""
    if op not in _OPERACIONES:
        raise ErrorEntrada(f"Operación desconocida: '{op}'")
    if variable(a) != variable(b):
        raise ErrorVariable(f"No se mezclan variables: {variable(a)} y {variable(b)}")
    if op == "div" and not b:
        raise ErrorPolo("División por cero")
    return _OPERACIONES[op](a, b)


def _terminos(poli):
    return [(monomio[0], coef) for monomio, coef in poli.terms()]


def _sustituir_poli(poli, imagen, K):
    resultado = K.zero
    for exponente, coef in _terminos(poli):
        resultado += K.ground_new(coef) * imagen ** exponente
    return resultado


def sustituir_monomio(f: FracElement, destino: str, exponente: int, factor=1) -> FracElement:
    """
    Sustituye la variable de `f` por factor·destino^exponente.
    Para y ↦ q·y en series, `factor` lleva el escalar.
    """
    K = campo(destino)
    imagen = constante(factor, destino) * potencia(destino, exponente)
    numerador = _sustituir_poli(f.numer, imagen, K)
    denominador = _sustituir_poli(f.denom, imagen, K)
    if not denominador:
        raise ErrorPolo(f"El denominador se anula al sustituir en {f.as_expr()}")
    return numerador / denominador


def evaluar(f: FracElement, valor) -> Rational:
    """Evalúa `f` en un valor racional; error si es un polo."""
    valor = QQ.convert(Rational(valor))
    x = f.field.ring.gens[0]
    numerador = f.numer.evaluate(x, valor)
    denominador = f.denom.evaluate(x, valor)
    if denominador == 0:
        raise ErrorPolo(f"{f.as_expr()} tiene un polo en {variable(f)} = {valor}")
    return QQ.to_sympy(QQ.convert(numerador) / QQ.convert(denominador))


def substitute(f: FracElement, regla: str):
    """
    Aplica una regla de sustitución. Reglas simbólicas: 't->1/q', 'q->1/t', 'q->v^2',
    't->v^-2'. Reglas de valor: 't=1/2', 'q=2', etc., que devuelven un racional.
    """
    coincidencia = _REGLA_VALOR.match(regla)
    if coincidencia:
        origen, valor = coincidencia.groups()
        if origen != variable(f):
            raise ErrorVariable(f"La regla '{regla}' no se aplica a la variable {variable(f)}")
        return evaluar(f, valor)
    if regla not in REGLAS_SIMBOLICAS:
        raise ErrorEntrada(f"Regla de sustitución no admitida: '{regla}'")
    origen, destino, exponente = REGLAS_SIMBOLICAS[regla]
    if origen != variable(f):
        raise ErrorVariable(f"La regla '{regla}' no se aplica a la variable {variable(f)}")
    return sustituir_monomio(f, destino, exponente)


def es_laurent(f: FracElement) -> bool:
    return len(f.denom.terms()) == 1


def es_polinomio(f: FracElement) -> bool:
    return f.denom.is_ground


def forma_canonica(f: FracElement) -> tuple[dict, dict]:
    """
    Devuelve (numerador, denominador) como diccionarios exponente → coeficiente racional,
    con el denominador mónico y de valuación cero; el numerador puede tener exponentes negativos.
    """
    denominador = _terminos(f.denom)
    valuacion = min(e for e, _ in denominador)
    principal = max(denominador)[1]
    num = {e - valuacion: QQ.to_sympy(c / principal) for e, c in _terminos(f.numer)}
    den = {e - valuacion: QQ.to_sympy(c / principal) for e, c in denominador}
    return dict(sorted(num.items())), dict(sorted(den.items()))


def coeficientes_laurent(f: FracElement) -> dict:
    """Coeficientes exponente → racional de un polinomio de Laurent."""
    if not es_laurent(f):
        raise ErrorInterno(f"Se esperaba un polinomio de Laurent: {f.as_expr()}")
    num, den = forma_canonica(f)
    return num


def phi_m(m: int, var: str = "t") -> FracElement:
    """φ_m = (1 − x)(1 − x²)···(1 − x^m), φ_0 = 1."""
    if m < 0:
        raise ErrorEntrada(f"φ_m requiere m >= 0, recibido {m}")
    return _phi_m(m, var)


@cache
def _phi_m(m, var):
    x = generador(var)
    resultado = campo(var).one
    for k in range(1, m + 1):
        resultado *= 1 - x ** k
    return resultado


def qbinom_plus(n: int, r: int, var: str = "t") -> FracElement:
    """φ_n/(φ_r φ_{n−r}) para 0 <= r <= n y 0 en otro caso."""
    if r < 0 or n < 0 or r > n:
        return campo(var).zero
    return phi_m(n, var) / (phi_m(r, var) * phi_m(n - r, var))


def a_texto(f: FracElement) -> str:
    return str(f.as_expr())


def a_latex(f: FracElement) -> str:
    return latex(f.as_expr())
