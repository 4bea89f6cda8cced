"""
Salida de funciones racionales y elementos de álgebra en JSON, LaTeX y texto plano.
Los términos se emiten siempre en el orden canónico de biparticiones.
"""
import json

from dhl import ratfun
from dhl.combinat import formatear_biparticion
from dhl.config import FORMATOS
from dhl.elementos import DHL, HALL_U, HALL_VHAT, SCHUR, VMON, ElementoAlgebra
from dhl.errores import ErrorEntrada

# Símbolo de cada base en texto plano
_SIMBOLOS_TEXTO = {
    VMON: "v",
    DHL: "V",
    SCHUR: "s",
    HALL_U: "u",
    HALL_VHAT: "Vhat",
    "HallVhat'": "Vhat'",
}


def ratfun_json(f) -> dict:
    """{"var", "num", "den"} con exponentes como claves y racionales como 'p/q'."""
    num, den = ratfun.forma_canonica(f)
    return {
        "var": ratfun.variable(f),
        "num": {str(e): str(c) for e, c in num.items()},
        "den": {str(e): str(c) for e, c in den.items()},
    }


def elemento_json(x: ElementoAlgebra) -> dict:
    return {
        "basis": x.base,
        "terms": [
            {"plus": list(bip.mas), "minus": list(bip.menos), "coeff": ratfun_json(c)}
            for bip, c in x.items()
        ],
    }


def _particion_latex(lam) -> str:
    return "(" + ",".join(str(p) for p in lam) + ")" if lam else r"\varnothing"


def _monomio_latex(bip) -> str:
    factores = [f"v^{{+}}_{{{p}}}" for p in bip.mas] + [f"v^{{-}}_{{{p}}}" for p in bip.menos]
    return " ".join(factores)


def _simbolo_latex(base: str, bip) -> str:
    if base == VMON:
        return _monomio_latex(bip)
    indice = f"{_particion_latex(bip.mas)},{_particion_latex(bip.menos)}"
    if base == DHL:
        return f"V_{{{indice}}}"
    if base == SCHUR:
        return f"s_{{{indice}}}"
    if base == HALL_U:
        return (f"[S^{{{_particion_latex(bip.mas)}}} \\oplus "
                f"S^{{{_particion_latex(bip.menos)}}}[1]]")
    if base == HALL_VHAT:
        return f"\\widehat{{V}}_{{{indice}}}"
    return f"\\widehat{{V}}'_{{{indice}}}"


def _coeficiente_latex(c, vacio: bool) -> str:
    """Coeficiente delante de un símbolo; se omite el 1 salvo en el término constante."""
    if c == 1 and not vacio:
        return ""
    if c == -1 and not vacio:
        return "-"
    texto = ratfun.a_latex(c)
    if not vacio and (len(c.numer.terms()) > 1):
        return f"\\left({texto}\\right) "
    return texto + ("" if vacio else " ")


def elemento_latex(x: ElementoAlgebra) -> str:
    """Expresión en modo matemático, sin escapar."""
    if not x:
        return "0"
    partes = []
    for bip, c in x.items():
        vacio = x.base == VMON and not bip.mas and not bip.menos
        termino = _coeficiente_latex(c, vacio) + ("" if vacio else _simbolo_latex(x.base, bip))
        partes.append(termino)
    texto = " + ".join(partes)
    return texto.replace("+ -", "- ")


def elemento_texto(x: ElementoAlgebra) -> str:
    if not x:
        return "0"
    simbolo = _SIMBOLOS_TEXTO.get(x.base, x.base)
    partes = []
    for bip, c in x.items():
        nombre = f"{simbolo}[{formatear_biparticion(bip)}]"
        if c == 1:
            partes.append(nombre)
        else:
            partes.append(f"({ratfun.a_texto(c)})*{nombre}")
    return " + ".join(partes)


def elemento(x: ElementoAlgebra, formato: str) -> str:
    """Serializa un elemento en el formato pedido."""
    if formato == "json":
        return json.dumps(elemento_json(x), indent=2, ensure_ascii=False)
    if formato == "latex":
        return elemento_latex(x)
    if formato == "plain":
        return elemento_texto(x)
    raise ErrorEntrada(f"Formato desconocido: '{formato}' (opciones: {', '.join(FORMATOS)})")


def funcion(f, formato: str) -> str:
    """Serializa una función racional suelta."""
    if formato == "json":
        return json.dumps(ratfun_json(f), indent=2, ensure_ascii=False)
    if formato == "latex":
        return ratfun.a_latex(f)
    if formato == "plain":
        return ratfun.a_texto(f)
    raise ErrorEntrada(f"Formato desconocido: '{formato}' (opciones: {', '.join(FORMATOS)})")


def informe(datos: dict, formato: str) -> str:
    """Informe de verificación: JSON tal cual o líneas 'clave: valor'."""
    if formato == "json":
        return json.dumps(datos, indent=2, ensure_ascii=False)
    lineas = []
    for clave, valor in datos.items():
        if isinstance(valor, dict):
            valor = ", ".join(f"{k}={v}" for k, v in valor.items())
        lineas.append(f"{clave}: {valor if valor is not None else '-'}")
    return "\n".join(lineas)
