"""
Álgebra de Hall clásica de la aljaba de Jordan: polinomios de Hall F^λ_{μν}(q) a partir
de las constantes de estructura de Hall-Littlewood, órdenes de automorfismos y
la tabla de polinomios de Hall con volcado y persistencia.
"""
import json
import logging
from functools import cache
from pathlib import Path

import joblib
import pandas as pd

from dhl import ratfun
from dhl.combinat import (
    Biparticion,
    conjugate,
    formatear_particion,
    is_horizontal_strip,
    n_stat,
    particion,
    particiones,
    parse_particion,
    strip_size,
    tamano,
)
from dhl.dlambda import double_hl, to_dhl_basis, vmon_multiply
from dhl.elementos import HALL_U, ElementoAlgebra
from dhl.errores import ErrorEntrada, ErrorInterno
from dhl.oraculo import brute_force_ext, brute_force_hall
from dhl.pieri import b_poly, f_vertical, phi_skew

logger = logging.getLogger(__name__)


def _q(n: int):
    return ratfun.potencia("q", n)


def _en_q_inverso(f):
    """f(t) ↦ f(q⁻¹)."""
    return ratfun.substitute(f, "t->1/q")


@cache
def aut_order(lam):
    """|Aut(S^{(λ)})| = q^{|λ|+2n(λ)}·b_λ(q⁻¹)."""
    lam = particion(lam)
    return _q(tamano(lam) + 2 * n_stat(lam)) * _en_q_inverso(b_poly(lam))


def hom_order(mu, nu):
    """|Hom(S^{(μ)}, S^{(ν)})| = q^{Σ_{i,j} min(μ_i, ν_j)} = q^{Σ_k μ'_k ν'_k}."""
    mc, nc = conjugate(particion(mu)), conjugate(particion(nu))
    return _q(sum(a * b for a, b in zip(mc, nc)))


class TablaHall:
    """
    Memoria de polinomios de Hall indexada por (μ, ν, λ). Se rellena por filas (μ, ν)
    desarrollando Q_μ·Q_ν en la base Q_λ.
    """

    def __init__(self):
        self.entradas = {}
        self.filas_calculadas = set()

    def __len__(self):
        return len(self.entradas)

    def fila(self, mu, nu) -> dict:
        """Todos los λ con F^λ_{μν} ≠ 0."""
        mu, nu = particion(mu), particion(nu)
        if (mu, nu) not in self.filas_calculadas:
            self._calcular_fila(mu, nu)
        return {
            lam: self.entradas[(mu, nu, lam)]
            for lam in particiones(tamano(mu) + tamano(nu))
            if (mu, nu, lam) in self.entradas
        }

    def _calcular_fila(self, mu, nu):
        producto = to_dhl_basis(vmon_multiply(double_hl(mu, ()), double_hl(nu, ())))
        factor = b_poly(mu) * b_poly(nu)
        for bip, c in producto.terminos.items():
            if bip.menos:
                raise ErrorInterno(f"Q_{mu}·Q_{nu} produce un término con parte negativa: {bip}")
            lam = bip.mas
            f = c * b_poly(lam) / factor
            F = _q(n_stat(lam) - n_stat(mu) - n_stat(nu)) * _en_q_inverso(f)
            if not ratfun.es_laurent(F):
                raise ErrorInterno(f"F^{lam}_{{{mu},{nu}}} no es un polinomio de Laurent: {F.as_expr()}")
            self.entradas[(mu, nu, lam)] = F
        self.filas_calculadas.add((mu, nu))
        logger.debug(f"Fila de Hall ({mu}, {nu}): {len(producto)} términos")

    def construir(self, tamano_maximo: int):
        """Rellena todas las filas con |μ| + |ν| <= tamano_maximo."""
        for total in range(tamano_maximo + 1):
            for k in range(total + 1):
                for mu in particiones(k):
                    for nu in particiones(total - k):
                        self.fila(mu, nu)
        logger.info(f"✓ Tabla de Hall hasta tamaño {tamano_maximo}: {len(self)} entradas")
        return self

    def a_dataframe(self) -> pd.DataFrame:
        registros = [
            {
                "mu": formatear_particion(mu),
                "nu": formatear_particion(nu),
                "lambda": formatear_particion(lam),
                "F": ratfun.a_texto(F),
            }
            for (mu, nu, lam), F in self.entradas.items()
        ]
        df = pd.DataFrame(registros, columns=["mu", "nu", "lambda", "F"])
        if df.empty:
            return df
        df["_orden"] = [
            (tamano(parse_particion(l)), parse_particion(m), parse_particion(n), parse_particion(l))
            for m, n, l in zip(df["mu"], df["nu"], df["lambda"])
        ]
        return df.sort_values("_orden").drop(columns="_orden").reset_index(drop=True)

    def volcar(self, ruta):
        """Escribe la tabla en JSON (indent=2) o CSV según la extensión."""
        ruta = Path(ruta)
        df = self.a_dataframe()
        if ruta.suffix == ".csv":
            df.to_csv(ruta, index=False)
        elif ruta.suffix == ".json":
            with open(ruta, "w", encoding="utf-8") as f:
                json.dump(df.to_dict(orient="records"), f, indent=2, ensure_ascii=False)
        else:
            raise ErrorEntrada(f"Extensión no admitida para el volcado: '{ruta.suffix}'")
        logger.info(f"✓ Tabla de Hall guardada en {ruta}")

    def guardar(self, ruta):
        """Persiste la memoria con joblib (coeficientes como texto)."""
        datos = {
            "entradas": {clave: ratfun.a_texto(F) for clave, F in self.entradas.items()},
            "filas": sorted(self.filas_calculadas),
        }
        joblib.dump(datos, ruta)
        logger.info(f"✓ Memoria de la tabla de Hall guardada en {ruta}")

    @classmethod
    def cargar(cls, ruta):
        datos = joblib.load(ruta)
        tabla = cls()
        tabla.entradas = {
            tuple(clave): ratfun.desde_expresion(texto, "q")
            for clave, texto in datos["entradas"].items()
        }
        tabla.filas_calculadas = {tuple(fila) for fila in datos["filas"]}
        logger.info(f"✓ Memoria de la tabla de Hall cargada desde {ruta} ({len(tabla)} entradas)")
        return tabla

    def incorporar(self, otra: "TablaHall"):
        self.entradas.update(otra.entradas)
        self.filas_calculadas |= otra.filas_calculadas


TABLA = TablaHall()


def hall_polynomial(mu, nu, lam):
    """F^λ_{μν}(q); cero si los tamaños no cuadran."""
    mu, nu, lam = particion(mu), particion(nu), particion(lam)
    if tamano(lam) != tamano(mu) + tamano(nu):
        return ratfun.campo("q").zero
    return TABLA.fila(mu, nu).get(lam, ratfun.campo("q").zero)


def hall_pieri_row(mu, r: int, nu):
    """F^ν_{μ,(r)}·|Aut(S^{(r)})| en forma cerrada."""
    mu, nu = particion(mu), particion(nu)
    if r < 0:
        raise ErrorEntrada(f"r debe ser >= 0, recibido {r}")
    if not is_horizontal_strip(mu, nu) or strip_size(mu, nu) != r:
        return ratfun.campo("q").zero
    return _q(n_stat(nu) - n_stat(mu) + r) * _en_q_inverso(phi_skew(nu, mu))


def hall_column_coeff(mu, m: int, lam):
    """F^λ_{μ,(1^m)} = q^{n(λ)−n(μ)−n(1^m)}·f^λ_{μ,(1^m)}(q⁻¹)."""
    mu, lam = particion(mu), particion(lam)
    if m < 0:
        raise ErrorEntrada(f"m debe ser >= 0, recibido {m}")
    f = f_vertical(mu, m, lam)
    if not f:
        return ratfun.campo("q").zero
    n_columna = m * (m - 1) // 2
    return _q(n_stat(lam) - n_stat(mu) - n_columna) * _en_q_inverso(f)


def constante_clasica(mu, nu, lam):
    """G^λ_{μν} = F^λ_{μν}·|Aut μ|·|Aut ν| / |Aut λ| (Riedtmann-Peng)."""
    return hall_polynomial(mu, nu, lam) * aut_order(mu) * aut_order(nu) / aut_order(lam)


def classical_multiply(a: ElementoAlgebra, b: ElementoAlgebra) -> ElementoAlgebra:
    """Producto en el álgebra de Hall clásica, con elementos [S^λ] como biparticiones (λ, ∅)."""
    for x in (a, b):
        if x.base != HALL_U or x.var != "q" or any(bip.menos for bip in x.terminos):
            raise ErrorEntrada("classical_multiply espera elementos HallU en q con parte negativa vacía")
    pares = []
    for bip_a, ca in a.terminos.items():
        for bip_b, cb in b.terminos.items():
            for lam in TABLA.fila(bip_a.mas, bip_b.mas):
                G = constante_clasica(bip_a.mas, bip_b.mas, lam)
                pares.append((Biparticion(lam, ()), ca * cb * G))
    return ElementoAlgebra.desde_pares(HALL_U, "q", pares)


def riedtmann_peng(mu, nu, lam, q: int) -> bool:
    """Compara F·|Aut μ|·|Aut ν|/|Aut λ| en q con el cociente |Ext¹_λ|/|Hom| del oráculo."""
    valor = ratfun.evaluar(constante_clasica(mu, nu, lam), q)
    return valor == brute_force_ext(mu, nu, lam, q)


def comprobar_oraculo(mu, nu, lam, q: int) -> bool:
    """Compara F^λ_{μν}(q) con el conteo directo de submódulos."""
    return ratfun.evaluar(hall_polynomial(mu, nu, lam), q) == brute_force_hall(mu, nu, lam, q)
