"""Elementos de álgebra indexados por biparticiones con coeficientes en Q(t), Q(q) o Q(v)."""
from collections import defaultdict

from dhl.combinat import Biparticion, clave_canonica
from dhl.errores import ErrorVariable
from dhl import ratfun

# Bases admitidas
VMON = "Vmon"        # monomios v_{λ,μ} en DΛ_t
DHL = "DHL"          # V_{λ,μ}
SCHUR = "Schur"      # s_{λ,μ}
HALL_U = "HallU"     # [S^λ ⊕ S^μ[1]]
HALL_VHAT = "HallVhat"
BASES = (VMON, DHL, SCHUR, HALL_U, HALL_VHAT)


class ElementoAlgebra:
    """
    Combinación lineal finita de biparticiones en una base dada. No guarda
    coeficientes nulos; dos elementos son iguales si coinciden base, variable y términos.
    """

    __slots__ = ("base", "var", "terminos")

    def __init__(self, base: str, var: str, terminos=None):
        self.base = base
        self.var = var
        limpios = {}
        for bip, coef in (terminos or {}).items():
            coef = self._coeficiente(coef)
            if coef:
                limpios[Biparticion(tuple(bip[0]), tuple(bip[1]))] = coef
        self.terminos = limpios

    def _coeficiente(self, coef):
        if isinstance(coef, ratfun.FracElement):
            if ratfun.variable(coef) != self.var:
                raise ErrorVariable(
                    f"Coeficiente en {ratfun.variable(coef)} para un elemento en {self.var}")
            return coef
        return ratfun.constante(coef, self.var)

    @classmethod
    def cero(cls, base, var):
        return cls(base, var)

    @classmethod
    def monomio(cls, base, var, bip, coef=1):
        return cls(base, var, {bip: coef})

    @classmethod
    def desde_pares(cls, base, var, pares):
        """Suma los pares (bipartición, coeficiente), acumulando repetidos."""
        acumulado = defaultdict(lambda: ratfun.campo(var).zero)
        for bip, coef in pares:
            acumulado[Biparticion(tuple(bip[0]), tuple(bip[1]))] += coef
        return cls(base, var, acumulado)

    def _comprobar(self, otro):
        if self.base != otro.base or self.var != otro.var:
            raise ErrorVariable(
                f"Elementos incompatibles: {self.base}/{self.var} y {otro.base}/{otro.var}")

    def __add__(self, otro):
        self._comprobar(otro)
        terminos = dict(self.terminos)
        for bip, coef in otro.terminos.items():
            terminos[bip] = terminos.get(bip, ratfun.campo(self.var).zero) + coef
        return ElementoAlgebra(self.base, self.var, terminos)

    def __neg__(self):
        return ElementoAlgebra(self.base, self.var, {b: -c for b, c in self.terminos.items()})

    def __sub__(self, otro):
        return self + (-otro)

    def escalar(self, factor):
        factor = self._coeficiente(factor)
        return ElementoAlgebra(self.base, self.var, {b: factor * c for b, c in self.terminos.items()})

    def mapear(self, funcion, base=None, var=None):
        """Aplica `funcion` a cada coeficiente, opcionalmente cambiando base y variable."""
        return ElementoAlgebra(
            base or self.base, var or self.var,
            {b: funcion(c) for b, c in self.terminos.items()},
        )

    def coeficiente(self, bip):
        return self.terminos.get(Biparticion(tuple(bip[0]), tuple(bip[1])), ratfun.campo(self.var).zero)

    def soporte(self):
        return sorted(self.terminos, key=clave_canonica)

    def items(self):
        """Términos en orden canónico de serialización."""
        return [(bip, self.terminos[bip]) for bip in self.soporte()]

    def __eq__(self, otro):
        if not isinstance(otro, ElementoAlgebra):
            return NotImplemented
        return (self.base, self.var, self.terminos) == (otro.base, otro.var, otro.terminos)

    def __bool__(self):
        return bool(self.terminos)

    def __len__(self):
        return len(self.terminos)

    def __repr__(self):
        cuerpo = " + ".join(
            f"({ratfun.a_texto(c)})·{self.base}[{bip.mas}|{bip.menos}]" for bip, c in self.items())
        return f"<{self.base}/{self.var}: {cuerpo or '0'}>"
