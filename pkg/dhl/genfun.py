"""
Series generatrices truncadas en dos variables (y, z) con coeficientes en el álgebra de
Hall derivada sobre Q(v), q = v², y comprobación coeficiente a coeficiente de las
identidades entre Ẽ, H̃, Θ̃, sus factorizaciones y las series P̃.
"""
import logging
from functools import cache

from sympy import Rational

from dhl import ratfun
from dhl.combinat import VACIA, Biparticion, particiones
from dhl.config import GRADO_MAXIMO, GRADO_TOPE
from dhl.dhall import hall_multiply
from dhl.elementos import HALL_U, ElementoAlgebra
from dhl.errores import ErrorEntrada, ErrorLimite, ErrorSerie
from dhl.hall import aut_order

logger = logging.getLogger(__name__)

VAR = "v"

SERIES = ("Etilde", "Htilde", "ThetaTilde", "Theta1", "Theta2", "E1", "E2", "H1", "H2",
          "Ptilde", "PtildePrime")
IDENTIDADES = ("e_h", "theta_e", "theta_h", "transition_theta", "transition_E", "transition_H",
               "T_P", "theta_p", "EP", "HP", "PE_derivative", "euler", "theta_recurrence")


def _v():
    return ratfun.generador(VAR)


def _q():
    return _v() ** 2


def _cero():
    return ElementoAlgebra.cero(HALL_U, VAR)


def _escalar(c) -> ElementoAlgebra:
    return ElementoAlgebra.monomio(HALL_U, VAR, VACIA, c)


def _aut(lam):
    return ratfun.substitute(aut_order(lam), "q->v^2")


def _phi_q(m: int):
    """φ_m(q) = (1 − q)···(1 − q^m) escrito en v."""
    return ratfun.sustituir_monomio(ratfun.phi_m(m, "q"), VAR, 2)


class SerieTruncada:
    """Serie Σ c_{ij} y^i z^j con i + j <= grado y c_{ij} en la base [S^λ ⊕ S^μ[1]] sobre Q(v)."""

    def __init__(self, grado: int, coefs=None):
        if grado < 0:
            raise ErrorEntrada(f"El grado de truncamiento debe ser >= 0, recibido {grado}")
        self.grado = grado
        self.coefs = {
            (i, j): c for (i, j), c in (coefs or {}).items()
            if i + j <= grado and c
        }

    @classmethod
    def escalar(cls, grado, valores):
        """Serie escalar a partir de {(i, j): coeficiente en Q(v)}."""
        return cls(grado, {ij: _escalar(c) for ij, c in valores.items()})

    @classmethod
    def uno(cls, grado):
        return cls.escalar(grado, {(0, 0): 1})

    def coeficiente(self, i, j) -> ElementoAlgebra:
        return self.coefs.get((i, j), _cero())

    def indices(self):
        """Índices (i, j) en orden de grado total y luego de i."""
        return [(i, d - i) for d in range(self.grado + 1) for i in range(d, -1, -1)]

    def truncar(self, grado):
        return SerieTruncada(min(grado, self.grado), self.coefs)

    def __add__(self, otra):
        grado = min(self.grado, otra.grado)
        coefs = dict(self.coefs)
        for ij, c in otra.coefs.items():
            coefs[ij] = coefs[ij] + c if ij in coefs else c
        return SerieTruncada(grado, coefs)

    def __neg__(self):
        return SerieTruncada(self.grado, {ij: -c for ij, c in self.coefs.items()})

    def __sub__(self, otra):
        return self + (-otra)

    def por_escalar(self, factor):
        return SerieTruncada(self.grado, {ij: c.escalar(factor) for ij, c in self.coefs.items()})

    def __mul__(self, otra):
        if not isinstance(otra, SerieTruncada):
            return self.por_escalar(otra)
        grado = min(self.grado, otra.grado)
        coefs = {}
        for (i1, j1), a in self.coefs.items():
            for (i2, j2), b in otra.coefs.items():
                if i1 + j1 + i2 + j2 > grado:
                    continue
                ij = (i1 + i2, j1 + j2)
                producto = hall_multiply(a, b)
                coefs[ij] = coefs[ij] + producto if ij in coefs else producto
        return SerieTruncada(grado, coefs)

    def constante_escalar(self):
        """Término constante como escalar de Q(v); error si no es múltiplo de la unidad."""
        c = self.coeficiente(0, 0)
        if any(b != VACIA for b in c.terminos) or not c:
            raise ErrorSerie("El término constante no es un múltiplo invertible de la unidad")
        return c.coeficiente(VACIA)

    def inversa(self):
        c0 = self.constante_escalar()
        inverso_c0 = 1 / c0
        resultado = {(0, 0): _escalar(inverso_c0)}
        for i, j in self.indices()[1:]:
            acumulado = _cero()
            for (a, b), coef in self.coefs.items():
                if (a, b) == (0, 0) or a > i or b > j:
                    continue
                previo = resultado.get((i - a, j - b))
                if previo:
                    acumulado = acumulado + hall_multiply(coef, previo)
            resultado[(i, j)] = acumulado.escalar(-inverso_c0)
        return SerieTruncada(self.grado, resultado)

    def __truediv__(self, otra):
        if not isinstance(otra, SerieTruncada):
            factor = otra if isinstance(otra, ratfun.FracElement) else ratfun.constante(otra, VAR)
            return self.por_escalar(1 / factor)
        return self * otra.inversa()

    def potencia(self, k: int):
        resultado = SerieTruncada.uno(self.grado)
        for _ in range(k):
            resultado = resultado * self
        return resultado

    def exp(self):
        """exp(X) = Σ X^k/k! para X con término constante nulo."""
        if self.coeficiente(0, 0):
            raise ErrorSerie("exp requiere término constante nulo")
        resultado = SerieTruncada.uno(self.grado)
        termino = SerieTruncada.uno(self.grado)
        for k in range(1, self.grado + 1):
            termino = (termino * self) / k
            resultado = resultado + termino
        return resultado

    def log(self):
        """log(1 + X) = Σ (−1)^{k−1} X^k/k; el término constante debe ser 1."""
        if self.constante_escalar() != 1:
            raise ErrorSerie("log requiere término constante igual a 1")
        x = self - SerieTruncada.uno(self.grado)
        resultado = SerieTruncada(self.grado)
        potencia = SerieTruncada.uno(self.grado)
        for k in range(1, self.grado + 1):
            potencia = potencia * x
            resultado = resultado + potencia.por_escalar(ratfun.constante(Rational((-1) ** (k - 1), k), VAR))
        return resultado

    def derivada_y(self):
        return SerieTruncada(self.grado - 1 if self.grado else 0, {
            (i - 1, j): c.escalar(i) for (i, j), c in self.coefs.items() if i > 0
        })

    def derivada_z(self):
        return SerieTruncada(self.grado - 1 if self.grado else 0, {
            (i, j - 1): c.escalar(j) for (i, j), c in self.coefs.items() if j > 0
        })

    def reescalar(self, factor_y, factor_z):
        """Sustitución y ↦ factor_y·y, z ↦ factor_z·z."""
        fy = factor_y if isinstance(factor_y, ratfun.FracElement) else ratfun.constante(factor_y, VAR)
        fz = factor_z if isinstance(factor_z, ratfun.FracElement) else ratfun.constante(factor_z, VAR)
        return SerieTruncada(self.grado, {
            (i, j): c.escalar(fy ** i * fz ** j) for (i, j), c in self.coefs.items()
        })

    def primera_diferencia(self, otra):
        """Primer índice (en orden de grado) donde difieren, o None."""
        grado = min(self.grado, otra.grado)
        for i, j in SerieTruncada(grado).indices():
            if self.coeficiente(i, j) != otra.coeficiente(i, j):
                return i, j
        return None

    def __eq__(self, otra):
        if not isinstance(otra, SerieTruncada):
            return NotImplemented
        return self.primera_diferencia(otra) is None

    def __repr__(self):
        return f"<SerieTruncada grado={self.grado} términos={len(self.coefs)}>"


def _u(mas, menos, coef=1):
    return ElementoAlgebra.monomio(HALL_U, VAR, Biparticion(tuple(mas), tuple(menos)), coef)


def _fila(k):
    return (k,) if k else ()


def _columna(k):
    return (1,) * k


def _e_tilde(N):
    v = _v()
    coefs = {}
    for r in range(N + 1):
        for t in range(N + 1 - r):
            coef = v ** (r * (r - 1) + t * (t - 1)) / (_aut(_columna(r)) * _aut(_columna(t)))
            coefs[(r, t)] = _u(_columna(r), _columna(t), coef)
    return SerieTruncada(N, coefs)


def _suma_aut(r, t):
    total = _cero()
    for lam in particiones(r):
        for mu in particiones(t):
            total = total + _u(lam, mu, 1 / (_aut(lam) * _aut(mu)))
    return total


def _h_tilde(N):
    return SerieTruncada(N, {(r, t): _suma_aut(r, t) for r in range(N + 1) for t in range(N + 1 - r)})


def _theta_tilde(N):
    return SerieTruncada(N, {(r, t): _u(_fila(r), _fila(t)) for r in range(N + 1) for t in range(N + 1 - r)})


@cache
def p_tilde(r: int, lado: str = "mas") -> ElementoAlgebra:
    """P̃_r = Σ_{λ⊢r} φ_{ℓ(λ)−1}(q)·[S^λ]/|Aut λ| (o su versión [S^λ[1]] con lado='menos')."""
    if r < 1:
        raise ErrorEntrada(f"P̃_r requiere r >= 1, recibido {r}")
    total = _cero()
    for lam in particiones(r):
        coef = _phi_q(len(lam) - 1) / _aut(lam)
        total = total + (_u(lam, (), coef) if lado == "mas" else _u((), lam, coef))
    return total


def build_series(cual: str, N: int) -> SerieTruncada:
    """Construye una de las series con nombre truncada en grado total N."""
    if N < 0:
        raise ErrorEntrada(f"N debe ser >= 0, recibido {N}")
    v = _v()
    if cual == "Etilde":
        return _e_tilde(N)
    if cual == "Htilde":
        return _h_tilde(N)
    if cual == "ThetaTilde":
        return _theta_tilde(N)
    if cual == "Theta1":
        return SerieTruncada(N, {(r, 0): _u(_fila(r), ()) for r in range(N + 1)})
    if cual == "Theta2":
        return SerieTruncada(N, {(0, t): _u((), _fila(t)) for t in range(N + 1)})
    if cual == "E1":
        return SerieTruncada(N, {
            (r, 0): _u(_columna(r), (), v ** (r * (r - 1)) / _aut(_columna(r))) for r in range(N + 1)})
    if cual == "E2":
        return SerieTruncada(N, {
            (0, t): _u((), _columna(t), v ** (t * (t - 1)) / _aut(_columna(t))) for t in range(N + 1)})
    if cual == "H1":
        return SerieTruncada(N, {(r, 0): _suma_aut(r, 0) for r in range(N + 1)})
    if cual == "H2":
        return SerieTruncada(N, {(0, t): _suma_aut(0, t) for t in range(N + 1)})
    if cual == "Ptilde":
        return SerieTruncada(N, {(r - 1, 0): p_tilde(r, "mas") for r in range(1, N + 2)})
    if cual == "PtildePrime":
        return SerieTruncada(N, {(0, t - 1): p_tilde(t, "menos") for t in range(1, N + 2)})
    raise ErrorEntrada(f"Serie desconocida: '{cual}' (opciones: {', '.join(SERIES)})")


def exp_q_series(argumento: SerieTruncada) -> SerieTruncada:
    """exp_q(X) = Σ X^r/[r]_q! con [r]_q! = Π_{k<=r} (1 − q^k)/(1 − q)."""
    if argumento.coeficiente(0, 0):
        raise ErrorSerie("exp_q requiere término constante nulo")
    q = _q()
    resultado = SerieTruncada.uno(argumento.grado)
    potencia = SerieTruncada.uno(argumento.grado)
    factorial = ratfun.campo(VAR).one
    for r in range(1, argumento.grado + 1):
        potencia = potencia * argumento
        factorial *= (1 - q ** r) / (1 - q)
        resultado = resultado + potencia / factorial
    return resultado


def exp_q_yz(N: int) -> SerieTruncada:
    """exp_q(yz/(1−q)) = Σ_r (yz)^r/φ_r(q)."""
    return SerieTruncada.escalar(N, {(r, r): 1 / _phi_q(r) for r in range(N // 2 + 1)})


def _serie_log_yz(N, coeficiente):
    """Σ_{k>=1} coeficiente(k)·(yz)^k."""
    return SerieTruncada.escalar(N, {(k, k): coeficiente(k) for k in range(1, N // 2 + 1)})


def _exp_p(N, coeficiente, lado):
    """exp(Σ_r coeficiente(r)·P̃_r·y^r) o su versión en z con P̃'."""
    coefs = {}
    for r in range(1, N + 1):
        ij = (r, 0) if lado == "mas" else (0, r)
        coefs[ij] = p_tilde(r, lado).escalar(coeficiente(r))
    return SerieTruncada(N, coefs).exp()


def q_numero(m: int):
    """[m]_v = (v^m − v^{−m})/(v − v^{−1})."""
    v = _v()
    return (v ** m - v ** -m) / (v - 1 / v)


@cache
def t_mn_closed(m: int, n: int) -> ElementoAlgebra:
    """T̃_{m,n} en forma cerrada."""
    if m < 0 or n < 0 or (m, n) == (0, 0):
        raise ErrorEntrada(f"T̃_{{m,n}} requiere (m, n) != (0, 0) no negativos: ({m}, {n})")
    v = _v()
    total = _cero()
    if n == 0:
        total = total + p_tilde(m, "mas").escalar(v ** m * q_numero(m) / m)
    if m == 0:
        total = total + p_tilde(n, "menos").escalar(v ** n * q_numero(n) / n)
    if m == n:
        total = total - _escalar(v ** m * q_numero(m) / m)
    return total


def theta_mn(m: int, n: int) -> ElementoAlgebra:
    """Θ̃_{m,n} = [S^{(m)} ⊕ S^{(n)}[1]]/(v − v⁻¹)."""
    v = _v()
    return _u(_fila(m), _fila(n), 1 / (v - 1 / v))


def _lados(identidad: str, N: int):
    """Pares (lado izquierdo, lado derecho) de la identidad."""
    q, v = _q(), _v()
    if identidad == "e_h":
        E = build_series("Etilde", N)
        return [(build_series("Htilde", N) * E.reescalar(-1, -1), exp_q_yz(N).potencia(2))]
    if identidad == "theta_e":
        E = build_series("Etilde", N)
        factor = SerieTruncada.escalar(N, {(0, 0): 1, (1, 1): -q}).potencia(2)
        return [(build_series("ThetaTilde", N), factor * E.reescalar(-1, -1) / E.reescalar(-q, -q))]
    if identidad == "theta_h":
        H = build_series("Htilde", N)
        factor = SerieTruncada.escalar(N, {(0, 0): 1, (1, 1): -1}).potencia(2).inversa()
        return [(build_series("ThetaTilde", N), factor * H.reescalar(q, q) / H)]
    if identidad == "transition_theta":
        cola = _serie_log_yz(N, lambda k: (1 - q ** k) / k).exp()
        return [(build_series("ThetaTilde", N), build_series("Theta1", N) * build_series("Theta2", N) * cola)]
    if identidad == "transition_E":
        return [(build_series("Etilde", N), build_series("E1", N) * build_series("E2", N) * exp_q_yz(N))]
    if identidad == "transition_H":
        return [(build_series("Htilde", N), build_series("H1", N) * build_series("H2", N) * exp_q_yz(N))]
    if identidad == "T_P":
        cerrada = SerieTruncada(N, {
            (m, d - m): t_mn_closed(m, d - m) for d in range(1, N + 1) for m in range(d + 1)
        })
        return [(build_series("ThetaTilde", N).log(), cerrada.por_escalar(v - 1 / v))]
    if identidad == "theta_p":
        derecho = (_exp_p(N, lambda r: (q ** r - 1) / r, "mas")
                   * _exp_p(N, lambda r: (q ** r - 1) / r, "menos")
                   * _serie_log_yz(N, lambda k: (1 - q ** k) / k).exp())
        return [(build_series("ThetaTilde", N), derecho)]
    if identidad == "EP":
        signo = lambda r: ratfun.constante(Rational((-1) ** (r - 1), r), VAR)  # noqa: E731
        derecho = _exp_p(N, signo, "mas") * _exp_p(N, signo, "menos") * exp_q_yz(N)
        return [(build_series("Etilde", N), derecho)]
    if identidad == "HP":
        inverso = lambda r: ratfun.constante(Rational(1, r), VAR)  # noqa: E731
        derecho = _exp_p(N, inverso, "mas") * _exp_p(N, inverso, "menos") * exp_q_yz(N)
        return [(build_series("Htilde", N), derecho)]
    if identidad == "PE_derivative":
        return _lados_derivadas(N)
    if identidad == "euler":
        return [(exp_q_yz(N), _serie_log_yz(N, lambda k: 1 / (k * (1 - q ** k))).exp())]
    if identidad == "theta_recurrence":
        return _lados_recurrencia(N)
    raise ErrorEntrada(f"Identidad desconocida: '{identidad}' (opciones: {', '.join(IDENTIDADES)})")


def _lados_derivadas(N):
    q = _q()
    M = N - 1
    E, H = build_series("Etilde", N), build_series("Htilde", N)
    P, Pp = build_series("Ptilde", M), build_series("PtildePrime", M)
    suma_y = SerieTruncada.escalar(M, {(k - 1, k): 1 / (1 - q ** k) for k in range(1, N + 1)})
    suma_z = SerieTruncada.escalar(M, {(k, k - 1): 1 / (1 - q ** k) for k in range(1, N + 1)})
    E_m, H_m = E.truncar(M), H.truncar(M)
    return [
        (P.reescalar(-1, 1) * E_m, E.derivada_y() - E_m * suma_y),
        (P * H_m, H.derivada_y() - H_m * suma_y),
        (Pp.reescalar(1, -1) * E_m, E.derivada_z() - E_m * suma_z),
        (Pp * H_m, H.derivada_z() - H_m * suma_z),
    ]


def _lados_recurrencia(N):
    v = _v()
    factor = v - 1 / v
    en_y_izq, en_y_der, en_z_izq, en_z_der = {}, {}, {}, {}
    for d in range(1, N + 1):
        for m in range(d + 1):
            n = d - m
            if m >= 1:
                en_y_izq[(m, n)] = theta_mn(m, n).escalar(m)
                total = _cero()
                for a in range(1, m + 1):
                    for b in range(n + 1):
                        total = total + hall_multiply(t_mn_closed(a, b), theta_mn(m - a, n - b)).escalar(a)
                en_y_der[(m, n)] = total.escalar(factor)
            if n >= 1:
                en_z_izq[(m, n)] = theta_mn(m, n).escalar(n)
                total = _cero()
                for a in range(m + 1):
                    for b in range(1, n + 1):
                        total = total + hall_multiply(t_mn_closed(a, b), theta_mn(m - a, n - b)).escalar(b)
                en_z_der[(m, n)] = total.escalar(factor)
    return [
        (SerieTruncada(N, en_y_izq), SerieTruncada(N, en_y_der)),
        (SerieTruncada(N, en_z_izq), SerieTruncada(N, en_z_der)),
    ]


def verify_identity(identidad: str, N: int, formatear=None) -> dict:
    """
    Compara ambos lados de la identidad hasta grado total N. Devuelve el informe
    {identity, degree, status, first_mismatch}; un fallo no es una excepción.
    """
    if N > GRADO_TOPE:
        raise ErrorLimite(f"El grado {N} supera el tope absoluto {GRADO_TOPE}")
    if N > GRADO_MAXIMO:
        logger.warning(f"⚠️ Grado {N} por encima de la cota configurada ({GRADO_MAXIMO}); puede tardar")
    formatear = formatear or repr
    logger.info(f"Comprobando la identidad {identidad} hasta grado {N}")
    informe = {"identity": identidad, "degree": N, "status": "pass", "first_mismatch": None}
    for izquierdo, derecho in _lados(identidad, N):
        diferencia = izquierdo.primera_diferencia(derecho)
        if diferencia is not None:
            i, j = diferencia
            informe["status"] = "fail"
            informe["first_mismatch"] = {
                "i": i, "j": j,
                "lhs": formatear(izquierdo.coeficiente(i, j)),
                "rhs": formatear(derecho.coeficiente(i, j)),
            }
            logger.warning(f"⚠️ {identidad}: discrepancia en y^{i} z^{j}")
            break
    else:
        logger.info(f"✓ {identidad} se cumple hasta grado {N}")
    return informe
