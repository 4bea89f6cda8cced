import pytest
from sympy import Rational

from dhl import ratfun
from dhl.errores import ErrorEntrada, ErrorPolo, ErrorVariable
from dhl.verificacion import ejecutar_suite

t = ratfun.generador("t")
q = ratfun.generador("q")
v = ratfun.generador("v")


def test_arith():
    assert ratfun.arith(1 - t, 1 + t, "mul") == 1 - t ** 2
    assert ratfun.arith(1 - t ** 2, 1 - t, "div") == 1 + t
    assert ratfun.arith(t ** -1, t, "add") == (1 + t ** 2) / t
    assert ratfun.arith(t, t, "sub") == 0


def test_arith_errores():
    with pytest.raises(ErrorVariable):
        ratfun.arith(t, q, "add")
    with pytest.raises(ErrorPolo):
        ratfun.arith(t, ratfun.campo("t").zero, "div")


def test_substitute():
    assert ratfun.substitute(1 - t, "t->1/q") == (q - 1) / q
    assert ratfun.substitute(q, "q->v^2") == v ** 2
    assert ratfun.substitute(ratfun.phi_m(2), "t=1/2") == Rational(3, 8)
    assert ratfun.substitute(t ** 3, "t->v^-2") == v ** -6


def test_substitute_errores():
    with pytest.raises(ErrorPolo):
        ratfun.substitute(1 / (1 - t), "t=1")
    with pytest.raises(ErrorVariable):
        ratfun.substitute(q, "t->1/q")
    with pytest.raises(ErrorEntrada):
        ratfun.substitute(t, "t->q^3")


def test_phi_m():
    assert ratfun.phi_m(0) == 1
    assert ratfun.phi_m(2) == (1 - t) * (1 - t ** 2)
    assert ratfun.evaluar(ratfun.phi_m(3), 2) == -21
    with pytest.raises(ErrorEntrada):
        ratfun.phi_m(-1)


def test_qbinom_plus():
    assert ratfun.qbinom_plus(2, 1) == 1 + t
    assert ratfun.qbinom_plus(3, -1) == 0
    assert ratfun.qbinom_plus(3, 0) == 1
    assert ratfun.es_polinomio(ratfun.qbinom_plus(6, 3))


def test_forma_canonica():
    num, den = ratfun.forma_canonica((1 + t ** 2) / t)
    assert num == {-1: 1, 1: 1}
    assert den == {0: 1}
    num, den = ratfun.forma_canonica(1 / (2 - 2 * t))
    assert den == {0: -1, 1: 1}
    assert num == {0: Rational(-1, 2)}


def test_es_laurent():
    assert ratfun.es_laurent(t ** -2 + 3)
    assert not ratfun.es_laurent(1 / (1 - t))
    assert ratfun.coeficientes_laurent(t ** -2 + 3) == {-2: 1, 0: 3}


def test_constante():
    assert ratfun.evaluar(ratfun.constante("3/4", "q"), 0) == Rational(3, 4)
    assert ratfun.variable(ratfun.constante(1, "v")) == "v"
    with pytest.raises(ErrorVariable):
        ratfun.campo("x")


@pytest.mark.parametrize("suite", ["ratfun", "qbinom"])
def test_suites(suite):
    informe = ejecutar_suite(suite)
    assert informe["failures"] == 0, informe["first_failure"]


def test_suite_ratfun_otra_semilla():
    assert ejecutar_suite("ratfun", 4, semilla=7)["failures"] == 0
