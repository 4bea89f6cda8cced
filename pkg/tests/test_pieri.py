import pytest

from dhl import ratfun
from dhl.combinat import Biparticion
from dhl.elementos import DHL, SCHUR, ElementoAlgebra
from dhl.errores import ErrorEntrada
from dhl.pieri import (
    b_poly,
    f_vertical,
    phi_skew,
    pieri_horizontal,
    pieri_schur,
    pieri_vertical,
    psi_skew,
    simetria_lados,
)
from dhl.verificacion import ejecutar_suite

t = ratfun.generador("t")


def V(mas, menos, coef=1):
    return ElementoAlgebra.monomio(DHL, "t", Biparticion(mas, menos), coef)


def s(mas, menos):
    return ElementoAlgebra.monomio(SCHUR, "t", Biparticion(mas, menos))


def test_phi_psi():
    assert phi_skew((1,), ()) == 1 - t
    assert psi_skew((1,), ()) == 1
    assert phi_skew((2, 1), (1, 1)) == 1 - t
    assert psi_skew((2, 1), (1, 1)) == 1 - t ** 2


def test_phi_psi_fuera_de_tiras():
    assert phi_skew((1, 1), ()) == 0
    assert psi_skew((2,), (1, 1)) == 0


def test_phi_en_otra_variable():
    q = ratfun.generador("q")
    assert phi_skew((1,), (), "q") == 1 - q


def test_b_poly():
    assert b_poly(()) == 1
    assert b_poly((1, 1)) == (1 - t) * (1 - t ** 2)
    assert b_poly((2, 2, 1)) == (1 - t) * (1 - t ** 2) * (1 - t)


def test_f_vertical():
    assert f_vertical((), 1, (1,)) == 1
    assert f_vertical((1,), 1, (1, 1)) == 1 + t
    assert f_vertical((1,), 1, (2,)) == 1
    assert f_vertical((1,), 2, (2,)) == 0
    assert f_vertical((), 2, (2,)) == 0


def test_pieri_horizontal():
    assert pieri_horizontal((), (), 3, "plus") == V((3,), ())
    assert pieri_horizontal((), (1,), 1, "plus") == V((1,), (1,)) + V((), (), 1 - t)
    assert pieri_horizontal((), (), 1, "minus") == V((), (1,))
    assert pieri_horizontal((1,), (), 1, "plus") == V((2,), (), 1 - t) + V((1, 1), ())


def test_pieri_vertical():
    assert pieri_vertical((), (), 1, "plus") == V((1,), ())
    assert pieri_vertical((), (), 2, "plus") == V((1, 1), ())
    assert pieri_vertical((), (), 2, "minus") == V((), (1, 1))


def test_pieri_schur():
    assert pieri_schur((), (), 2, "plus") == s((2,), ())
    assert pieri_schur((), (1,), 1, "plus") == s((1,), (1,)) + s((), ())
    assert pieri_schur((1,), (), 1, "plus") == s((2,), ()) + s((1, 1), ())


def test_pieri_errores():
    with pytest.raises(ErrorEntrada):
        pieri_horizontal((), (), 0, "plus")
    with pytest.raises(ErrorEntrada):
        pieri_vertical((), (), 1, "ambos")


def test_simetria():
    assert simetria_lados((2,), (1,), 2)


@pytest.mark.parametrize("suite, tamano", [
    ("phipsi", 6),
    ("pieri-horizontal", 2),
    ("pieri-vertical", 2),
    ("pieri-schur", 2),
    ("pieri-symmetry", 4),
])
def test_suites(suite, tamano):
    informe = ejecutar_suite(suite, tamano)
    assert informe["failures"] == 0, informe["first_failure"]


@pytest.mark.lento
@pytest.mark.parametrize("suite", ["pieri-horizontal", "pieri-vertical", "pieri-schur"])
def test_suites_completas(suite):
    assert ejecutar_suite(suite)["failures"] == 0
