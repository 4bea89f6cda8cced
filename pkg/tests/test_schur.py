import pytest

from dhl.combinat import VACIA
from dhl.dlambda import uno, vmon
from dhl.elementos import SCHUR
from dhl.schur import matriz_h, producto_por_h, schur_laurent, to_schur_basis, verify_t0
from dhl.verificacion import ejecutar_suite


def test_schur_laurent_ejemplos():
    assert schur_laurent((), ()) == uno()
    assert schur_laurent((1,), (1,)) == vmon(((1,), (1,))) - uno()
    assert schur_laurent((2,), ()) == vmon(((2,), ()))
    assert schur_laurent((2, 1), ()) == vmon(((2, 1), ())) - vmon(((3,), ()))


def test_matriz_h_dimensiones():
    assert matriz_h((2, 1), (1,)).shape == (3, 3)
    assert matriz_h((), ()).shape == (0, 0)


@pytest.mark.parametrize("lam, mu", [((2, 1), (1,)), ((2, 2), (1, 1))])
def test_determinante_berkowitz_coincide_con_laplace(lam, mu):
    matriz = matriz_h(lam, mu)
    assert (matriz.det(method="berkowitz") - matriz.det(method="laplace")).expand() == 0


@pytest.mark.parametrize("lam, mu", [((1,), (1,)), ((2, 1), ()), ((2,), (1, 1))])
def test_verify_t0(lam, mu):
    assert verify_t0(lam, mu)


def test_to_schur_basis():
    x = vmon(((1,), (1,)))
    resultado = to_schur_basis(x)
    assert resultado.base == SCHUR
    assert resultado.coeficiente(((1,), (1,))) == 1
    assert resultado.coeficiente(VACIA) == 1


def test_producto_por_h():
    producto = producto_por_h((1,), (), 1, "plus")
    assert set(producto.soporte()) == {((2,), ()), ((1, 1), ())}


def test_suite_t0():
    informe = ejecutar_suite("schur-t0", 3)
    assert informe["failures"] == 0, informe["first_failure"]


@pytest.mark.lento
def test_suite_t0_completa():
    assert ejecutar_suite("schur-t0")["failures"] == 0
