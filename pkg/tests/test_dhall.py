import pytest

from dhl import ratfun
from dhl.combinat import Biparticion, VACIA
from dhl.dhall import (
    HALL_VHAT_PRIMA,
    automorfismo_vhat_prima,
    comprobar_tabla1,
    compatibilidad_inclusion,
    derived_structure_constant,
    embedding_minus,
    embedding_plus,
    generated_by_rows,
    generic_multiply,
    hall_multiply,
    hall_pieri,
    hall_pieri_numbers,
    phi_isomorphism,
    table1_rows,
    tabla1_esperada,
    u,
    unidad,
    vhat,
    vhat_denormalize,
    vhat_multiply,
    vhat_normalize,
    vhat_prime_normalize,
)
from dhl.dlambda import dhl_multiply
from dhl.elementos import DHL, HALL_VHAT, ElementoAlgebra
from dhl.errores import ErrorEntrada
from dhl.verificacion import ejecutar_suite

q = ratfun.generador("q")
t = ratfun.generador("t")


def V(mas, menos, coef=1):
    return ElementoAlgebra.monomio(DHL, "t", Biparticion(mas, menos), coef)


def test_constantes_de_estructura():
    assert derived_structure_constant(((2,), ()), ((), ()), ((2,), ())) == 1
    assert derived_structure_constant(((2,), (2,)), ((1,), ()), ((2, 1), (2,))) == q ** -1
    assert derived_structure_constant(((1,), ()), ((1,), ()), ((1, 1), ())) == 1 / q
    # grado incompatible
    assert derived_structure_constant(((1,), ()), ((1,), ()), ((1,), ())) == 0


def test_producto_mixto():
    producto = hall_multiply(u(((1,), ()), "q"), u(((), (1,)), "q"))
    assert producto == u(((1,), (1,)), "q") + u(VACIA, "q", q - 1)


def test_producto_en_t_y_en_v():
    producto = generic_multiply(u(((1,), ()), "t"), u(((), (1,)), "t"))
    assert producto == u(((1,), (1,)), "t") + u(VACIA, "t", 1 / t - 1)
    v = ratfun.generador("v")
    producto_v = hall_multiply(u(((1,), ()), "v"), u(((), (1,)), "v"))
    assert producto_v.coeficiente(VACIA) == v ** 2 - 1


def test_unidad_y_conmutatividad():
    x = u(((1,), (1,)), "t") + u(((2,), ()), "t", t)
    assert generic_multiply(unidad(), x) == x
    a, b = u(((1,), ()), "t"), u(((1,), (1,)), "t")
    assert generic_multiply(a, b) == generic_multiply(b, a)


def test_generic_multiply_requiere_t():
    with pytest.raises(ErrorEntrada):
        generic_multiply(u(VACIA, "q"), u(VACIA, "q"))


def test_vhat_normalize():
    assert vhat_normalize(u(((3,), ()))) == vhat(((3,), ()), "t", t ** -3)
    assert vhat_normalize(u(((), (3,)))) == vhat(((), (3,)))
    assert vhat_normalize(u(((1, 1, 1), ()))) == vhat(((1, 1, 1), ()), "t", t ** -6)
    x = u(((2, 1), (1,)), "t", 1 + t)
    assert vhat_denormalize(vhat_normalize(x)) == x
    with pytest.raises(ErrorEntrada):
        vhat_normalize(vhat(VACIA))


def test_vhat_prima():
    x = vhat_prime_normalize(u(((1,), (2,)), "q"))
    assert x.base == HALL_VHAT_PRIMA
    assert x.coeficiente(((1,), (2,))) == q ** 2
    assert automorfismo_vhat_prima(((1,), ()), ((), (1,)))


def test_hall_pieri():
    assert hall_pieri((), (), 2, "row", "plus") == vhat(((2,), ()))
    assert hall_pieri((), (1,), 1, "row", "plus") == vhat(((1,), (1,))) + vhat(VACIA, "t", 1 - t)
    assert hall_pieri((), (), 1, "column", "plus") == vhat(((1,), ()))
    with pytest.raises(ErrorEntrada):
        hall_pieri((), (), 1, "diagonal", "plus")


def test_hall_pieri_contra_producto():
    directo = vhat_multiply(vhat(((), (1,))), vhat(((1,), ())))
    assert directo == hall_pieri((), (1,), 1, "row", "plus")


def test_hall_pieri_numbers():
    cerrada = hall_pieri_numbers((), (1,), 1, "row", "plus")
    assert cerrada == hall_multiply(u(((), (1,)), "q"), u(((1,), ()), "q"))
    with pytest.raises(ErrorEntrada):
        hall_pieri_numbers((), (), 0, "row", "plus")


def test_phi_isomorphism():
    assert phi_isomorphism(vhat(VACIA)) == V((), ())
    assert phi_isomorphism(u(((2,), ()), "t")) == V((2,), (), t ** -2)
    assert phi_isomorphism(u(((), (2,)), "t")) == V((), (2,))
    assert phi_isomorphism(vhat(((1,), (1,)))) == V((1,), (1,))
    with pytest.raises(ErrorEntrada):
        phi_isomorphism(u(VACIA, "q"))


def test_phi_es_homomorfismo():
    a, b = vhat(((1,), ())), vhat(((), (1,)))
    assert phi_isomorphism(vhat_multiply(a, b)) == dhl_multiply(phi_isomorphism(a), phi_isomorphism(b))


def test_inclusiones():
    x = u(((2,), ()), "q")
    assert embedding_minus(x) == u(((), (2,)), "q")
    assert embedding_plus(x) == x
    assert compatibilidad_inclusion((1,), (1,), "plus")
    assert compatibilidad_inclusion((1,), (1,), "minus")


def test_tabla_de_ganchos():
    filas = table1_rows(2, 2, 1, 0)
    assert [f["fila"] for f in filas] == ["a", "b", "e"]
    esperado = tabla1_esperada(2, 2, 1, 0)
    assert esperado == {
        Biparticion((2, 1), (2,)): q ** -1,
        Biparticion((3,), (2,)): 1 - q ** -1,
        Biparticion((2,), (1,)): q - 1,
    }
    assert comprobar_tabla1(2, 2, 1, 0)
    with pytest.raises(ErrorEntrada, match="r, t >= 2"):
        table1_rows(1, 2, 0, 0)
    with pytest.raises(ErrorEntrada, match="hall_multiply"):
        table1_rows(2, 1, 1, 1)


def test_generacion():
    assert generated_by_rows(2)


def test_base_vhat():
    assert vhat(VACIA).base == HALL_VHAT


@pytest.mark.parametrize("suite, tamano", [
    ("dhall-pieri", 1),
    ("hall-numbers", 1),
    ("isomorphism", 2),
    ("table1", 2),
    ("embeddings", 2),
])
def test_suites(suite, tamano):
    informe = ejecutar_suite(suite, tamano)
    assert informe["failures"] == 0, informe["first_failure"]


@pytest.mark.lento
@pytest.mark.parametrize("suite", ["dhall-pieri", "hall-numbers", "isomorphism", "table1",
                                   "generation", "embeddings"])
def test_suites_completas(suite):
    assert ejecutar_suite(suite)["failures"] == 0
