import pytest

from dhl.combinat import (
    Biparticion,
    Comparacion,
    aplicar_operador,
    biparticiones,
    composiciones_debiles,
    conjugate,
    dominance_compare,
    formatear_biparticion,
    is_horizontal_strip,
    is_vertical_strip,
    multiplicity,
    n_stat,
    parse_biparticion,
    parse_particion,
    particion,
    particiones,
    strip_size,
    tiras_horizontales_arriba,
    tiras_verticales_abajo,
)
from dhl.errores import ErrorEntrada
from dhl.verificacion import ejecutar_suite


@pytest.mark.parametrize("lam, esperado", [
    ((), ()),
    ((2, 1), (2, 1)),
    ((3, 1), (2, 1, 1)),
])
def test_conjugate(lam, esperado):
    assert conjugate(lam) == esperado


@pytest.mark.parametrize("lam, esperado", [((), 0), ((3, 1), 1), ((2, 2, 1), 4)])
def test_n_stat(lam, esperado):
    assert n_stat(lam) == esperado


def test_multiplicity():
    assert multiplicity((2, 2, 1), 2) == 2
    assert multiplicity((2, 2, 1), 3) == 0
    assert multiplicity((1, 1, 1), 1) == 3
    with pytest.raises(ErrorEntrada):
        multiplicity((1,), 0)


def test_strips():
    assert is_horizontal_strip((1, 1), (2, 1))
    assert strip_size((1, 1), (2, 1)) == 1
    assert is_vertical_strip((1,), (1, 1, 1))
    assert strip_size((1,), (1, 1, 1)) == 2
    assert is_horizontal_strip((1,), (3, 1))
    assert not is_vertical_strip((1,), (3, 1))
    assert not is_horizontal_strip((2,), (1, 1))


def test_enumeradores_de_tiras():
    assert set(tiras_horizontales_arriba((1,), 1)) == {(2,), (1, 1)}
    assert set(tiras_verticales_abajo((2, 1), 1)) == {(2,), (1, 1)}


def test_particion_normaliza_y_valida():
    assert particion((2, 1, 0, 0)) == (2, 1)
    with pytest.raises(ErrorEntrada):
        particion((1, 2))
    with pytest.raises(ErrorEntrada):
        particion((2, -1))


def test_enumeracion():
    assert particiones(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(biparticiones(2)) == 5
    assert set(composiciones_debiles(2, 2)) == {(2, 0), (1, 1), (0, 2)}
    assert composiciones_debiles(1, 0) == ()


@pytest.mark.parametrize("a, b, esperado", [
    (Biparticion((2,), ()), Biparticion((1, 1), ()), Comparacion.DOMINA),
    (Biparticion((1,), ()), Biparticion((2,), ()), Comparacion.DOMINA),
    (Biparticion((2,), (1,)), Biparticion((1, 1), (2,)), Comparacion.DOMINA),
    (Biparticion((1, 1), ()), Biparticion((2,), ()), Comparacion.DOMINADA),
    (Biparticion((2,), (1, 1)), Biparticion((1, 1), (2,)), Comparacion.INCOMPARABLE),
    (Biparticion((1,), (1,)), Biparticion((1,), (1,)), Comparacion.IGUAL),
])
def test_dominance_compare(a, b, esperado):
    assert dominance_compare(a, b) == esperado


def test_operadores():
    bip = Biparticion((1, 1), (1,))
    assert aplicar_operador("R+", 1, 2, bip) == Biparticion((2,), (1,))
    assert aplicar_operador("L", 1, 1, Biparticion((1,), (1,))) == Biparticion((), ())
    assert aplicar_operador("R-", 1, 2, Biparticion((), (1,))) is None
    with pytest.raises(ErrorEntrada):
        aplicar_operador("R+", 2, 1, bip)


def test_formato_de_texto():
    assert parse_biparticion("2,1|1") == Biparticion((2, 1), (1,))
    assert parse_biparticion("-|1") == Biparticion((), (1,))
    assert parse_particion("0,1", vector=True) == (0, 1)
    assert formatear_biparticion(Biparticion((), (2, 1))) == "-|2,1"
    with pytest.raises(ErrorEntrada):
        parse_biparticion("2,1")
    with pytest.raises(ErrorEntrada):
        parse_particion("a,b")


@pytest.mark.parametrize("suite", ["conjugate", "strips", "dominance", "operators"])
def test_suites_combinatorias(suite):
    informe = ejecutar_suite(suite)
    assert informe["cases"] > 0
    assert informe["failures"] == 0, informe["first_failure"]
