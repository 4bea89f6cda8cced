import json

import pandas as pd
import pytest
from sympy import Rational

from dhl import ratfun
from dhl.dhall import u
from dhl.errores import ErrorEntrada, ErrorLimite
from dhl.hall import (
    TablaHall,
    aut_order,
    classical_multiply,
    comprobar_oraculo,
    constante_clasica,
    hall_column_coeff,
    hall_pieri_row,
    hall_polynomial,
    hom_order,
    riedtmann_peng,
)
from dhl.oraculo import (
    brute_force_ext,
    brute_force_hall,
    brute_force_hom,
    conteos_submodulos,
    subespacios_rref,
    tipo_nilpotente,
    _dm,
    nilpotente,
)
from dhl.verificacion import ejecutar_suite

q = ratfun.generador("q")


def test_aut_order():
    assert aut_order((1,)) == q - 1
    assert aut_order((1, 1)) == (q ** 2 - 1) * (q ** 2 - q)
    assert aut_order((2,)) == q ** 2 - q
    assert aut_order(()) == 1


def test_hall_polynomial_ejemplos():
    assert hall_polynomial((1,), (1,), (2,)) == 1
    assert hall_polynomial((1,), (1,), (1, 1)) == q + 1
    for r in range(1, 5):
        for a in range(r + 1):
            forma = lambda k: (k,) if k else ()  # noqa: E731
            assert hall_polynomial(forma(r - a), forma(a), (r,)) == 1


def test_hall_polynomial_tamanos_incompatibles():
    assert hall_polynomial((1,), (1,), (3,)) == 0


def test_hall_pieri_row():
    assert hall_pieri_row((), 1, (1,)) == q - 1
    assert hall_pieri_row((1,), 1, (2,)) == q - 1
    assert hall_pieri_row((2, 1), 0, (2, 1)) == 1
    assert hall_pieri_row((1,), 1, (1, 1)) == hall_polynomial((1,), (1,), (1, 1)) * aut_order((1,))
    with pytest.raises(ErrorEntrada):
        hall_pieri_row((), -1, ())


def test_hall_column_coeff():
    assert hall_column_coeff((), 2, (1, 1)) == 1
    assert hall_column_coeff((1,), 1, (1, 1)) == 1 + q
    assert hall_column_coeff((1,), 1, (2,)) == 1


def test_brute_force_hall():
    assert brute_force_hall((1,), (1,), (1, 1), 2) == 3
    assert brute_force_hall((1,), (1,), (2,), 3) == 1
    assert brute_force_hall((2,), (1,), (2, 1), 2) == 2
    assert brute_force_hall((2,), (1,), (2, 1), 2) == ratfun.evaluar(hall_polynomial((2,), (1,), (2, 1)), 2)


def test_oraculo_limites():
    with pytest.raises(ErrorLimite):
        brute_force_hall((), (), (), 5)
    with pytest.raises(ErrorLimite):
        brute_force_hall((3,), (2,), (5,), 2)


def test_subespacios_y_tipos():
    # número de rectas de F_3^2
    assert len(list(subespacios_rref(2, 1, 3))) == 4
    assert tipo_nilpotente(_dm(nilpotente((2, 1)), 2)) == (2, 1)
    assert sum(conteos_submodulos((1, 1), 2).values()) == 5


def test_hom_y_ext():
    assert brute_force_hom((1,), (1,), 2) == 2
    assert brute_force_hom((1, 1), (1, 1), 2) == 16
    assert brute_force_hom((2,), (1, 1), 3) == 9
    for mu, nu in [((1,), (1,)), ((1, 1), (1, 1)), ((2,), (1, 1)), ((2,), (1,)), ((1,), (2, 1))]:
        assert ratfun.evaluar(hom_order(mu, nu), 2) == brute_force_hom(mu, nu, 2)
    assert brute_force_ext((1,), (1,), (1, 1), 2) == Rational(1, 2)
    assert brute_force_ext((1,), (1,), (2,), 2) == Rational(1, 2)


def test_riedtmann_peng():
    assert constante_clasica((1,), (1,), (1, 1)) == 1 / q
    assert riedtmann_peng((1,), (1,), (1, 1), 3)
    assert riedtmann_peng((1,), (1, 1), (2, 1), 2)


def test_oraculo_coincide():
    assert comprobar_oraculo((1,), (1, 1), (2, 1), 3)
    assert comprobar_oraculo((1, 1), (1,), (1, 1, 1), 2)


def test_classical_multiply():
    producto = classical_multiply(u(((1,), ()), "q"), u(((1,), ()), "q"))
    assert producto.coeficiente(((1, 1), ())) == 1 / q
    assert producto.coeficiente(((2,), ())) == (q - 1) / q
    with pytest.raises(ErrorEntrada):
        classical_multiply(u(((1,), ()), "t"), u(((1,), ()), "t"))


def test_tabla_dataframe():
    tabla = TablaHall().construir(2)
    df = tabla.a_dataframe()
    assert list(df.columns) == ["mu", "nu", "lambda", "F"]
    fila = df[(df["mu"] == "1") & (df["nu"] == "1") & (df["lambda"] == "1,1")]
    assert fila["F"].iloc[0] == "q + 1"


def test_tabla_volcado(tmp_path):
    tabla = TablaHall().construir(2)
    ruta_json = tmp_path / "tabla.json"
    tabla.volcar(ruta_json)
    registros = json.loads(ruta_json.read_text(encoding="utf-8"))
    assert {"mu": "1", "nu": "1", "lambda": "2", "F": "1"} in registros
    ruta_csv = tmp_path / "tabla.csv"
    tabla.volcar(ruta_csv)
    assert len(pd.read_csv(ruta_csv)) == len(registros)
    with pytest.raises(ErrorEntrada):
        tabla.volcar(tmp_path / "tabla.txt")


def test_tabla_persistencia(tmp_path):
    tabla = TablaHall().construir(3)
    ruta = tmp_path / "tabla.joblib"
    tabla.guardar(ruta)
    cargada = TablaHall.cargar(ruta)
    assert cargada.entradas == tabla.entradas
    assert cargada.filas_calculadas == tabla.filas_calculadas


@pytest.mark.parametrize("suite, tamano", [
    ("hall-symmetry", 4),
    ("hall-oracle", 3),
    ("hall-pieri", 4),
    ("riedtmann-peng", 2),
    ("hall-support", 4),
])
def test_suites(suite, tamano):
    informe = ejecutar_suite(suite, tamano)
    assert informe["failures"] == 0, informe["first_failure"]


@pytest.mark.lento
@pytest.mark.parametrize("suite", ["hall-symmetry", "hall-oracle", "hall-pieri", "riedtmann-peng"])
def test_suites_completas(suite):
    assert ejecutar_suite(suite)["failures"] == 0
