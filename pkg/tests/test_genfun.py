import pytest

from dhl import ratfun
from dhl.combinat import Biparticion
from dhl.config import GRADO_TOPE
from dhl.elementos import HALL_U, ElementoAlgebra
from dhl.errores import ErrorEntrada, ErrorLimite, ErrorSerie
from dhl.genfun import (
    IDENTIDADES,
    SerieTruncada,
    build_series,
    exp_q_series,
    exp_q_yz,
    p_tilde,
    q_numero,
    t_mn_closed,
    verify_identity,
)
from dhl.verificacion import ejecutar_suite

v = ratfun.generador("v")


def test_grado_negativo():
    with pytest.raises(ErrorEntrada):
        SerieTruncada(-1)
    with pytest.raises(ErrorEntrada):
        build_series("Etilde", -1)


def test_inversa():
    serie = SerieTruncada.escalar(4, {(0, 0): 1, (1, 0): v, (0, 1): 2})
    assert serie * serie.inversa() == SerieTruncada.uno(4)
    with pytest.raises(ErrorSerie):
        SerieTruncada.escalar(4, {(1, 0): 1}).inversa()


def test_exp_log():
    x = SerieTruncada.escalar(4, {(1, 0): 1, (0, 1): v, (1, 1): 3})
    assert x.exp().log() == x
    with pytest.raises(ErrorSerie):
        SerieTruncada.uno(3).exp()
    with pytest.raises(ErrorSerie):
        SerieTruncada.escalar(3, {(0, 0): 2}).log()


def test_exp_q():
    q = v ** 2
    argumento = SerieTruncada.escalar(4, {(1, 1): 1 / (1 - q)})
    assert exp_q_series(argumento) == exp_q_yz(4)


def test_series_con_nombre():
    theta = build_series("Theta1", 3)
    assert theta.coeficiente(2, 0) == ElementoAlgebra.monomio(HALL_U, "v", Biparticion((2,), ()))
    assert not theta.coeficiente(0, 1)
    with pytest.raises(ErrorEntrada):
        build_series("Zeta", 3)


def test_p_tilde():
    assert p_tilde(1) == ElementoAlgebra.monomio(HALL_U, "v", Biparticion((1,), ()), 1 / (v ** 2 - 1))
    assert {b.mas for b in p_tilde(2).terminos} == {(2,), (1, 1)}
    assert all(not b.mas for b in p_tilde(2, "menos").terminos)
    with pytest.raises(ErrorEntrada):
        p_tilde(0)


def test_t_mn():
    assert q_numero(1) == 1
    assert t_mn_closed(1, 2) == ElementoAlgebra.cero(HALL_U, "v")
    with pytest.raises(ErrorEntrada):
        t_mn_closed(0, 0)


@pytest.mark.parametrize("identidad", IDENTIDADES)
def test_identidades_grado_bajo(identidad):
    informe = verify_identity(identidad, 3)
    assert informe["status"] == "pass", informe["first_mismatch"]
    assert informe["degree"] == 3


def test_identidad_desconocida():
    with pytest.raises(ErrorEntrada):
        verify_identity("zeta", 2)


def test_tope_de_grado():
    with pytest.raises(ErrorLimite):
        verify_identity("euler", GRADO_TOPE + 1)


def test_suite_genfun():
    informe = ejecutar_suite("genfun", 2)
    assert informe["failures"] == 0, informe["first_failure"]


@pytest.mark.lento
@pytest.mark.parametrize("identidad", IDENTIDADES)
def test_identidades_grado_seis(identidad):
    assert verify_identity(identidad, 6)["status"] == "pass"
