import json

import pytest

from dhl import formato, ratfun
from dhl.combinat import Biparticion, VACIA
from dhl.dhall import u
from dhl.dlambda import vmon
from dhl.elementos import DHL, ElementoAlgebra
from dhl.errores import ErrorEntrada

t = ratfun.generador("t")


def V(mas, menos, coef=1):
    return ElementoAlgebra.monomio(DHL, "t", Biparticion(mas, menos), coef)


def test_ratfun_json():
    assert formato.ratfun_json(1 - t) == {"var": "t", "num": {"0": "1", "1": "-1"}, "den": {"0": "1"}}
    assert formato.ratfun_json(1 / (2 - 2 * t)) == {"var": "t", "num": {"0": "-1/2"}, "den": {"0": "-1", "1": "1"}}


def test_elemento_json():
    datos = formato.elemento_json(V((1,), (1,)))
    assert datos == {
        "basis": "DHL",
        "terms": [{"plus": [1], "minus": [1], "coeff": {"var": "t", "num": {"0": "1"}, "den": {"0": "1"}}}],
    }


def test_elemento_json_orden_canonico():
    x = V((1,), (1,)) + V((), (), 1 - t) + V((2,), ())
    terminos = formato.elemento_json(x)["terms"]
    assert [(d["plus"], d["minus"]) for d in terminos] == [([], []), ([1], [1]), ([2], [])]


def test_texto_plano():
    x = V((1,), (1,)) + V((), (), 1 - t)
    assert formato.elemento_texto(x) == "(1 - t)*V[-|-] + V[1|1]"
    assert formato.elemento_texto(ElementoAlgebra.cero(DHL, "t")) == "0"


def test_latex():
    assert formato.elemento_latex(V((1,), ())) == r"V_{(1),\varnothing}"
    assert formato.elemento_latex(V((1,), (), -1)) == r"-V_{(1),\varnothing}"
    assert formato.elemento_latex(u(((2,), (1,)))) == r"[S^{(2)} \oplus S^{(1)}[1]]"
    assert formato.elemento_latex(vmon(VACIA, 3)) == "3"
    assert formato.elemento_latex(vmon(((2,), (1,)))) == r"v^{+}_{2} v^{-}_{1}"


def test_despacho():
    x = V((), (1,))
    assert json.loads(formato.elemento(x, "json"))["basis"] == "DHL"
    assert formato.elemento(x, "plain") == "V[-|1]"
    assert formato.funcion(1 - t, "plain") == "1 - t"
    with pytest.raises(ErrorEntrada):
        formato.elemento(x, "yaml")
    with pytest.raises(ErrorEntrada):
        formato.funcion(t, "yaml")


def test_informe():
    assert formato.informe({"suite": "mirror", "first_failure": None}, "plain") == "suite: mirror\nfirst_failure: -"
    assert json.loads(formato.informe({"cases": 3}, "json")) == {"cases": 3}
