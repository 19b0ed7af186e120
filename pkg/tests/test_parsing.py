"""The polynomial grammar and the scenario config loader."""

import os
from fractions import Fraction

import pytest

from maclane import (
    ExtensionField,
    INFINITY,
    IntegersLocalizedAt,
    InvalidInput,
    OrderBase,
    PAdicBase,
    ParseError,
    Poly,
    QQ,
    load_scenario,
    parse_poly,
    parse_value,
    scenario_from_dict,
)

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture(name):
    return os.path.join(FIXTURES, name)


def test_parse_poly_basic():
    x = Poly.gen(QQ, "x")
    assert parse_poly("x^2 + 1", QQ) == x * x + 1
    assert parse_poly("(x + 1)^2 - 2", QQ) == x * x + 2 * x - 1
    assert parse_poly("1/2 * x - 3", QQ) == Fraction(1, 2) * x - 3
    assert parse_poly("-x^3", QQ) == -(x ** 3)
    assert parse_poly("  x *x+ x ", QQ) == x * x + x
    assert parse_poly("7", QQ) == Poly.constant(QQ, Fraction(7), "x")


def test_parse_poly_tower_variables():
    base = OrderBase(QQ, "s")
    F = ExtensionField(base, "t", [(Poly.gen(base.field, "t"), Fraction(3, 2))])
    g = parse_poly("x^2 + s^3 * t", F.field)
    assert g.degree == 2
    s = F.field.coerce(base.field.gen())
    t = F.field.gen()
    assert g[0] == s ** 3 * t


def test_parse_poly_errors():
    with pytest.raises(ParseError):
        parse_poly("x + y", QQ)
    with pytest.raises(ParseError):
        parse_poly("x $ 2", QQ)
    with pytest.raises(ParseError):
        parse_poly("x + ", QQ)
    with pytest.raises(ParseError):
        parse_poly("x 2", QQ)
    with pytest.raises(ParseError):
        parse_poly("1/0", QQ)
    with pytest.raises(ParseError):
        parse_poly("x^(2)", QQ)


def test_parse_value():
    assert parse_value("3/2") == Fraction(3, 2)
    assert parse_value("-1") == Fraction(-1)
    assert parse_value("inf") == INFINITY
    assert parse_value("Infinity") == INFINITY
    assert parse_value(INFINITY) == INFINITY
    with pytest.raises(ParseError):
        parse_value("one half")


def test_scenario_padic():
    sc = load_scenario(fixture("q2_x2p1.json"))
    assert sc.field == PAdicBase(2)
    assert isinstance(sc.ring, IntegersLocalizedAt) and sc.ring.p == 2
    x = Poly.gen(QQ, "x")
    assert sc.f == x * x + 1
    assert sc.var == "x"


def test_scenario_extension_tower():
    sc = load_scenario(fixture("st_x2ps.json"))
    K = sc.field
    assert isinstance(K, ExtensionField)
    s = K.field.coerce(K.field.base.gen())
    t = K.field.gen()
    assert K.valuation(s) == 1
    assert K.valuation(t) == Fraction(3, 2)
    assert K.valuation(t * t / s ** 3) == 0
    assert sc.f.degree == 2


def test_scenario_errors():
    with pytest.raises(InvalidInput):
        load_scenario(fixture("nonmonic.json"))
    with pytest.raises(ParseError):
        scenario_from_dict({"base": {"kind": "padic", "p": 2}})
    with pytest.raises(ParseError):
        scenario_from_dict({"base": {"kind": "weird"}, "f": "x"})
    with pytest.raises(ParseError):
        scenario_from_dict({"f": "x"})
    with pytest.raises(ParseError):
        scenario_from_dict(
            {"base": {"kind": "order", "constants": "E8", "variable": "s"},
             "f": "x"}
        )
