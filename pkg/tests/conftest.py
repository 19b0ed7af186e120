"""Shared scenario builders and random samplers for the test suite."""

import random
from fractions import Fraction

import pytest

from maclane import (
    ExtensionField,
    InductiveValuation,
    OrderBase,
    PAdicBase,
    Poly,
    PrimeField,
    QQ,
)


def rand_coeff(field, rng, size=4):
    """Random field element, kept cheap over nested function fields."""
    from maclane import FunctionField

    if isinstance(field, FunctionField) and isinstance(field.base, FunctionField):
        inner = field.base
        coeffs = [
            inner.coerce(
                Poly(
                    inner.base,
                    [inner.base.random_element(rng, 3)
                     for _ in range(rng.randint(1, 2))],
                    inner.var,
                )
            )
            for _ in range(rng.randint(1, 2))
        ]
        elt = field.coerce(Poly(inner, coeffs, field.var))
        if elt and rng.random() < 0.5:
            elt = elt / field.coerce(inner.gen()) ** rng.randint(1, 2)
        return elt
    return field.random_element(rng, size)


def rand_poly(field, rng, max_deg=4, var="x", nonzero=True, monic=False):
    """Random polynomial with small coefficients over an abstract field."""
    deg = rng.randint(0, max_deg)
    coeffs = [rand_coeff(field, rng, 4) for _ in range(deg + 1)]
    if monic:
        coeffs[-1] = field.one
    g = Poly(field, coeffs, var)
    if nonzero and not g:
        return rand_poly(field, rng, max_deg, var, nonzero, monic)
    return g


def st_field(constants=QQ, deep=False):
    """k(s)(t) with v(s) = 1, v(t) = 3/2 and residue [t^2/s^3] = 1.

    The valuation of the running example is pinned down only by the values
    of s and t and one residue; this realization adds the optional stage
    t^2 - s^3 of value 7/2 to fix the residue datum explicitly.  Checks
    must depend only on the constrained data.
    """
    base = OrderBase(constants, "s")
    t = Poly.gen(base.field, "t")
    s = base.field.gen()
    stages = [(t, Fraction(3, 2))]
    if deep:
        stages.append((t**2 - s**3, Fraction(7, 2)))
    return ExtensionField(base, "t", stages)


def gauss(field, mu=0):
    x = Poly.gen(field.field, "x")
    return InductiveValuation.stage_zero(field, x, mu)


def q2_two_stage():
    """[x: 0, x+1: 1/2] over the 2-adics (the x^2+1 approximant)."""
    v = gauss(PAdicBase(2))
    x = Poly.gen(QQ, "x")
    return v.augment(x + 1, Fraction(1, 2))


def q3_two_stage():
    """[x: 1/2, x^2-3: 5/4] over the 3-adics."""
    v = gauss(PAdicBase(3), Fraction(1, 2))
    x = Poly.gen(QQ, "x")
    return v.augment(x * x - 3, Fraction(5, 4))


def f5t_two_stage():
    """[x: 1/2, x^2-t: 9/4] over F_5(t)."""
    F = OrderBase(PrimeField(5), "t")
    x = Poly.gen(F.field, "x")
    t = F.field.gen()
    v = InductiveValuation.stage_zero(F, x, Fraction(1, 2))
    return v.augment(x * x - Poly.constant(F.field, t, "x"), Fraction(9, 4))


def tower_zoo():
    """Named inductive valuations of assorted shapes for invariant sweeps."""
    out = [
        ("q2-gauss", gauss(PAdicBase(2))),
        ("q2-third", gauss(PAdicBase(2), Fraction(1, 3))),
        ("q2-two-stage", q2_two_stage()),
        ("q3-two-stage", q3_two_stage()),
        ("f5t-two-stage", f5t_two_stage()),
        ("st-half", gauss(st_field(), Fraction(1, 2))),
    ]
    return out


@pytest.fixture(scope="session")
def towers():
    return tower_zoo()


@pytest.fixture
def rng():
    return random.Random(20260825)


def digit_value(v, c):
    """Value of a phi-expansion digit at the previous stage."""
    prev = v.prev()
    if prev is not None:
        return prev.valuation(c)
    return v.base.valuation(c[0]) if c.is_constant() else v.base.valuation(c[0])
