"""Resolution of monic polynomials: oracle checks and invariants."""

import random
from fractions import Fraction

import pytest

from maclane import (
    INFINITY,
    OrderBase,
    PAdicBase,
    Poly,
    PrimeField,
    QQ,
    extension_invariants,
    first_approximants,
    resolve,
    resultant,
    uniqueness_certificate,
)
from conftest import rand_poly


def _resultant_scenarios():
    x = Poly.gen(QQ, "x")
    F3t = OrderBase(PrimeField(3), "t")
    y3 = Poly.gen(F3t.field, "x")
    t3 = Poly.constant(F3t.field, F3t.field.gen(), "x")
    F5t = OrderBase(PrimeField(5), "t")
    y5 = Poly.gen(F5t.field, "x")
    t5 = F5t.field.gen()
    cubic = y5**3 - Poly.constant(F5t.field, t5 * t5 * (1 + t5), "x")
    # The constant term has value 2, coprime to 3: the Newton polygon is a
    # single segment of slope 2/3, so the cubic is irreducible (totally
    # ramified of degree 3).  Fall back to x^3 - t if that ever changes.
    if F5t.valuation(cubic[0]).q.denominator != 1 or (
        3 % F5t.valuation(cubic[0]).q.numerator == 0
    ):
        cubic = y5**3 - Poly.constant(F5t.field, t5, "x")
    return [
        (PAdicBase(2), x * x + 1),
        (PAdicBase(2), x**3 - 2),
        (PAdicBase(2), x * x + x + 1),
        (F3t, y3 * y3 - t3),
        (F5t, cubic),
    ]


def run_resultant_oracle(field, f, samples=200):
    """Check deg(f) * w(g) = v0(Res(f, g)) on random g; returns the count.

    The resultant of monic f with g is the product of the conjugates of g
    at the roots of f, and for a unique extension all conjugates share a
    value, so the identity pins down w(g) through base-field data alone.
    """
    res = resolve(field, f)
    assert res.unique
    w = res[0].tower
    rng = random.Random(hash((repr(field), f.degree)) & 0xFFFF)
    checked = 0
    while checked < samples:
        g = rand_poly(field.field, rng, f.degree - 1)
        if not g:
            continue
        lhs = w.valuation(g) * f.degree
        rhs = field.valuation(resultant(f, g))
        assert lhs == rhs
        checked += 1
    return checked


@pytest.mark.parametrize(
    "field,f", _resultant_scenarios(), ids=lambda a: repr(a)
)
def test_value_against_resultant_oracle(field, f):
    assert run_resultant_oracle(field, f, 200) == 200


def test_ostrowski_invariants():
    # e, f and defect for three classical quadratic/cubic extensions.
    F2 = PAdicBase(2)
    x = Poly.gen(QQ, "x")
    cases = [
        (x * x + 1, (2, 1, 1)),      # ramified quadratic
        (x**3 - 2, (3, 1, 1)),       # totally ramified cubic
        (x * x + x + 1, (1, 2, 1)),  # unramified quadratic
    ]
    for f, expected in cases:
        res = resolve(F2, f)
        assert res.unique
        chain = res[0]
        inv = extension_invariants(chain)
        assert (inv.e, inv.f, inv.delta) == expected
        n = f.degree
        assert inv.e * inv.f * inv.delta == n


def test_two_branches_over_q5():
    # x^2 + 1 splits over Q_5; the two approximant chains never terminate
    # and uniqueness fails.
    F5 = PAdicBase(5)
    x = Poly.gen(QQ, "x")
    res = resolve(F5, x * x + 1, stage_bound=8)
    assert len(res) == 2
    assert not res.unique
    for chain in res:
        assert chain.truncated and not chain.terminal
        values = [r.vf for r in chain.records]
        assert all(a < b for a, b in zip(values, values[1:]))


def test_reducible_input_detected():
    from maclane import ReducibleInput

    F2 = PAdicBase(2)
    x = Poly.gen(QQ, "x")
    with pytest.raises(ReducibleInput):
        resolve(F2, x * (x * x + 1))


def test_certificate_structure():
    F2 = PAdicBase(2)
    x = Poly.gen(QQ, "x")
    chain = resolve(F2, x * x + 1)[0]
    cert = uniqueness_certificate(chain)
    assert cert.terminal and cert.verdict
    assert all(cert.records)
    # Certified chains have f equivalent to a full power of each key, so
    # the effective degree at every stage times the key degree is deg f.
    f = chain.f
    for stage in chain.tower.stages():
        if stage.keyval.is_infinite:
            continue
        assert stage.effective_degree(f) * stage.keypol.degree == f.degree


@pytest.mark.parametrize(
    "field,f", _resultant_scenarios(), ids=lambda a: repr(a)
)
def test_terminal_tower_dominates_stages(field, f):
    # Approximants only grow: the terminal valuation is at least each
    # intermediate stage on every polynomial.
    res = resolve(field, f)
    w = res[0].tower
    stages = [s for s in w.stages() if not s.keyval.is_infinite]
    rng = random.Random(f.degree * 977 + 5)
    for _ in range(100):
        g = rand_poly(field.field, rng, f.degree + 1)
        if not g:
            continue
        wg = w.valuation(g)
        for s in stages:
            assert wg >= s.valuation(g)


def test_monotone_values_of_f_along_chains():
    # Along every chain of every scenario the value of f strictly climbs
    # to infinity on terminal branches.
    for field, f in _resultant_scenarios():
        res = resolve(field, f)
        for chain in res:
            values = [r.vf for r in chain.records]
            assert all(a < b for a, b in zip(values, values[1:]))
            if chain.terminal:
                assert values[-1] == INFINITY


def test_first_approximants_reject_bad_f():
    from maclane import InvalidInput

    F2 = PAdicBase(2)
    x = Poly.gen(QQ, "x")
    with pytest.raises(InvalidInput):
        first_approximants(F2, 2 * x + 1)
    with pytest.raises(InvalidInput):
        first_approximants(F2, x + Fraction(1, 2))
