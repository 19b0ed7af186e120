"""Graded presentations, relation checks and value-semigroup modules."""

import random
from fractions import Fraction

import pytest

from maclane import (
    CoverageGapFound,
    INFINITY,
    IntegersLocalizedAt,
    OrderBase,
    PAdicBase,
    Poly,
    PolyLocalized,
    QQ,
    ValueSemigroup,
    generating_sequence,
    presentation,
    relation_check,
    relation_lift,
    resolve,
    semigroup_module,
    semigroup_of_ring,
    sequence_from_chain,
)
from conftest import st_field


def test_value_semigroup_basics():
    S = ValueSemigroup([Fraction(3, 2), Fraction(2)])
    assert S.contains(0)
    assert S.contains(Fraction(3, 2))
    assert S.contains(Fraction(7, 2))
    assert S.contains(3)
    assert not S.contains(Fraction(1, 2))
    assert not S.contains(-1)
    assert S.min_positive() == Fraction(3, 2)


def test_presentation_x2_plus_1():
    # The full graded data of Z_(2)[x]/(x^2+1): two generators of degrees
    # 0 and 1/2, one relation per key.
    A = IntegersLocalizedAt(2)
    F2 = PAdicBase(2)
    x = Poly.gen(QQ, "x")
    f = x * x + 1
    chain = resolve(F2, f)[0]
    seq = sequence_from_chain(A, chain)
    P = presentation(A, seq, f)
    assert P.generators == (
        ("phi1", Fraction(0)),
        ("phi2", Fraction(1, 2)),
    )
    assert len(P.relations) == 2
    r1, r2 = P.relations
    # phi_2 = x + 1 expands in phi_1 = x as 1 * phi_1 + 1.
    assert r1.lead_power == 1
    assert r1.degree == 0
    assert sorted((t.coeff, t.monomial) for t in r1.terms) == [
        (Fraction(1), (0,)),
        (Fraction(1), (1,)),
    ]
    # f = phi_2^2 - 2 phi_2 + 2; the cross term has value 3/2 and drops
    # out of the minimal-value part.
    assert r2.lead_power == 2
    assert r2.degree == 1
    assert sorted((t.coeff, t.monomial) for t in r2.terms) == [
        (Fraction(1), (0, 2)),
        (Fraction(2), (0, 0)),
    ]
    report = relation_check(P, seq.tower)
    assert [i for i, _ in report] == [1, 2]
    for i, val in report:
        assert val > P.relations[i - 1].degree
    # The lift of each relation reduces mod f to something of high value.
    lift2 = relation_lift(P, r2) % f
    assert seq.tower.valuation(lift2) == Fraction(3, 2)


def test_presentation_st_field():
    # x^2 + s over the running-example field: a single generator of
    # degree 1/2 with the relation phi1^2 + s = 0 in the graded ring.
    K = st_field(deep=True)
    A = PolyLocalized(QQ, ("s", "t"))
    x = Poly.gen(K.field, "x")
    s = K.field.coerce(K.field.base.gen())
    f = x * x + Poly.constant(K.field, s, "x")
    seq = generating_sequence(A, K, f)
    assert len(seq.keys) == 1
    assert seq.values == (Fraction(1, 2),)
    P = presentation(A, seq, f)
    assert P.generators == (("phi1", Fraction(1, 2)),)
    (rel,) = P.relations
    assert rel.lead_power == 2
    assert rel.degree == 1
    assert {t.monomial: t.coeff for t in rel.terms} == {
        (0,): s,
        (2,): K.field.coerce(1),
    }
    assert relation_check(P, seq.tower) == [(1, INFINITY)]


def test_semigroup_module_scenarios():
    rng = random.Random(7)
    bound = Fraction(20)
    F2 = PAdicBase(2)
    x = Poly.gen(QQ, "x")
    A2 = IntegersLocalizedAt(2)
    # x^2 + 1 via the chain wrapper.
    seq = sequence_from_chain(A2, resolve(F2, x * x + 1)[0])
    mod = semigroup_module(A2, seq, bound, rng=rng, samples=150)
    assert mod.module_generators == (Fraction(0), Fraction(1, 2))
    assert mod.contains(Fraction(5, 2)) and not mod.contains(Fraction(1, 4))
    # x^3 - 2 through the full descent.
    seq = generating_sequence(A2, F2, x**3 - 2)
    mod = semigroup_module(A2, seq, bound, rng=rng, samples=150)
    assert Fraction(1, 3) in mod.module_generators
    # The running example over its local ring.
    K = st_field(deep=True)
    A = PolyLocalized(QQ, ("s", "t"))
    y = Poly.gen(K.field, "x")
    s = K.field.coerce(K.field.base.gen())
    f = y * y + Poly.constant(K.field, s, "x")
    seq = generating_sequence(A, K, f)
    mod = semigroup_module(A, seq, bound, rng=rng, samples=60)
    assert mod.base.generators == (Fraction(1), Fraction(3, 2))
    assert mod.module_generators == (Fraction(0), Fraction(1, 2))
    assert mod.contains(Fraction(1, 2)) and mod.contains(2)
    assert not mod.contains(Fraction(1, 4))


def test_semigroup_module_detects_gap():
    # Feeding the wrong ring (whose semigroup misses the needed values)
    # must surface a coverage gap rather than pass silently.
    F2 = PAdicBase(2)
    x = Poly.gen(QQ, "x")
    seq = sequence_from_chain(IntegersLocalizedAt(2), resolve(F2, x * x + 1)[0])
    from maclane import finite

    broken = seq._replace(values=(finite(0), finite(0)))
    with pytest.raises(CoverageGapFound):
        semigroup_module(IntegersLocalizedAt(2), broken, Fraction(20))


def test_ramification_from_value_denominators():
    # The ramification index of a certified chain is the lcm of the
    # denominators of the key values, measured against the base group.
    F2 = PAdicBase(2)
    x = Poly.gen(QQ, "x")
    for f, expected_e in [(x * x + 1, 2), (x**3 - 2, 3), (x * x + x + 1, 1)]:
        chain = resolve(F2, f)[0]
        w = chain.tower
        assert w.ramification_index() == expected_e
        lcm = 1
        for _g, mu in w.key_polval_list():
            if mu.is_infinite:
                continue
            d = mu.q.denominator
            lcm = lcm * d // __import__("math").gcd(lcm, d)
        assert lcm == expected_e


def test_semigroup_of_ring_order_base():
    A = PolyLocalized(QQ, ("t",))
    S = semigroup_of_ring(A, OrderBase(QQ, "t"))
    assert S.generators == (Fraction(1),)
    assert S.contains(5) and not S.contains(Fraction(1, 2))
