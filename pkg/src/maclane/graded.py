"""Graded presentation of gr_v(A[x]/(f)) and the value-semigroup module.

The generators are the initial forms of the key polynomials of a
generating sequence; each relation is the minimal-value part of the
expansion of the next key in the previous one, rewritten through nested
expansion so that its coefficients lie in A.  The value semigroup of the
quotient is handled as a module over the semigroup of values of A.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, NamedTuple, Tuple

from .errors import (
    CoverageGapFound,
    RelationNotHomogeneous,
    RelationValueTooSmall,
    UnsupportedRing,
)
from .poly import Poly, phi_digits
from .value import INFINITY, Value, finite


class InitialForm(NamedTuple):
    """An element of the graded ring, stored as a lift and its degree."""

    lift: object
    degree: Value


class RelationTerm(NamedTuple):
    coeff: object          # lift in A
    monomial: Tuple[int, ...]   # exponents of phi_1 .. phi_i
    value: Value


class Relation(NamedTuple):
    index: int             # i: the relation comes from expanding phi_{i+1}
    lead_power: int        # m_i, exponent of phi_i in the lead term
    terms: Tuple[RelationTerm, ...]
    degree: Value          # m_i * v(phi_i)


class GradedPresentation(NamedTuple):
    generators: Tuple[Tuple[str, Value], ...]
    relations: Tuple[Relation, ...]
    keys: tuple
    values: tuple
    f: Poly


class ValueSemigroup:
    """Numerical semigroup generated by finitely many positive rationals."""

    def __init__(self, generators):
        gens = sorted(set(Fraction(g) for g in generators if Fraction(g) > 0))
        self.generators = tuple(gens)
        denom = 1
        for g in gens:
            denom = denom * g.denominator // _gcd(denom, g.denominator)
        self.denominator = denom

    def contains(self, value) -> bool:
        if isinstance(value, Value):
            if value.is_infinite:
                return True
            value = value.q
        value = Fraction(value)
        if value == 0:
            return True
        if value < 0:
            return False
        target = value * self.denominator
        if target.denominator != 1:
            return False
        target = int(target)
        steps = [int(g * self.denominator) for g in self.generators]
        reachable = [False] * (target + 1)
        reachable[0] = True
        for s in steps:
            for n in range(s, target + 1):
                if reachable[n - s]:
                    reachable[n] = True
        return reachable[target]

    def min_positive(self):
        return self.generators[0] if self.generators else None

    def __repr__(self):
        return "ValueSemigroup%r" % (tuple(str(g) for g in self.generators),)


class SemigroupModule(NamedTuple):
    base: ValueSemigroup
    module_generators: Tuple[Fraction, ...]
    bound: Fraction

    def contains(self, value) -> bool:
        if isinstance(value, Value):
            if value.is_infinite:
                return True
            value = value.q
        value = Fraction(value)
        return any(self.base.contains(value - z) for z in self.module_generators)


def semigroup_of_ring(A, field) -> ValueSemigroup:
    """The semigroup of values of nonzero elements of A under v0.

    Generated by the values of the monomial generators of the maximal
    ideal of A (together with the value 0 of units).
    """
    return ValueSemigroup([v.q for v in _ideal_generator_values(A, field)])


def _ideal_generator_values(A, field) -> List[Value]:
    from .descent import IntegersLocalizedAt, PolyLocalized

    if isinstance(A, IntegersLocalizedAt):
        return [field.valuation(Fraction(A.p))]
    if isinstance(A, PolyLocalized):
        out = []
        if len(A.variables) == 1:
            out.append(field.valuation(field.field.gen()))
        else:
            inner = field.field.base.gen()
            out.append(field.valuation(field.field.coerce(inner)))
            out.append(field.valuation(field.field.gen()))
        return out
    raise UnsupportedRing("no semigroup data for %r" % (A,))


def presentation(A, gen_seq, f: Poly) -> GradedPresentation:
    """The graded presentation of gr_v(A[x]/(f)) over gr_v0(A).

    One relation per key: the minimal-value part of the expansion of
    phi_{i+1} in phi_i, with the coefficients rewritten by nested
    expansion in phi_1, ..., phi_{i-1} down to constants of A.
    """
    keys = list(gen_seq.keys)
    values = list(gen_seq.values)
    base = gen_seq.tower.base
    chain_polys = keys + [f]
    generators = tuple(
        ("phi%d" % (i + 1), finite(values[i].q)) for i in range(len(keys))
    )
    relations = []
    for i in range(len(keys)):
        phi_i = keys[i]
        mu_i = values[i]
        nxt = chain_polys[i + 1]
        m_i = nxt.degree // phi_i.degree
        degree = mu_i * m_i
        digits = phi_digits(nxt, phi_i)
        terms = []
        for k, h in enumerate(digits):
            if not h:
                continue
            for c, exps in _nested_terms(h, keys[:i]):
                tval = base.valuation(c) + sum(
                    (values[l] * e for l, e in enumerate(exps) if e),
                    finite(0),
                )
                tval = tval + mu_i * k
                if tval == degree:
                    terms.append(RelationTerm(c, exps + (k,), tval))
        relations.append(Relation(i + 1, m_i, tuple(terms), degree))
    return GradedPresentation(generators, tuple(relations), tuple(keys),
                              tuple(values), f)


def _nested_terms(h: Poly, lower_keys):
    """Terms (constant, exponent tuple over lower_keys) expanding h."""
    if not lower_keys:
        assert h.is_constant(), "expansion should have reached a constant"
        return [(h[0], ())]
    out = []
    for j, d in enumerate(phi_digits(h, lower_keys[-1])):
        if not d:
            continue
        for c, exps in _nested_terms(d, lower_keys[:-1]):
            out.append((c, exps + (j,)))
    return out


def relation_lift(P: GradedPresentation, rel: Relation) -> Poly:
    """The polynomial in K[x] whose initial form the relation kills."""
    f = P.f
    lift = Poly.zero(f.field, f.var)
    for c, exps, _v in rel.terms:
        term = Poly.constant(f.field, c, f.var)
        for l, e in enumerate(exps):
            if e:
                term = term * P.keys[l] ** e
        lift = lift + term
    return lift


def relation_check(P: GradedPresentation, w) -> List[Tuple[int, Value]]:
    """Verify homogeneity and the value excess of every relation.

    w is the terminal pseudo-valuation of the chain; the lift of each
    relation, reduced mod f, must have value strictly above the relation
    degree.  Returns (relation index, observed value) pairs.
    """
    report = []
    for rel in P.relations:
        for t in rel.terms:
            if t.value != rel.degree:
                raise RelationNotHomogeneous(
                    "term %r of relation %d has value %s, expected %s"
                    % (t.monomial, rel.index, t.value, rel.degree)
                )
        lead = [
            t for t in rel.terms
            if t.monomial[-1] == rel.lead_power
            and all(e == 0 for e in t.monomial[:-1])
        ]
        if not lead:
            raise RelationNotHomogeneous(
                "relation %d is missing its lead term" % rel.index
            )
        lift = relation_lift(P, rel) % P.f
        val = w.valuation(lift) if lift else INFINITY
        if not val > rel.degree:
            raise RelationValueTooSmall(
                "relation %d lifts to value %s, not above %s"
                % (rel.index, val, rel.degree)
            )
        report.append((rel.index, val))
    return report


def semigroup_module(A, gen_seq, bound, field=None, rng=None, samples=500):
    """Module generators for the value semigroup of A[x]/(f).

    Candidate generators are the bounded sums of key values; the check
    walks monomial images and random elements of A[x] and reports any
    observed value up to the bound that the module misses.
    """
    from .descent import random_ring_element

    w = gen_seq.tower
    base_field = field if field is not None else w.base
    S = semigroup_of_ring(A, base_field)
    mvals = [Fraction(0)]
    bounds = []
    chain_deg = [k.degree for k in gen_seq.keys] + [gen_seq.tower.keypol.degree]
    for i, k in enumerate(gen_seq.keys):
        nxt_deg = chain_deg[i + 1] if i + 1 < len(chain_deg) else k.degree
        bounds.append(max(1, nxt_deg // k.degree))
    gens = set()
    for combo in _bounded_exponents(bounds):
        z = sum(
            (gen_seq.values[i].q * e for i, e in enumerate(combo)),
            Fraction(0),
        )
        gens.add(z)
    module = SemigroupModule(S, tuple(sorted(gens)), Fraction(bound))

    f = None
    for pol, val in w.key_polval_list():
        if val.is_infinite:
            f = pol
    observed = []
    # Monomial images of the keys times ring generators.
    for combo in _bounded_exponents([b + 1 for b in bounds]):
        g = Poly.one(f.field, f.var)
        for i, e in enumerate(combo):
            if e:
                g = g * gen_seq.keys[i] ** e
        observed.append(w.valuation(g % f))
    if rng is not None:
        for _ in range(samples):
            g = random_ring_element(A, f, rng)
            if g:
                observed.append(w.valuation(g % f))
    for val in observed:
        if val.is_infinite or val.q > module.bound or val.q < 0:
            continue
        if not module.contains(val):
            raise CoverageGapFound(val)
    return module


def _bounded_exponents(bounds):
    if not bounds:
        yield ()
        return
    for e in range(bounds[0]):
        for rest in _bounded_exponents(bounds[1:]):
            yield (e,) + rest


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
