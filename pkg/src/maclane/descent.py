"""Descent of key polynomials into a local subring A.

Given a chain of MacLane keys with coefficients in the valuation ring of
v0, rebuild stage by stage an equivalent chain whose keys have all their
coefficients in a local domain A dominated by v0.  The construction
matches the digits of f (which lie in A) against the multinomial digits
of g^e, where g is the key being repaired and e is chosen so that f is
equivalent to g^e; solving for the digits of g from the top down yields
replacements u_j in A[x] with enough value excess.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from .errors import (
    HypothesisViolated,
    MembershipFailure,
    NotEquivalentPower,
    ResidueCharDividesDegree,
    UnsupportedRing,
)
from .inductive import InductiveValuation
from .poly import Poly, poly_gcd
from .ratfunc import FunctionField, RationalFunction
from .value import INFINITY, Value, finite


# ---------------------------------------------------------------------------
# local ring descriptors


class IntegersLocalizedAt:
    """A = Z_(p), the integers localized at a prime p, inside K = Q."""

    def __init__(self, p: int):
        self.p = p

    @property
    def residue_characteristic(self):
        return self.p

    def contains(self, a) -> bool:
        a = Fraction(a)
        return a.denominator % self.p != 0

    def __repr__(self):
        return "Z_(%d)" % self.p


class PolyLocalized:
    """A = k[vars]_(vars), a polynomial ring localized at the origin.

    Supports one variable (inside K = k(var)) and two nested variables
    (inside K = k(var1)(var2)); membership reduces the fraction and tests
    that the denominator does not vanish at the origin.
    """

    def __init__(self, constants, variables: Tuple[str, ...]):
        if len(variables) not in (1, 2):
            raise UnsupportedRing(
                "localized polynomial rings supported in one or two variables"
            )
        self.constants = constants
        self.variables = tuple(variables)

    @property
    def residue_characteristic(self):
        return self.constants.characteristic

    def contains(self, a) -> bool:
        if isinstance(a, (int, Fraction)):
            return True
        if not isinstance(a, RationalFunction):
            raise TypeError("cannot test membership of %r" % (a,))
        if not a:
            return True
        if len(self.variables) == 1:
            # num/den is already reduced with monic denominator.
            return bool(a.den.evaluate(a.den.field.zero))
        cn, _num = _split_content(a.num)
        cd, den = _split_content(a.den)
        scale = cn / cd
        if not scale.den.evaluate(scale.den.field.zero):
            return False
        c0 = den.evaluate(den.field.coerce(0))
        return bool(c0.num.evaluate(c0.num.field.zero))

    def __repr__(self):
        return "%r[%s] localized at (%s)" % (
            self.constants,
            ", ".join(self.variables),
            ", ".join(self.variables),
        )


def _split_content(P: Poly):
    """Write P over k(s) in t as c * Ptilde with Ptilde primitive in k[s][t].

    Returns (c, Ptilde) where c is a rational function of s alone.
    """
    field = P.field  # k(s)
    base = field.base
    den_lcm = Poly.one(base, field.var)
    for c in P.coeffs:
        if c:
            g = poly_gcd(den_lcm, c.den)
            den_lcm = (den_lcm * c.den) // g
    cleared = [c.num * (den_lcm // c.den) if c else None for c in P.coeffs]
    content = Poly.zero(base, field.var)
    for q in cleared:
        if q is not None:
            content = poly_gcd(content, q) if content else q.monic()
    prim = Poly(
        field,
        [
            RationalFunction(q // content) if q is not None else field.coerce(0)
            for q in cleared
        ],
        P.var,
    )
    return RationalFunction(content, den_lcm), prim


def membership(A, a) -> bool:
    """Whether the field element a lies in the local ring A."""
    return A.contains(a)


def poly_in_ring(A, g: Poly) -> bool:
    return all(membership(A, c) for c in g.coeffs if c)


def random_ring_element(A, f: Poly, rng) -> Poly:
    """A random polynomial of degree below deg f with coefficients in A."""
    coeffs = [random_in_ring(A, f.field, rng) for _ in range(f.degree)]
    return Poly(f.field, coeffs, f.var)


def random_in_ring(A, field, rng):
    """A random element of A viewed inside its quotient field."""
    if isinstance(A, IntegersLocalizedAt):
        while True:
            d = rng.randint(1, 40)
            if d % A.p:
                return Fraction(rng.randint(-40, 40), d)
    if isinstance(A, PolyLocalized):
        if len(A.variables) == 1:
            num = _random_poly(A.constants, field.var, rng)
            den = Poly.one(A.constants, field.var) + Poly.gen(
                A.constants, field.var
            ) * _random_poly(A.constants, field.var, rng)
            return RationalFunction(num, den)
        inner = field.base  # k(s)
        coeffs = [
            RationalFunction(_random_poly(A.constants, inner.var, rng))
            for _ in range(rng.randint(1, 3))
        ]
        return RationalFunction(Poly(inner, coeffs, field.var))
    raise UnsupportedRing("no sampler for %r" % (A,))


def _random_poly(constants, var, rng):
    return Poly(
        constants,
        [constants.random_element(rng, 6) for _ in range(rng.randint(1, 3))],
        var,
    )


# ---------------------------------------------------------------------------
# multinomial digits of g^e


class PowerDigits(NamedTuple):
    e: int
    r: int
    digits: tuple          # c_0 .. c_{re} as polynomials
    terms: dict            # i -> list of (multi-index l, multinomial, product)


def power_digits(v_k: InductiveValuation, g: Poly, e: int) -> PowerDigits:
    """Digits of g^e in the key of v_k, with multinomial provenance.

    Each c_i is the sum over multi-indices (l_0, ..., l_r) with sum e and
    weighted sum i of the multinomial coefficient times the product of
    digit powers a_0^{l_0} ... a_r^{l_r}.
    """
    a = _digit_list(v_k, g)
    r = len(a) - 1
    if not (a[r].is_constant() and a[r][0] == g.field.one):
        raise NotEquivalentPower("top digit of %r is not 1" % (g,))
    terms = {}
    zero = Poly.zero(g.field, g.var)
    digits = [zero] * (r * e + 1)
    for l in _compositions(e, r + 1):
        i = sum(j * lj for j, lj in enumerate(l))
        coeff = _multinomial(e, l)
        prod = Poly.constant(g.field, g.field.coerce(coeff), g.var)
        for j, lj in enumerate(l):
            if lj:
                prod = prod * a[j] ** lj
        terms.setdefault(i, []).append((l, coeff, prod))
        digits[i] = digits[i] + prod
    return PowerDigits(e, r, tuple(digits), terms)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _multinomial(e: int, l) -> int:
    out = math.factorial(e)
    for lj in l:
        out //= math.factorial(lj)
    return out


def _digit_list(v_k: InductiveValuation, g: Poly) -> List[Poly]:
    digits = v_k.expand(g)
    m = max(digits)
    zero = Poly.zero(g.field, g.var)
    return [digits.get(i, zero) for i in range(m + 1)]


def _homogeneous_digits(v_k: InductiveValuation, g: Poly) -> List[Poly]:
    """Digit list of g with the digits of non-minimal value zeroed out."""
    a = _digit_list(v_k, g)
    prev = v_k.prev()
    mu = v_k.keyval

    def term_value(i):
        c = a[i]
        if not c:
            return INFINITY
        vc = prev.valuation(c) if prev else v_k.base.valuation(c[0])
        return vc + mu * i

    vg = min(term_value(i) for i in range(len(a)))
    zero = Poly.zero(g.field, g.var)
    return [a[i] if term_value(i) == vg else zero for i in range(len(a))]


# ---------------------------------------------------------------------------
# descent of one key into the local ring


class DescentTrace(NamedTuple):
    r: int
    e: int
    a: tuple      # homogeneous digits of g
    b: tuple      # homogeneous digits of f
    c: tuple      # multinomial digits of g^e
    H: tuple      # correction terms H_0 .. H_{r-1} after substitution
    u: tuple      # descended digits, u_r = 1
    phi: Poly


def descend_key(v_k: InductiveValuation, g_next: Poly, f: Poly, A):
    """Replace the key g_next by an equivalent key with coefficients in A.

    Requires f in A[x] with f equivalent to g_next^e over v_k, where
    e = deg f / deg g_next, and the residue characteristic must not
    divide e.  Returns (phi, trace) with phi monic, homogeneous, in A[x],
    a key for v_k, and equivalent to g_next.
    """
    if g_next.degree == 0 or f.degree % g_next.degree:
        raise NotEquivalentPower(
            "degree of %r does not divide degree of %r" % (g_next, f)
        )
    e = f.degree // g_next.degree
    p = A.residue_characteristic
    if p and e % p == 0:
        raise ResidueCharDividesDegree(
            "residue characteristic %d divides e = %d" % (p, e)
        )
    if not v_k.equivalent_polynomials(f, g_next ** e):
        raise NotEquivalentPower(
            "f is not equivalent to the %d-th power of the key" % e
        )
    field = f.field
    inv_e = field.one / field.coerce(e)
    if not membership(A, inv_e):
        raise ResidueCharDividesDegree("1/%d does not lie in %r" % (e, A))

    phi = v_k.keypol
    mu = v_k.keyval
    a = _homogeneous_digits(v_k, g_next)
    r = len(a) - 1
    b_full = _digit_list(v_k, f)
    b_full += [Poly.zero(field, f.var)] * (r * e + 1 - len(b_full))
    b = _homogeneous_digits(v_k, f)
    b += [Poly.zero(field, f.var)] * (r * e + 1 - len(b))
    pw = power_digits(v_k, g_next, e)

    zero = Poly.zero(field, f.var)
    u: List[Optional[Poly]] = [None] * (r + 1)
    u[r] = Poly.one(field, f.var)
    Hs = [zero] * r
    for j in range(r - 1, -1, -1):
        i = (e - 1) * r + j
        H = zero
        for l, coeff, _prod in pw.terms.get(i, ()):
            if l[j] and l[-1] == e - 1:
                continue  # the distinguished term e * a_j
            assert all(l[m] == 0 for m in range(j)), (
                "terms at this digit cannot involve lower unknowns"
            )
            term = Poly.constant(field, field.coerce(coeff), f.var)
            for m in range(j + 1, r + 1):
                if l[m]:
                    term = term * u[m] ** l[m]
            H = H + term % phi
        Hs[j] = H = H % phi
        u[j] = ((b[i] - H) % phi).scale(inv_e)
        if not membership(A, inv_e) or not poly_in_ring(A, u[j]):
            raise MembershipFailure(
                "descended digit u_%d left the ring %r" % (j, A)
            )
        excess = v_k.valuation(a[j] - u[j])
        if not excess > mu * (r - j):
            raise MembershipFailure(
                "digit u_%d misses its value bound: %s vs %s"
                % (j, excess, mu * (r - j))
            )

    candidate = zero
    for i_, ui in enumerate(u):
        candidate = candidate + ui * phi ** i_
    if not v_k.valuation(candidate - g_next) > mu * r:
        raise MembershipFailure("descended polynomial is not equivalent to g")
    new_digits = _homogeneous_digits(v_k, candidate)
    phi_next = zero
    for i_, ci in enumerate(new_digits):
        if ci:
            phi_next = phi_next + ci * phi ** i_
    trace = DescentTrace(
        r, e, tuple(a), tuple(b), pw.digits, tuple(Hs), tuple(u), phi_next
    )
    return phi_next, trace


# ---------------------------------------------------------------------------
# generating sequences


class GeneratingSequence(NamedTuple):
    keys: tuple          # phi_1 .. phi_{n-1}, all in A[x]
    values: tuple        # their values under v
    tower: InductiveValuation   # terminal pseudo-valuation with keys in A[x]
    traces: tuple
    multiplicities: tuple       # n_k = deg f / deg phi_k per stage


def sequence_from_chain(A, chain) -> GeneratingSequence:
    """Wrap a terminal resolution branch whose keys already lie in A[x].

    Unlike generating_sequence this performs no descent and does not
    enforce the residue-characteristic hypothesis; it only verifies that
    every key of the chain has its coefficients in A.
    """
    if not chain.terminal:
        raise HypothesisViolated("nonUnique", "chain is not terminal")
    pairs = list(chain.tower.key_polval_list())
    f = chain.f
    keys = []
    values = []
    mults = []
    for g_k, mu_k in pairs:
        if mu_k.is_infinite:
            continue
        if not poly_in_ring(A, g_k):
            raise MembershipFailure(
                "key %r has coefficients outside %r" % (g_k, A)
            )
        keys.append(g_k)
        values.append(mu_k)
        mults.append(f.degree // g_k.degree)
    return GeneratingSequence(
        tuple(keys), tuple(values), chain.tower, (), tuple(mults)
    )


def generating_sequence(A, field, f: Poly, stage_bound: int = 64):
    """Generating sequence of key polynomials for f over the local ring A.

    Resolves f over the base field, checks the hypotheses (residue
    characteristic prime to deg f, unique extension), and descends every
    key polynomial into A[x].
    """
    from .approximants import resolve, uniqueness_certificate

    if not poly_in_ring(A, f):
        raise HypothesisViolated("notInRing", "f has a coefficient outside A")
    p = A.residue_characteristic
    if p and f.degree % p == 0:
        raise HypothesisViolated(
            "pDividesDeg",
            "residue characteristic %d divides deg f = %d" % (p, f.degree),
        )
    res = resolve(field, f, stage_bound)
    if len(res.branches) != 1:
        raise HypothesisViolated(
            "nonUnique", "%d extension branches found" % len(res.branches)
        )
    cert = uniqueness_certificate(res.branches[0])
    if not cert.verdict:
        raise HypothesisViolated("nonUnique", "uniqueness certificate failed")
    chain = res.branches[0]
    pairs = list(chain.tower.key_polval_list())

    keys = []
    values = []
    traces = []
    mults = []
    v_desc = None
    for k, (g_k, mu_k) in enumerate(pairs):
        if k == 0:
            # phi_1 = x is already in A[x].
            phi_k = g_k
            v_desc = InductiveValuation.stage_zero(field, phi_k, mu_k)
        elif mu_k.is_infinite:
            # The last key is f itself.
            v_desc = v_desc.augment(f, INFINITY)
            continue
        else:
            phi_k, trace = descend_key(v_desc, g_k, f, A)
            traces.append(trace)
            v_desc = v_desc.augment(phi_k, mu_k)
        if not poly_in_ring(A, phi_k):
            raise MembershipFailure("key %r has coefficients outside A" % phi_k)
        keys.append(phi_k)
        values.append(mu_k)
        mults.append(f.degree // phi_k.degree)
    return GeneratingSequence(
        tuple(keys), tuple(values), v_desc, tuple(traces), tuple(mults)
    )
