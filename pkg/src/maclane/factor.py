"""Factorization of residual polynomials over the supported residue fields.

Residue fields met in practice are small: prime fields and their finite
extensions (exhaustive divisor search is fine there), the rationals (root
extraction plus an irreducibility test up to degree three), and rational
function fields whose polynomials of interest have constant coefficients.
Anything else raises UnsupportedResidueFactorization.
"""

from __future__ import annotations

import itertools

from .errors import UnsupportedResidueFactorization, ZeroPolynomial
from .extension import SimpleExtension
from .fields import PrimeField, RationalField
from .poly import Poly
from .ratfunc import FunctionField


def factor_poly(f: Poly):
    """Factor f into monic irreducibles.

    Returns (unit, [(g_1, m_1), ...]) with unit a field constant and
    f = unit * prod g_i**m_i.  Factors are monic and pairwise distinct.
    """
    if not f:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    unit = f.lc
    g = f.monic()
    if g.degree == 0:
        return unit, []
    field = f.field
    if field.is_finite():
        return unit, _factor_finite(g)
    if isinstance(field, RationalField):
        return unit, _factor_rational(g)
    if isinstance(field, FunctionField):
        return unit, _factor_function_field(g)
    raise UnsupportedResidueFactorization(
        "no factorization routine for %r" % (field,)
    )


def is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    _unit, factors = factor_poly(f)
    return len(factors) == 1 and factors[0][1] == 1


def roots(f: Poly):
    """Roots of f in its coefficient field, with multiplicities."""
    _unit, factors = factor_poly(f)
    out = []
    for g, m in factors:
        if g.degree == 1:
            out.append((-g[0], m))
    return out


def _monic_polys(field, degree, var):
    elts = list(field.elements())
    for tup in itertools.product(elts, repeat=degree):
        yield Poly(field, list(tup) + [field.one], var)


def _factor_finite(g: Poly):
    factors = []
    while g.degree > 0:
        found = None
        for d in range(1, g.degree // 2 + 1):
            for cand in _monic_polys(g.field, d, g.var):
                if not (g % cand):
                    found = cand
                    break
            if found is not None:
                break
        if found is None:
            # No divisor up to half the degree: g itself is irreducible.
            found = g
        m = 0
        while not (g % found):
            g = g // found
            m += 1
        factors.append((found, m))
    return factors


def _rational_roots(g: Poly):
    # Candidates p/q with p | numerator of the constant term and
    # q | denominator-cleared leading term, after clearing denominators.
    from fractions import Fraction
    from math import gcd

    lcm = 1
    for c in g.coeffs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in g.coeffs]
    lo = next(i for i, c in enumerate(ints) if c)
    a0, an = abs(ints[lo]), abs(ints[-1])
    found = set()
    if lo > 0:
        found.add(Fraction(0))
    for p in _divisors(a0):
        for q in _divisors(an):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if r not in found and not g.evaluate(r):
                    found.add(r)
    return found


def _divisors(n):
    if n == 0:
        return []
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _factor_rational(g: Poly):
    factors = []
    for r in sorted(_rational_roots(g)):
        lin = Poly(g.field, [-r, g.field.one], g.var)
        m = 0
        while not (g % lin):
            g = g // lin
            m += 1
        factors.append((lin, m))
    if g.degree == 0:
        return factors
    if g.degree in (2, 3):
        # Rootless quadratics and cubics over Q are irreducible.
        factors.append((g, 1))
        return factors
    raise UnsupportedResidueFactorization(
        "rootless factor of degree %d over Q" % g.degree
    )


def _factor_function_field(g: Poly):
    field = g.field
    if not all(c.is_constant() for c in g.coeffs):
        return _factor_function_field_general(g)
    base = field.base
    gc = Poly(base, [c.as_constant() for c in g.coeffs], g.var)
    # Irreducible over the constant field stays irreducible over the
    # rational function field, so the base factorization transfers.
    _unit, base_factors = factor_poly(gc)
    return [
        (h.map_coefficients(field.coerce, field=field), m) for h, m in base_factors
    ]


def _factor_function_field_general(g: Poly):
    """Factor a monic polynomial with genuinely rational function coefficients.

    Supported through square-free reduction followed by a discriminant
    test on the square-free pieces, so only products of powers of linear
    and quadratic irreducibles are covered.
    """
    from .poly import poly_gcd

    field = g.field
    factors = []
    while g.degree > 0:
        d = g.derivative()
        if not d:
            raise UnsupportedResidueFactorization(
                "inseparable polynomial over %r" % (field,)
            )
        sf = (g // poly_gcd(g, d)).monic()
        for h in _split_squarefree(sf):
            m = 0
            while not (g % h):
                g = g // h
                m += 1
            assert m > 0
            factors.append((h, m))
    return factors


def _split_squarefree(sf: Poly):
    """Irreducible factors of a square-free monic polynomial over k(lam)."""
    if sf.degree == 1:
        return [sf]
    if sf.degree == 2:
        field = sf.field
        if field.characteristic == 2:
            raise UnsupportedResidueFactorization(
                "quadratic over a function field of characteristic two"
            )
        b, c = sf[1], sf[0]
        disc = b * b - 4 * c
        root = _ratfunc_sqrt(disc)
        if root is None:
            return [sf]
        half = field.coerce(1) / field.coerce(2)
        x = Poly.gen(field, sf.var)
        return sorted(
            {x - (root - b) * half, x - (-root - b) * half},
            key=lambda p: repr(p),
        )
    raise UnsupportedResidueFactorization(
        "square-free factor of degree %d over %r" % (sf.degree, sf.field)
    )


def _ratfunc_sqrt(q):
    """A square root of a rational function, or None if there is none."""
    if not q:
        return q
    num = _poly_sqrt(q.num.monic())
    den = _poly_sqrt(q.den.monic())
    if num is None or den is None:
        return None
    scale = _const_sqrt(q.num.field, q.num.lc / q.den.lc)
    if scale is None:
        return None
    from .ratfunc import RationalFunction

    return RationalFunction(num * scale, den)


def _poly_sqrt(p: Poly):
    """Exact square root of a monic polynomial, or None."""
    if p.degree % 2:
        return None
    if p.degree == 0:
        return p
    half = p.degree // 2
    field = p.field
    out = [field.zero] * half + [field.one]
    # Solve s**2 = p for the coefficients of s from the top down.
    for i in range(half - 1, -1, -1):
        acc = p[i + half]
        for j in range(i + 1, half):
            acc = acc - out[j] * out[i + half - j]
        out[i] = acc / field.coerce(2)
    s = Poly(field, out, p.var)
    return s if s * s == p else None


def _const_sqrt(field, c):
    """A square root of a constant of the coefficient field, or None."""
    if not c:
        return c
    if isinstance(field, RationalField):
        from fractions import Fraction
        from math import isqrt

        if c < 0:
            return None
        n, d = isqrt(c.numerator), isqrt(c.denominator)
        if n * n == c.numerator and d * d == c.denominator:
            return Fraction(n, d)
        return None
    if field.is_finite():
        for e in field.elements():
            if e * e == c:
                return e
        return None
    if isinstance(field, FunctionField):
        return _ratfunc_sqrt(c)
    raise UnsupportedResidueFactorization(
        "no square root search over %r" % (field,)
    )
