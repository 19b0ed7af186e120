"""Concrete valued base fields (K, v0).

Three kinds of base are provided:

* ``PAdicBase(p)`` -- the rationals with the p-adic valuation;
* ``OrderBase(k, var)`` -- the rational function field k(var) with the
  order-of-vanishing valuation at var = 0;
* ``ExtensionField(base, var, tower)`` -- K0(var) valued by an inductive
  valuation over a smaller base, for nested examples whose value group is
  finer than Z.

Each exposes the same small interface: exact valuation of field elements,
a uniformizer with its value, the residue field with reduction and lifting
maps, and random sampling for tests.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotAUnit, PseudoValuationNotAField
from .fields import Field, PrimeField, QQ
from .poly import Poly
from .ratfunc import FunctionField, RationalFunction
from .value import INFINITY, Value, finite


class ValuedField:
    """A field together with a rank-one valuation with values in Q."""

    field: Field
    residue_field: Field

    def valuation(self, c) -> Value:
        raise NotImplementedError

    def uniformizer(self):
        raise NotImplementedError

    @property
    def uniformizer_value(self) -> Fraction:
        raise NotImplementedError

    def residue(self, c):
        """Image in the residue field of an element of valuation zero."""
        raise NotImplementedError

    def lift_residue(self, r):
        """A valuation-zero element of K reducing to r."""
        raise NotImplementedError

    def random_element(self, rng, nonzero=False):
        return self.field.random_element(rng, nonzero=nonzero)


class PAdicBase(ValuedField):
    """Q with the p-adic valuation; residue field F_p."""

    def __init__(self, p: int):
        self.p = p
        self.field = QQ
        self.residue_field = PrimeField(p)

    def valuation(self, c) -> Value:
        c = self.field.coerce(c)
        if not c:
            return INFINITY
        return finite(_int_ord(c.numerator, self.p) - _int_ord(c.denominator, self.p))

    def uniformizer(self):
        return Fraction(self.p)

    @property
    def uniformizer_value(self):
        return Fraction(1)

    def residue(self, c):
        c = self.field.coerce(c)
        if self.valuation(c) != 0:
            raise NotAUnit("residue of %r under the %d-adic valuation" % (c, self.p))
        return self.residue_field.coerce(c)

    def lift_residue(self, r):
        return Fraction(self.residue_field.coerce(r).v)

    def __eq__(self, other):
        return isinstance(other, PAdicBase) and other.p == self.p

    def __hash__(self):
        return hash(("PAdicBase", self.p))

    def __repr__(self):
        return "Q_%d" % self.p


class OrderBase(ValuedField):
    """k(var) with the order of vanishing at var = 0; residue field k."""

    def __init__(self, constants: Field, var: str):
        self.constants = constants
        self.var = var
        self.field = FunctionField(constants, var)
        self.residue_field = constants

    def valuation(self, c) -> Value:
        c = self.field.coerce(c)
        if not c:
            return INFINITY
        return finite(_low_order(c.num) - _low_order(c.den))

    def uniformizer(self):
        return self.field.gen()

    @property
    def uniformizer_value(self):
        return Fraction(1)

    def residue(self, c):
        c = self.field.coerce(c)
        vn, vd = _low_order(c.num), _low_order(c.den)
        if vn != vd:
            raise NotAUnit("residue of %r at %s = 0" % (c, self.var))
        return c.num[vn] / c.den[vd]

    def lift_residue(self, r):
        return self.field.coerce(self.constants.coerce(r))

    def __eq__(self, other):
        return (
            isinstance(other, OrderBase)
            and other.constants == self.constants
            and other.var == self.var
        )

    def __hash__(self):
        return hash(("OrderBase", self.constants, self.var))

    def __repr__(self):
        return "%r(%s) at %s=0" % (self.constants, self.var, self.var)


class ExtensionField(ValuedField):
    """K0(var) valued through an inductive valuation over a smaller base.

    ``tower`` is a list of (polynomial, value) pairs in ``var`` over the base
    field, ending with a finite value; the resulting valuation restricts to
    the base valuation on K0 and has the tower's value group.
    """

    def __init__(self, base: ValuedField, var: str, tower, residue_var="lam"):
        from .inductive import InductiveValuation

        self.base = base
        self.var = var
        self.field = FunctionField(base.field, var)
        polring_tower = []
        for pol, val in tower:
            if not isinstance(pol, Poly):
                raise TypeError("tower entries must be polynomials in %s" % var)
            polring_tower.append((pol, val if isinstance(val, Value) else finite(val)))
        self.indval = InductiveValuation.from_tower(base, polring_tower)
        if self.indval.keyval.is_infinite:
            raise PseudoValuationNotAField(
                "tower ends with value infinity; the result is not a valued field"
            )
        self.residue_var = residue_var
        self.residue_field = FunctionField(
            self.indval.residue_constant_field, residue_var
        )

    def valuation(self, c) -> Value:
        c = self.field.coerce(c)
        if not c:
            return INFINITY
        return self.indval.valuation(c.num) - self.indval.valuation(c.den).q

    def random_element(self, rng, nonzero=False):
        """Sample with polynomial numerators and monomial denominators.

        Fully generic rational functions in two nested variables make the
        gcd normalization in the field arithmetic far too expensive for
        bulk property tests; monomial denominators still reach the whole
        value group.
        """
        base = self.field.base
        while True:
            coeffs = []
            for _ in range(rng.randint(1, 3)):
                if isinstance(base, FunctionField):
                    inner = Poly(
                        base.base,
                        [base.base.random_element(rng, 5)
                         for _ in range(rng.randint(1, 3))],
                        base.var,
                    )
                    coeffs.append(base.coerce(inner))
                else:
                    coeffs.append(base.random_element(rng, 5))
            num = Poly(base, coeffs, self.var)
            if not num:
                if nonzero:
                    continue
                return self.field.coerce(0)
            elt = self.field.coerce(num)
            if isinstance(base, FunctionField) and rng.random() < 0.5:
                inner_gen = self.field.coerce(base.coerce(Poly.gen(base.base, base.var)))
                elt = elt / inner_gen ** rng.randint(1, 3)
            return elt

    def uniformizer(self):
        return self.field.coerce(self.indval.uniformizer())

    @property
    def uniformizer_value(self):
        return self.indval.uniformizer_value

    def residue(self, c):
        c = self.field.coerce(c)
        if self.valuation(c) != 0:
            raise NotAUnit("residue of an element of nonzero value")
        fn, i1, j1, _vn = self.indval.graded_reduction(c.num)
        fd, i2, j2, _vd = self.indval.graded_reduction(c.den)
        if (i1, j1) != (i2, j2):
            raise NotAUnit("graded images of numerator and denominator differ")
        fn = Poly(self.residue_field.base, fn.coeffs, self.residue_var)
        fd = Poly(self.residue_field.base, fd.coeffs, self.residue_var)
        return RationalFunction(fn, fd)

    def lift_residue(self, r):
        r = self.residue_field.coerce(r)
        num = self.indval.graded_reduction_lift(r.num, 0, 0)
        den = self.indval.graded_reduction_lift(r.den, 0, 0)
        return RationalFunction(num, den)

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.var == self.var
            and other.indval.key_polval_list() == self.indval.key_polval_list()
        )

    def __hash__(self):
        return hash(("ExtensionField", self.base, self.var))

    def __repr__(self):
        return "%r(%s) with tower %r" % (self.base.field, self.var, self.indval)


def _int_ord(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("order of zero")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _low_order(f: Poly) -> int:
    for i, c in enumerate(f.coeffs):
        if c:
            return i
    raise ValueError("order of the zero polynomial")
