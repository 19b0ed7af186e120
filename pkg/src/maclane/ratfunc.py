"""Rational functions in one named variable and their field object."""

from __future__ import annotations

from .fields import Field
from .poly import Poly, poly_gcd


def _cross_reduce(a: Poly, b: Poly):
    """Divide a common factor out of two polynomials."""
    if not a or not b or not a.degree or not b.degree:
        return a, b
    g = poly_gcd(a, b)
    if g.degree:
        a = a.quo_rem(g)[0]
        b = b.quo_rem(g)[0]
    return a, b


class RationalFunction:
    """Quotient num/den of polynomials, kept with gcd 1 and monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = None, _reduced=False):
        if den is None:
            den = Poly.one(num.field, num.var)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if num and den.degree > 0:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num // g
                    den = den // g
            elif not num:
                den = Poly.one(num.field, num.var)
            if not den.is_monic():
                lc = den.lc
                num = num.scale(num.field.one / lc)
                den = den.monic()
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    @property
    def var(self):
        return self.num.var

    def is_polynomial(self):
        return self.den.degree == 0

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def as_constant(self):
        if not self.is_constant():
            raise ValueError("%r is not constant" % (self,))
        return self.num[0]

    def _co(self, other):
        if (
            isinstance(other, RationalFunction)
            and other.field == self.field
            and other.var == self.var
        ):
            return other
        if isinstance(other, Poly) and other.field == self.field and other.var == self.var:
            return RationalFunction(other)
        try:
            c = self.field.coerce(other)
        except (TypeError, ValueError):
            return None
        return RationalFunction(Poly.constant(self.field, c, self.var))

    def __add__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __rsub__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __mul__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        # Reduce crosswise before multiplying; the factors are coprime to
        # their own denominators already, so the product is then reduced.
        n1, d2 = _cross_reduce(self.num, other.den)
        n2, d1 = _cross_reduce(other.num, self.den)
        return RationalFunction(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        n1, n2 = _cross_reduce(self.num, other.num)
        d1, d2 = _cross_reduce(self.den, other.den)
        return RationalFunction(n1 * d2, d1 * n2)

    def __rtruediv__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if n < 0:
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        return RationalFunction(self.num ** n, self.den ** n, _reduced=True)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den.degree == 0 and self.den.is_monic():
            return repr(self.num)
        num = repr(self.num)
        if " " in num:
            num = "(" + num + ")"
        den = repr(self.den)
        if " " in den:
            den = "(" + den + ")"
        return "%s/%s" % (num, den)


class FunctionField(Field):
    """The field k(var) of rational functions over a coefficient field k."""

    def __init__(self, base: Field, var: str):
        self.base = base
        self.var = var

    @property
    def characteristic(self):
        return self.base.characteristic

    def gen(self):
        return RationalFunction(Poly.gen(self.base, self.var))

    def coerce(self, x):
        if isinstance(x, RationalFunction) and x.field == self.base and x.var == self.var:
            return x
        if isinstance(x, Poly) and x.field == self.base and x.var == self.var:
            return RationalFunction(x)
        c = self.base.coerce(x)
        return RationalFunction(Poly.constant(self.base, c, self.var))

    def random_element(self, rng, size=8, nonzero=False):
        while True:
            num = Poly(
                self.base,
                [self.base.random_element(rng, size) for _ in range(rng.randint(1, 3))],
                self.var,
            )
            den = Poly(
                self.base,
                [self.base.random_element(rng, size) for _ in range(rng.randint(1, 3))],
                self.var,
            )
            if den and (num or not nonzero):
                return RationalFunction(num, den)

    def __eq__(self, other):
        return (
            isinstance(other, FunctionField)
            and other.base == self.base
            and other.var == self.var
        )

    def __hash__(self):
        return hash(("FunctionField", self.base, self.var))

    def __repr__(self):
        return "%r(%s)" % (self.base, self.var)
