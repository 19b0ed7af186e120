"""Simple field extensions k[z]/(m(z)) for an irreducible minimal polynomial."""

from __future__ import annotations

import itertools

from .fields import Field
from .poly import Poly, poly_xgcd


class ExtElement:
    """Element of a simple extension, stored as a reduced polynomial in z."""

    __slots__ = ("ext", "rep")

    def __init__(self, ext, rep: Poly):
        self.ext = ext
        self.rep = rep % ext.minpoly if rep.degree >= ext.minpoly.degree else rep

    def _co(self, other):
        if isinstance(other, ExtElement):
            if other.ext != self.ext:
                raise TypeError("mixed extensions")
            return other
        try:
            return self.ext.coerce(other)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return ExtElement(self.ext, self.rep + other.rep)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return ExtElement(self.ext, self.rep - other.rep)

    def __rsub__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return ExtElement(self.ext, -self.rep)

    def __mul__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return ExtElement(self.ext, self.rep * other.rep)

    __rmul__ = __mul__

    def inverse(self):
        if not self.rep:
            raise ZeroDivisionError("inverse of zero")
        d, s, _t = poly_xgcd(self.rep, self.ext.minpoly)
        if d.degree != 0:
            raise ZeroDivisionError("element shares a factor with the minimal polynomial")
        return ExtElement(self.ext, s.scale(self.rep.field.one / d[0]))

    def __truediv__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ext.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.rep)

    def __eq__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        return hash((self.ext, self.rep))

    def __repr__(self):
        return repr(self.rep)


class SimpleExtension(Field):
    """The quotient field k[z]/(m) for monic irreducible m over a field k."""

    def __init__(self, minpoly: Poly, var: str = "z"):
        if not minpoly.is_monic() or minpoly.degree < 1:
            raise ValueError("minimal polynomial must be monic of positive degree")
        self.base = minpoly.field
        self.var = var
        self.minpoly = minpoly if minpoly.var == var else Poly(
            minpoly.field, minpoly.coeffs, var
        )

    @property
    def degree(self):
        return self.minpoly.degree

    @property
    def characteristic(self):
        return self.base.characteristic

    def is_finite(self):
        return self.base.is_finite()

    def order(self):
        return self.base.order() ** self.degree

    def gen(self):
        return ExtElement(self, Poly.gen(self.base, self.var))

    def coerce(self, x):
        if isinstance(x, ExtElement) and x.ext == self:
            return x
        if isinstance(x, Poly) and x.field == self.base:
            return ExtElement(self, Poly(self.base, x.coeffs, self.var))
        return ExtElement(self, Poly.constant(self.base, self.base.coerce(x), self.var))

    def elements(self):
        if not self.base.is_finite():
            raise TypeError("field is not finite")
        base_elts = list(self.base.elements())
        for tup in itertools.product(base_elts, repeat=self.degree):
            yield ExtElement(self, Poly(self.base, list(tup), self.var))

    def random_element(self, rng, size=8, nonzero=False):
        while True:
            rep = Poly(
                self.base,
                [self.base.random_element(rng, size) for _ in range(self.degree)],
                self.var,
            )
            e = ExtElement(self, rep)
            if e or not nonzero:
                return e

    def __eq__(self, other):
        return (
            isinstance(other, SimpleExtension)
            and other.minpoly == self.minpoly
            and other.var == self.var
        )

    def __hash__(self):
        return hash(("SimpleExtension", self.minpoly, self.var))

    def __repr__(self):
        return "%r[%s]/(%r)" % (self.base, self.var, self.minpoly)
