"""Coefficient fields: exact rationals and prime fields.

Field objects are lightweight descriptors supplying zero/one, coercion and
random sampling; the elements themselves carry the arithmetic through the
usual operators.  Rationals are plain ``fractions.Fraction`` values.
"""

from __future__ import annotations

from fractions import Fraction


class Field:
    """Common interface of coefficient fields."""

    def coerce(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    @property
    def characteristic(self):
        raise NotImplementedError

    def is_finite(self):
        return False

    def elements(self):
        """Iterate over all elements (finite fields only)."""
        raise TypeError("field is not finite")

    def random_element(self, rng, size=8, nonzero=False):
        raise NotImplementedError


class RationalField(Field):
    """The field Q, with Fraction elements."""

    @property
    def characteristic(self):
        return 0

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError("cannot coerce %r into Q" % (x,))

    def random_element(self, rng, size=8, nonzero=False):
        while True:
            a = Fraction(rng.randint(-size, size), rng.randint(1, size))
            if a or not nonzero:
                return a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class FpElement:
    """An element of F_p, stored as its canonical representative 0..p-1."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def _co(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise TypeError("mixed prime fields")
            return other
        if isinstance(other, int):
            return FpElement(self.p, other)
        if isinstance(other, Fraction) and other.denominator == 1:
            return FpElement(self.p, int(other))
        return None

    def __add__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return FpElement(self.p, self.v + other.v)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return FpElement(self.p, self.v - other.v)

    def __rsub__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return FpElement(self.p, other.v - self.v)

    def __mul__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return FpElement(self.p, self.v * other.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        if other.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return FpElement(self.p, self.v * pow(other.v, -1, self.p))

    def __rtruediv__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return FpElement(self.p, -self.v)

    def __pow__(self, n):
        if n < 0:
            return FpElement(self.p, pow(self.v, n, self.p))
        return FpElement(self.p, pow(self.v, n, self.p))

    def __eq__(self, other):
        other = self._co(other)
        if other is None:
            return NotImplemented
        return self.v == other.v

    def __bool__(self):
        return self.v != 0

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return str(self.v)


class PrimeField(Field):
    """F_p for a prime p, small enough for exhaustive searches."""

    def __init__(self, p):
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError("%d is not prime" % p)
        self.p = p

    @property
    def characteristic(self):
        return self.p

    def is_finite(self):
        return True

    def order(self):
        return self.p

    def elements(self):
        for v in range(self.p):
            yield FpElement(self.p, v)

    def coerce(self, x):
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise TypeError("mixed prime fields")
            return x
        if isinstance(x, int):
            return FpElement(self.p, x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return FpElement(self.p, x.numerator * pow(x.denominator, -1, self.p))
        raise TypeError("cannot coerce %r into F_%d" % (x, self.p))

    def random_element(self, rng, size=8, nonzero=False):
        lo = 1 if nonzero else 0
        return FpElement(self.p, rng.randint(lo, self.p - 1))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return "F_%d" % self.p
