"""The value codomain Q ∪ {∞}.

All valuations in this library take values in the rational numbers together
with a single element ``INFINITY`` larger than every rational.  Addition and
comparison behave as expected; ``INFINITY`` absorbs addition.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering


@total_ordering
class Value:
    """An element of Q ∪ {∞}, ordered with ∞ on top."""

    __slots__ = ("_q",)

    def __init__(self, q=None):
        # q=None encodes infinity; otherwise q is coerced to Fraction.
        self._q = None if q is None else Fraction(q)

    @property
    def is_infinite(self):
        return self._q is None

    @property
    def is_finite(self):
        return self._q is not None

    @property
    def q(self) -> Fraction:
        if self._q is None:
            raise ValueError("infinite value has no rational part")
        return self._q

    def __add__(self, other):
        other = _coerce(other)
        if self._q is None or other._q is None:
            return INFINITY
        return Value(self._q + other._q)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other._q is None:
            raise ValueError("cannot subtract an infinite value")
        if self._q is None:
            return INFINITY
        return Value(self._q - other._q)

    def __mul__(self, n):
        # Scalar multiples by nonnegative integers / rationals.
        if isinstance(n, Value):
            raise TypeError("values are not multiplied together")
        n = Fraction(n)
        if self._q is None:
            if n < 0:
                raise ValueError("negative multiple of infinity")
            return INFINITY if n > 0 else Value(0)
        return Value(self._q * n)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self._q == other._q

    def __lt__(self, other):
        other = _coerce(other)
        if self._q is None:
            return False
        if other._q is None:
            return True
        return self._q < other._q

    def __hash__(self):
        return hash(("Value", self._q))

    def __repr__(self):
        return "Value(%s)" % ("infinity" if self._q is None else self._q)

    def __str__(self):
        return "infinity" if self._q is None else str(self._q)


def _coerce(x) -> Value:
    if isinstance(x, Value):
        return x
    return Value(Fraction(x))


INFINITY = Value(None)


def finite(q) -> Value:
    """Finite value from any rational-like input."""
    return Value(Fraction(q))


def vmin(values):
    """Minimum of an iterable of Values (∞ for an empty iterable)."""
    best = INFINITY
    for v in values:
        if v < best:
            best = v
    return best
