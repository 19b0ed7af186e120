"""Dense univariate polynomials over an abstract coefficient field.

Coefficients are stored lowest degree first with the leading zeros stripped;
the zero polynomial has an empty coefficient vector.  All arithmetic is exact.
"""

from __future__ import annotations

from .errors import MonicRequired, ZeroPolynomial


class Poly:
    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field, coeffs, var="x"):
        cs = [field.coerce(c) if not _same_field_elt(field, c) else c for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)
        self.var = var

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field, var="x"):
        return cls(field, (), var)

    @classmethod
    def one(cls, field, var="x"):
        return cls(field, (field.one,), var)

    @classmethod
    def gen(cls, field, var="x"):
        return cls(field, (field.zero, field.one), var)

    @classmethod
    def constant(cls, field, c, var="x"):
        return cls(field, (c,), var)

    @classmethod
    def from_dict(cls, field, d, var="x"):
        if not d:
            return cls.zero(field, var)
        cs = [field.zero] * (max(d) + 1)
        for i, c in d.items():
            cs[i] = c
        return cls(field, cs, var)

    # -- basic queries ------------------------------------------------------

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    @property
    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def is_constant(self):
        return len(self.coeffs) <= 1

    # -- arithmetic ---------------------------------------------------------

    def _wrap(self, coeffs):
        return Poly(self.field, coeffs, self.var)

    def derivative(self):
        """Formal derivative with respect to the polynomial variable."""
        return self._wrap(
            [self.field.coerce(i) * c for i, c in enumerate(self.coeffs)][1:]
        )

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return self._wrap([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return self._wrap([self[i] - other[i] for i in range(n)])

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return self._wrap([-c for c in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.field, self.var)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return self._wrap(out)

    __rmul__ = __mul__

    def scale(self, c):
        c = self.field.coerce(c) if not _same_field_elt(self.field, c) else c
        return self._wrap([a * c for a in self.coeffs])

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.field, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by var**k."""
        if not self.coeffs:
            return self
        return self._wrap([self.field.zero] * k + list(self.coeffs))

    def quo_rem(self, other):
        """Exact division with remainder by any nonzero polynomial."""
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        q = []
        r = list(self.coeffs)
        d = other.degree
        lc = other.lc
        for i in range(len(r) - 1 - d, -1, -1):
            c = r[i + d] / lc
            q.append(c)
            if c:
                for j, b in enumerate(other.coeffs):
                    r[i + j] = r[i + j] - c * b
        q.reverse()
        return self._wrap(q), self._wrap(r[:d] if d > 0 else [])

    def __divmod__(self, other):
        return self.quo_rem(self._coerce(other))

    def __mod__(self, other):
        return self.quo_rem(self._coerce(other))[1]

    def __floordiv__(self, other):
        return self.quo_rem(self._coerce(other))[0]

    def monic(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial cannot be made monic")
        if self.is_monic():
            return self
        return self._wrap([c / self.lc for c in self.coeffs])

    def evaluate(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_coefficients(self, fn, field=None, var=None):
        return Poly(field or self.field, [fn(c) for c in self.coeffs], var or self.var)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise TypeError("mixed coefficient fields")
            return other
        return Poly.constant(self.field, self.field.coerce(other), self.var)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return poly_str(self)


def _same_field_elt(field, c):
    # Cheap duck check: already-coerced elements pass through untouched.
    from fractions import Fraction

    from .fields import FpElement, PrimeField, RationalField

    if isinstance(field, RationalField):
        return isinstance(c, Fraction)
    if isinstance(field, PrimeField):
        return isinstance(c, FpElement)
    return False


def poly_str(p: Poly) -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p[i]
        if not c:
            continue
        if i == 0:
            parts.append(_coeff_str(c))
        else:
            mono = p.var if i == 1 else "%s^%d" % (p.var, i)
            cs = _coeff_str(c)
            if cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                if any(op in cs for op in "+-") and not cs.startswith("-"):
                    cs = "(" + cs + ")"
                elif "+" in cs[1:] or "-" in cs[1:]:
                    cs = "(" + cs + ")"
                parts.append("%s*%s" % (cs, mono))
    out = parts[0]
    for part in parts[1:]:
        out += " - " + part[1:] if part.startswith("-") else " + " + part
    return out


def _coeff_str(c):
    return str(c)


def poly_divmod(g: Poly, phi: Poly):
    """φ-adic division step: g = q·φ + r with deg r < deg φ, φ monic."""
    if not phi.is_monic() or phi.degree < 1:
        raise MonicRequired("division pivot must be monic of positive degree")
    return g.quo_rem(phi)


def phi_digits(g: Poly, phi: Poly):
    """Digits of the φ-adic expansion of g, lowest first."""
    if not phi.is_monic() or phi.degree < 1:
        raise MonicRequired("expansion pivot must be monic of positive degree")
    digits = []
    while g:
        g, r = (g.quo_rem(phi)) if g.degree >= phi.degree else (Poly.zero(g.field, g.var), g)
        digits.append(r)
        if not g:
            break
    return digits or [Poly.zero(phi.field, phi.var)]


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over the coefficient field.

    Remainders with rational function coefficients are rescaled to
    primitive form after every step; without this the nested coefficient
    growth makes the Euclidean loop unusable in practice.
    """
    a, b = _primitive_scale(f), _primitive_scale(g)
    while b:
        a, b = b, _primitive_scale(a % b)
    if not a:
        return a
    return a.monic()


def _primitive_scale(p: Poly) -> Poly:
    from fractions import Fraction
    from math import gcd, lcm

    from .ratfunc import RationalFunction

    if not p:
        return p
    if isinstance(p.coeffs[-1], Fraction):
        den = lcm(*(c.denominator for c in p.coeffs)) if len(p.coeffs) > 1 else p.coeffs[0].denominator
        num = 0
        for c in p.coeffs:
            num = gcd(num, c.numerator)
        if num:
            return p.scale(Fraction(den, num))
        return p
    if not isinstance(p.coeffs[-1], RationalFunction):
        return p
    den_lcm = None
    num_gcd = None
    for c in p.coeffs:
        if not c:
            continue
        if den_lcm is None:
            den_lcm, num_gcd = c.den, c.num
            continue
        shared = poly_gcd(den_lcm, c.den)
        den_lcm = (den_lcm * c.den).quo_rem(shared)[0] if shared.degree else den_lcm * c.den
        num_gcd = poly_gcd(num_gcd, c.num)
    if den_lcm is None:
        return p
    factor = RationalFunction(den_lcm, num_gcd)
    return p.scale(factor)


def poly_xgcd(f: Poly, g: Poly):
    """Extended gcd: returns (d, s, t) with s·f + t·g = d, d monic or zero."""
    r0, r1 = f, g
    s0, s1 = Poly.one(f.field, f.var), Poly.zero(f.field, f.var)
    t0, t1 = Poly.zero(f.field, f.var), Poly.one(f.field, f.var)
    while r1:
        q, r = r0.quo_rem(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = f.field.one / r0.lc
    return r0.monic(), s0.scale(inv), t0.scale(inv)


def resultant(f: Poly, g: Poly):
    """Classical resultant, computed through the Euclidean remainder sequence."""
    if not f:
        raise ZeroPolynomial("resultant undefined for zero first argument")
    field = f.field
    if not g:
        return field.zero
    sign = field.one
    acc = field.one
    a, b = f, g
    while b.degree > 0:
        if a.degree < b.degree:
            if (a.degree * b.degree) % 2:
                sign = -sign
            a, b = b, a
            continue
        r = a % b
        if not r:
            return field.zero
        da, db, dr = a.degree, b.degree, r.degree
        # res(a, b) = (-1)^(da*db) * lc(b)^(da-dr) * res(b, r)
        if (da * db) % 2:
            sign = -sign
        acc = acc * b.lc ** (da - dr)
        a, b = b, r
    # b is a nonzero constant: res(a, b) = b^deg(a)
    return sign * acc * b.lc ** a.degree
