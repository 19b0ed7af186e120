"""Inductive valuations on K[x] built from key polynomials.

An inductive valuation is a chain of stages, each assigning a value to a key
polynomial.  Every stage knows its predecessor, so a stage object represents
the whole valuation up to that point.  Values live in Q together with
infinity; a final stage with infinite key value is a pseudo valuation whose
residue ring is a field.

The graded residue ring of a stage has the form k[s, t, 1/t] with s the image
of the key polynomial and t the image of the previous uniformizer.  With the
grading scaled to be integral, grade(s) = n and grade(t) = d where n/D is the
key value, d is the relative ramification index and D the absolute
denominator of the value group.  The degree-zero part is k[y] for
y = s^d / t^n.  Homogeneous elements are written f(y) s^i t^j with
0 <= i < d, represented in code as triples (f, i, j).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import (
    KeyConditionViolated,
    KeyValueTooSmall,
    NotAUnit,
    NotEquivalentPower,
    ZeroPolynomial,
)
from .extension import SimpleExtension
from .factor import factor_poly
from .poly import Poly, phi_digits, poly_xgcd
from .value import INFINITY, Value, finite
from .valued_fields import ValuedField


def _as_int(q) -> int:
    q = Fraction(q)
    if q.denominator != 1:
        raise ValueError("%s is not an integer" % q)
    return q.numerator


class _ResidueExtension:
    """The constant-field step k_prev -> k_prev[z]/(m) for one augmentation.

    Degree-one steps keep the field and just record the root; larger steps
    build a SimpleExtension.
    """

    def __init__(self, prev_field, minpoly: Poly, var: str):
        self.prev_field = prev_field
        self.minpoly = minpoly
        if minpoly.degree == 1:
            self.field = prev_field
            self.gen = -minpoly[0]
        else:
            ext = SimpleExtension(minpoly, var=var)
            self.field = ext
            self.gen = ext.gen()

    def reduce(self, f: Poly):
        """Evaluate a residue-ring polynomial at the new generator."""
        acc = self.field.zero
        for c in reversed(f.coeffs):
            acc = acc * self.gen + c
        return acc

    def lift(self, c) -> Poly:
        """Write a constant-field element as a residue-ring polynomial."""
        if self.minpoly.degree == 1:
            return Poly.constant(self.prev_field, c, self.minpoly.var)
        c = self.field.coerce(c)
        return Poly(self.prev_field, c.rep.coeffs, self.minpoly.var)


class InductiveValuation:
    """One stage of an inductive valuation; chains give the full object."""

    def __init__(self):
        raise TypeError("use stage_zero / from_tower / augment to construct")

    @classmethod
    def _make(cls):
        return object.__new__(cls)

    # -- constructors -------------------------------------------------------

    @classmethod
    def stage_zero(cls, base: ValuedField, keypol: Poly, keyval):
        if keypol.degree != 1 or not keypol.is_monic():
            raise KeyConditionViolated("stage-zero key polynomial must be monic linear")
        keyval = keyval if isinstance(keyval, Value) else Value(keyval)
        self = cls._make()
        self._stages = []
        self.base = base
        self.keypol = keypol
        self.keyval = keyval
        self.var = keypol.var
        B = base.uniformizer_value
        self._resvar = "y0"
        self._res_ext = None
        self.residue_constant_field = base.residue_field
        self.residue_degree = 1
        if keyval.is_infinite:
            self.D = B.denominator
            self.d = 1
            self.n = None
            self.a = 0
            self.b = 1
            self.uniformizer_value = B
        else:
            mu = keyval.q
            denom = self.D = _lcm(mu.denominator, B.denominator)
            X = _as_int(denom * mu)
            Y = _as_int(denom * B)
            g = math.gcd(abs(X), Y)
            assert g == 1, "stage-zero value group is not of the expected shape"
            self.uniformizer_value = Fraction(1, denom)
            self.d = Y
            self.n = X
            self.a, self.b = _bezout_inverse(self.n, self.d)
        return self

    @classmethod
    def from_tower(cls, base: ValuedField, pairs):
        if not pairs:
            raise ValueError("empty key polynomial tower")
        pol, val = pairs[0]
        v = cls.stage_zero(base, pol, val)
        for pol, val in pairs[1:]:
            v = v.augment(pol, val)
        return v

    def augment(self, keypol: Poly, keyval, check=True, collapse=True):
        keyval = keyval if isinstance(keyval, Value) else Value(keyval)
        if check:
            reason = self.key_condition_failure(keypol)
            if reason is not None:
                raise KeyConditionViolated(reason)
            if not keyval > self.valuation(keypol):
                raise KeyValueTooSmall(
                    "new value %s does not exceed current value %s"
                    % (keyval, self.valuation(keypol))
                )
        if (
            collapse
            and self.keypol.degree == keypol.degree
            and self.is_equiv_divisible_by_key(keypol)
        ):
            # The new key refines the last stage (MacLane's lemma on
            # same-degree keys equivalent to the current one); keeping a
            # separate stage would leave a degenerate residual.
            if self.is_stage_zero():
                return InductiveValuation.stage_zero(self.base, keypol, keyval)
            return self.prev()._augment_raw(keypol, keyval)
        return self._augment_raw(keypol, keyval)

    def _augment_raw(self, keypol: Poly, keyval: Value):
        cls = type(self)
        new = cls._make()
        new._stages = self._stages + [self]
        new.base = self.base
        new.keypol = keypol
        new.keyval = keyval
        new.var = self.var
        stage = len(new._stages)
        new._resvar = "y%d" % stage

        if keyval.is_infinite:
            new.D = self.D
            new.d = 1
            new.n = None
            new.a = 0
            new.b = 1
            new.uniformizer_value = self.uniformizer_value
        else:
            mu = keyval.q
            prev_unif = self.uniformizer_value
            # Minimal positive element of Z*prev_unif + Z*mu.
            denom = _lcm(mu.denominator, prev_unif.denominator)
            g = math.gcd(abs(_as_int(denom * mu)), _as_int(denom * prev_unif))
            unif = Fraction(g, denom)
            new.uniformizer_value = unif
            new.d = _as_int(prev_unif / unif)
            new.D = self.D * new.d
            new.n = _as_int(new.D * mu)
            assert math.gcd(new.n, new.d) == 1
            new.a, new.b = _bezout_inverse(new.n, new.d)

        fres = self.residual_polynomial(keypol).monic()
        new._res_ext = _ResidueExtension(
            self.residue_constant_field, fres, "z%d" % stage
        )
        new.residue_constant_field = new._res_ext.field
        new.residue_degree = self.residue_degree * fres.degree
        return new

    # -- stage navigation ---------------------------------------------------

    def stages(self):
        for v in self._stages:
            yield v
        yield self

    def __getitem__(self, i):
        if i == len(self._stages):
            return self
        return self._stages[i]

    def stage(self):
        return len(self._stages)

    def is_stage_zero(self):
        return not self._stages

    def prev(self):
        return self._stages[-1] if self._stages else None

    def truncate(self, k):
        """The stage-k predecessor, as a valuation in its own right."""
        return self[k]

    def key_polval_list(self):
        return tuple((v.keypol, v.keyval) for v in self.stages())

    def relative_ramification_index(self):
        return self.d

    def ramification_index(self):
        e = 1
        for v in self.stages():
            e *= v.d
        return e

    def relative_residue_degree(self):
        if self.is_stage_zero():
            return 1
        return self.residue_degree // self.prev().residue_degree

    def __eq__(self, other):
        if not isinstance(other, InductiveValuation):
            return NotImplemented
        return self.base == other.base and self.key_polval_list() == other.key_polval_list()

    def __hash__(self):
        return hash((type(self).__name__, self.key_polval_list()))

    def __repr__(self):
        pv = [(v.keypol, str(v.keyval)) for v in self.stages()]
        return "Stage %d valuation with (keypol, keyval) sequence %r" % (
            self.stage(),
            pv,
        )

    # -- values -------------------------------------------------------------

    def expand(self, f: Poly):
        """phi-adic digits of f as a dict index -> coefficient polynomial."""
        return {i: c for i, c in enumerate(phi_digits(f, self.keypol)) if c}

    def valuation(self, f) -> Value:
        if isinstance(f, Poly):
            if not f:
                return INFINITY
            if f.is_constant():
                return self.base.valuation(f[0])
        else:
            return self.base.valuation(f)
        digits = self.expand(f)
        if self.keyval.is_infinite:
            digits = {0: digits[0]} if 0 in digits else {}
        prev = self.prev()
        out = INFINITY
        for i, c in digits.items():
            vi = prev.valuation(c) if prev else self.base.valuation(c[0])
            if i:
                vi = vi + self.keyval * i
            if vi < out:
                out = vi
        return out

    def __call__(self, f):
        return self.valuation(f)

    def normalize(self, v) -> int:
        """Express a value in the group as a multiple of the uniformizer value."""
        v = v if isinstance(v, Value) else Value(v)
        return _as_int(v.q / self.uniformizer_value)

    def value_group_contains(self, v) -> bool:
        v = v if isinstance(v, Value) else Value(v)
        if v.is_infinite:
            return True
        return (v.q / self.uniformizer_value).denominator == 1

    def earliest_stage_with_value(self, v):
        if not self.value_group_contains(v):
            return None
        V, U = self, self.prev()
        while U is not None and U.value_group_contains(v):
            V, U = U, U.prev()
        return V

    def decompose_value(self, v):
        """Write v = z*B + sum c_i * mu_i with 0 <= c_i < e_i.

        B is the base uniformizer value, mu_i the key value of stage i and
        e_i the relative ramification index.  Returns (z, [c_0, ..., c_k]).
        """
        v = v.q if isinstance(v, Value) else Fraction(v)
        b = self.base.uniformizer_value
        v = v / b
        z = math.floor(v)
        v -= z
        if v == 0:
            return z, [0 for _ in self.stages()]
        V = self
        cc = []
        while V is not None:
            if v.denominator == 1:
                cc.extend(0 for _ in V.stages())
                break
            W = V.earliest_stage_with_value(finite(b * v))
            if W is None:
                raise ValueError("value not in the value group")
            while V is not W:
                cc.append(0)
                V = V.prev()
            D = V.ramification_index()
            d = V.d
            k = V.keyval.q / b
            Dk = _as_int(D * k)
            Dv = _as_int(D * v)
            g = math.gcd(abs(Dv), abs(Dk))
            num, den = Dv // g, Dk // g
            c = (num * pow(den, -1, d)) % d if d > 1 else 0
            cc.append(c)
            v -= c * k
            V = V.prev()
        z += _as_int(v)
        cc.reverse()
        return z, cc

    def polynomial_with_value(self, v) -> Poly:
        """A polynomial of value v whose value is stable under augmentation."""
        v = v if isinstance(v, Value) else Value(v)
        if v.is_infinite:
            return Poly.zero(self.keypol.field, self.var)
        V = self.earliest_stage_with_value(v)
        if V is None:
            raise ValueError(
                "value %s is not in the value group (1/%d)Z" % (v, self.D)
            )
        if V is not self:
            return V.polynomial_with_value(v)
        z, cc = self.decompose_value(v)
        p = self.base.uniformizer()
        out = Poly.constant(self.keypol.field, p ** z, self.var)
        for W, c in zip(self.stages(), cc):
            if c:
                out = out * W.keypol ** c
        return out

    def uniformizer(self) -> Poly:
        return self.polynomial_with_value(finite(self.uniformizer_value))

    # -- homogeneous form ---------------------------------------------------

    def _expand_all(self, f: Poly):
        """Triples (c, v, m) with f = sum c p^v prod_j phi_j^(m_j), v(c) = 0."""
        if not f:
            return []
        out = []
        if self.is_stage_zero():
            p = self.base.uniformizer()
            B = self.base.uniformizer_value
            for i, cpoly in self.expand(f).items():
                c = cpoly[0]
                v = _as_int(self.base.valuation(c).q / B)
                out.append((c / p ** v, v, [i]))
        else:
            prev = self.prev()
            for i, coef in self.expand(f).items():
                for c, v, m in prev._expand_all(coef):
                    out.append((c, v, m + [i]))
        return out

    def homogeneous_form(self, f: Poly) -> Poly:
        """An equivalent polynomial all of whose expansion terms attain v(f)."""
        vf = self.valuation(f)
        base = self.base
        p = base.uniformizer()
        B = base.uniformizer_value
        F = Poly.zero(self.keypol.field, self.var)
        for c, v, m in self._expand_all(f):
            w = finite(v * B)
            for j, mj in enumerate(m):
                if mj:
                    w = w + self[j].keyval * mj
            if w > vf:
                continue
            c = base.lift_residue(base.residue(c))
            term = Poly.constant(self.keypol.field, c * p ** v, self.var)
            for j, mj in enumerate(m):
                if mj:
                    term = term * self[j].keypol ** mj
            F = F + term
        return F

    # -- graded residue ring ------------------------------------------------

    def graded_map(self, f: Poly, i: int, j: int):
        """Push s0^i t0^j f(y0) from the previous graded ring into this one.

        Returns (c, m) with the image equal to c t^m.
        """
        prev = self.prev()
        n, d, a, b = prev.n, prev.d, prev.a, prev.b
        m = i * n + j * d
        z = self._res_ext.gen
        c = self._res_ext.reduce(f)
        e = i * b - j * a
        if e:
            c = c * z ** e
        return c, m

    def graded_map_lift(self, c, m: int):
        """Inverse of graded_map on elements c t^m; returns (f, i, j)."""
        prev = self.prev()
        n, d, a, b = prev.n, prev.d, prev.a, prev.b
        v, i = divmod(a * m, d)
        j = n * v + b * m
        z = self._res_ext.gen
        f = self._res_ext.lift(c * z ** v if v else c)
        return f, i, j

    def graded_reduction(self, f: Poly):
        """Graded image of f: a tuple (fbar, i, j, v) with 0 <= i < d.

        The image is the homogeneous element s^i t^j fbar(s^d/t^n) of grade
        v = (i*n + j*d)/D in k[s, t, 1/t].
        """
        base = self.base
        kappa = self.residue_constant_field

        if self.keyval.is_infinite:
            c = f % self.keypol
            if not c:
                raise ZeroPolynomial("element of infinite value has no graded image")
            if self.is_stage_zero():
                c0 = c[0]
                v = base.valuation(c0)
                j = _as_int(v.q / base.uniformizer_value)
                cbar = base.residue(c0 / base.uniformizer() ** j)
                return Poly.constant(kappa, cbar, self._resvar), 0, j, v
            prev = self.prev()
            c1, i1, j1, v = prev.graded_reduction(c)
            cbar = self._res_ext.reduce(c1)
            j = i1 * prev.n + j1 * prev.d
            return Poly.constant(kappa, cbar, self._resvar), 0, j, v

        n, d, D = self.n, self.d, self.D

        if self.is_stage_zero():
            p = base.uniformizer()
            B = base.uniformizer_value
            ff = {}
            for i, cpoly in self.expand(f).items():
                c = cpoly[0]
                j = _as_int(base.valuation(c).q / B)
                cbar = base.residue(c / p ** j)
                ff[i] = (i * n + j * d, cbar)
            if not ff:
                raise ZeroPolynomial("graded reduction of the zero polynomial")
            vnum = min(g for g, _ in ff.values())
            i0 = j0 = None
            gg = {}
            for i, (g, cbar) in ff.items():
                if g != vnum:
                    continue
                if i0 is None:
                    i0 = i % d
                    j0 = (vnum - i0 * n) // d
                gg[(i - i0) // d] = cbar
            return (
                Poly.from_dict(kappa, gg, self._resvar),
                i0,
                j0,
                finite(Fraction(vnum, D)),
            )

        prev = self.prev()
        ff = {}
        for i, c in self.expand(f).items():
            c1, i1, j1, vc = prev.graded_reduction(c)
            ff[i] = (_as_int(vc.q * D) + i * n, i1, j1, c1)
        if not ff:
            raise ZeroPolynomial("graded reduction of the zero polynomial")
        vnum = min(g for g, _, _, _ in ff.values())
        ninv = self.a
        i0 = j0 = None
        gg = {}
        for i, (g, i1, j1, c1) in ff.items():
            if g != vnum:
                continue
            if i0 is None:
                i0 = (ninv * vnum) % d
                j0 = (vnum - i0 * n) // d
            m = (i - i0) // d
            cbar, j = self.graded_map(c1, i1, j1)
            assert j == j0 - m * n, "graded bookkeeping failure"
            gg[m] = cbar
        return (
            Poly.from_dict(kappa, gg, self._resvar),
            i0,
            j0,
            finite(Fraction(vnum, D)),
        )

    def graded_reduction_lift(self, f, i=None, j=None, v=None):
        """Lift a homogeneous element f(y) s^i t^j back to K[x].

        With no position arguments the lift is monic in the key polynomial
        (i = 0, j = n deg f).  Giving v instead solves i n + j d = v D.
        """
        if not isinstance(f, Poly):
            f = Poly.constant(self.residue_constant_field, f, self._resvar)
        base = self.base
        if self.keyval.is_infinite:
            if self.is_stage_zero():
                c = base.lift_residue(f[0])
                return Poly.constant(self.keypol.field, c, self.var)
            f0, i0, j0 = self.graded_map_lift(f[0], 0)
            assert i0 == 0 and j0 == 0
            return self.prev().graded_reduction_lift(f0, 0, 0)

        n, d, D, a = self.n, self.d, self.D, self.a
        if i is None or j is None:
            if v is None:
                if i is None:
                    i = 0
                if j is None:
                    j = n * f.degree
            else:
                v = v.q if isinstance(v, Value) else Fraction(v)
                vnum = _as_int(v * D)
                if i is None and j is None:
                    i = (vnum * a) % d
                    j = (vnum - i * n) // d
                elif i is None:
                    inum = vnum - j * d
                    if inum % n:
                        raise ValueError("incompatible j and v")
                    i = inum // n
                else:
                    jnum = vnum - i * n
                    if jnum % d:
                        raise ValueError("incompatible i and v")
                    j = jnum // d
        if i < 0:
            raise ValueError("exponent on s must be nonnegative")

        F = Poly.zero(self.keypol.field, self.var)
        phi = self.keypol
        prev = self.prev()
        for k, c in enumerate(f.coeffs):
            if not c:
                continue
            ii = i + k * d
            jj = j - k * n
            if self.is_stage_zero():
                C = Poly.constant(
                    self.keypol.field,
                    base.lift_residue(c) * base.uniformizer() ** jj,
                    self.var,
                )
            else:
                f0, i0, j0 = self.graded_map_lift(c, jj)
                C = prev.graded_reduction_lift(f0, i0, j0)
            F = F + C * phi ** ii
        return F

    def reduce(self, f: Poly) -> Poly:
        """Image in the residue ring of a polynomial of nonnegative value."""
        h, _i, _j, v = self.graded_reduction(f)
        if v < 0:
            raise NotAUnit("cannot reduce an element of negative value")
        if v > 0:
            return Poly.zero(self.residue_constant_field, self._resvar)
        return h

    def lift(self, h) -> Poly:
        """A polynomial of value 0 reducing to the residue-ring element h."""
        return self.graded_reduction_lift(h, 0, 0)

    def residual_polynomial(self, f: Poly) -> Poly:
        return self.graded_reduction(f)[0]

    def keypol_from_residual(self, h: Poly) -> Poly:
        """Monic homogeneous lift of an irreducible residual polynomial."""
        if self.keyval.is_infinite:
            raise ZeroPolynomial("terminal stage admits no further key polynomials")
        return self.graded_reduction_lift(h)

    # -- equivalence calculus ----------------------------------------------

    def equivalent_polynomials(self, f: Poly, g: Poly) -> bool:
        """Whether v(f - g) > v(f) (or both are zero)."""
        if not f and not g:
            return True
        return self.valuation(f - g) > self.valuation(f)

    def is_equivalent(self, f: Poly, g: Poly) -> bool:
        return self.equivalent_polynomials(f, g)

    def effective_degree(self, f: Poly):
        """Largest expansion index whose term attains the value of f."""
        if not f:
            return None
        if self.keyval.is_infinite:
            return 0
        prev = self.prev()
        best_v = INFINITY
        best_k = 0
        digits = self.expand(f)
        for k in sorted(digits):
            c = digits[k]
            vk = (prev.valuation(c) if prev else self.base.valuation(c[0])) + (
                self.keyval * k if k else finite(0)
            )
            if vk <= best_v:
                best_v = vk
                best_k = k
        return best_k

    def is_equiv_unit(self, f: Poly) -> bool:
        return bool(f) and self.effective_degree(f) == 0

    def equiv_inverse(self, f: Poly) -> Poly:
        """g with f g equivalent to 1; f must be an equivalence unit."""
        if not self.is_equiv_unit(f):
            raise NotAUnit("polynomial is not an equivalence unit")
        f0 = f % self.keypol
        _d, g, _t = poly_xgcd(f0, self.keypol)
        return g

    def is_equiv_divisible_by_key(self, f: Poly) -> bool:
        r = f % self.keypol
        if not r:
            return True
        return self.valuation(r) > self.valuation(f)

    def is_minimal(self, f: Poly) -> bool:
        """Top expansion digit constant and attaining the minimum value."""
        if not f:
            return False
        digits = self.expand(f)
        m = max(digits)
        top = digits[m]
        if not top.is_constant():
            return False
        return self.valuation(f) == self.base.valuation(top[0]) + self.keyval * m

    def key_condition_failure(self, f: Poly):
        """None if f is key for self, else a short reason string."""
        if self.keyval.is_infinite:
            return "terminal stage admits no key polynomials"
        if not f:
            return "zero polynomial"
        digits = self.expand(f)
        m = max(digits)
        if m == 0:
            return "degree too small"
        top = digits[m]
        if not (top.is_constant() and top[0] == self.keypol.field.one):
            return "not monic of degree divisible by the key degree"
        if self.valuation(f) != self.keyval * m:
            return "not minimal: top term does not attain the value"
        c0 = digits.get(0, Poly.zero(self.keypol.field, self.var))
        if self.valuation(c0) > self.valuation(f):
            if m == 1:
                return None  # equivalent to the key polynomial itself
            return "equivalence divisible by the key polynomial"
        res = self.residual_polynomial(f)
        _unit, factors = factor_poly(res)
        if len(factors) != 1 or factors[0][1] != 1:
            return "residual polynomial is reducible"
        return None

    def is_key(self, f: Poly) -> bool:
        return self.key_condition_failure(f) is None

    def projection(self, f: Poly) -> int:
        """Projection length of the slope -keyval segment for f."""
        v = self.valuation(f)
        if v.is_infinite:
            return 1
        prev = self.prev()
        ii = []
        for i, c in self.expand(f).items():
            vc = prev.valuation(c) if prev else self.base.valuation(c[0])
            if vc + self.keyval * i == v:
                ii.append(i)
        return max(ii) - min(ii)

    def equivalence_factor(self, f: Poly):
        """Equivalence factorization f ~ e phi^m0 prod psi_i^(m_i).

        Returns (e, m0, [(psi_i, m_i)]) with e an equivalence unit and each
        psi_i a key polynomial for self.  Requires v(f) finite.
        """
        vf = self.valuation(f)
        if vf.is_infinite:
            raise ZeroPolynomial("cannot factor an element of infinite value")
        fbar, i0, j0, _v = self.graded_reduction(f)
        o = next(k for k, c in enumerate(fbar.coeffs) if c)
        fprime = Poly(fbar.field, fbar.coeffs[o:], fbar.var)
        m0 = i0 + o * self.d
        unit, factors = factor_poly(fprime)
        psis = []
        for rho, m in factors:
            psis.append((self.keypol_from_residual(rho), m))
        je = (j0 + o * self.n) - self.n * sum(
            m * rho.degree for rho, m in factors
        )
        e = self.graded_reduction_lift(
            Poly.constant(self.residue_constant_field, unit, self._resvar), 0, je
        )
        prod = e * self.keypol ** m0
        for psi, m in psis:
            prod = prod * psi ** m
        if not self.equivalent_polynomials(f, prod):
            raise NotEquivalentPower("equivalence factorization failed to verify")
        return e, m0, psis

    def initial_divides(self, h: Poly, g: Poly) -> bool:
        """Whether the initial form of h divides that of g in the graded ring.

        The graded ring of the valuation on K[x] is kappa[s, t, 1/t] with
        s the image of the key polynomial and t a unit of minimal positive
        grade; an initial form factors as a power of s times a polynomial
        in lambda = s^d/t^n with nonzero constant term, so divisibility
        reduces to comparing s-orders and dividing in kappa[lambda].
        """
        if not self.valuation(g).is_finite:
            return True
        if not self.valuation(h).is_finite:
            return False
        fh, ih, _jh, _vh = self.graded_reduction(h)
        fg, ig, _jg, _vg = self.graded_reduction(g)
        oh = next(k for k, c in enumerate(fh.coeffs) if c)
        og = next(k for k, c in enumerate(fg.coeffs) if c)
        if ih + self.d * oh > ig + self.d * og:
            return False
        uh = Poly(fh.field, fh.coeffs[oh:], fh.var)
        ug = Poly(fg.field, fg.coeffs[og:], fg.var)
        return not (ug % uh)

    def collapse(self):
        """Equivalent valuation with strictly increasing key degrees."""
        if self.is_stage_zero():
            return self
        chain = list(self.stages())
        if all(
            a.keypol.degree < b.keypol.degree for a, b in zip(chain, chain[1:])
        ):
            return self
        W = self.prev().collapse()
        if W.keypol.degree != self.keypol.degree:
            return W._augment_raw(self.keypol, self.keyval)
        if not W.is_stage_zero():
            return W.prev()._augment_raw(self.keypol, self.keyval)
        return InductiveValuation.stage_zero(self.base, self.keypol, self.keyval)


def is_equivalent(v: InductiveValuation, g: Poly, h: Poly) -> bool:
    """Whether g and h are equivalent in v."""
    return v.equivalent_polynomials(g, h)


def equiv_divides(v: InductiveValuation, h: Poly, g: Poly) -> bool:
    """Whether h equivalence-divides g.

    Divisibility is decided at the stage where v's top key polynomial was
    introduced: for an augmented tower this is the previous stage, whose
    residual calculus the top key belongs to.  With this convention the
    value of g jumps under the top augmentation exactly when the key
    equivalence-divides g.
    """
    w = v if v.is_stage_zero() else v.prev()
    return w.initial_divides(h, g)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _bezout_inverse(n: int, d: int):
    """(a, b) with a n + b d = 1 and 0 <= a < d."""
    a = pow(n % d, -1, d) if d > 1 else 0
    b = (1 - a * n) // d
    assert a * n + b * d == 1
    return a, b
