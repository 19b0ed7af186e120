"""Repairing a key polynomial whose coefficients left the local ring.

The base field is k(s)(t) with v(s) = 1 and v(t) = 3/2, and the local
ring A is k[s, t] localized at the origin.  We perturb the key
g = x^2 + s by t^2/s, which has value 2 but does not lie in A, and ask
the descent to produce an equivalent key with coefficients back in A.
"""

from fractions import Fraction

from maclane import (
    ExtensionField,
    InductiveValuation,
    OrderBase,
    Poly,
    PolyLocalized,
    QQ,
    descend_key,
    membership,
    poly_in_ring,
)

base = OrderBase(QQ, "s")
t_pol = Poly.gen(base.field, "t")
K = ExtensionField(base, "t", [(t_pol, Fraction(3, 2))])
A = PolyLocalized(QQ, ("s", "t"))

x = Poly.gen(K.field, "x")
s = K.field.coerce(K.field.base.gen())
t = K.field.gen()

g = x * x + Poly.constant(K.field, s, "x")
f = g * g - Poly.constant(K.field, s ** 3 * t, "x")
v1 = InductiveValuation.stage_zero(K, x, Fraction(1, 2))

h = t * t / s
print("perturbation h = %s, v(h) = %s, in A: %s"
      % (h, K.valuation(h), membership(A, h)))

g_bad = g + Poly.constant(K.field, h, "x")
print("perturbed key:", g_bad)
print("still equivalent to g:", v1.equivalent_polynomials(g_bad, g))

phi, trace = descend_key(v1, g_bad, f, A)
print()
print("descended key:", phi)
print("coefficients in A:", poly_in_ring(A, phi))
print("is a key for v1:", v1.is_key(phi))
print("equivalent to the perturbed key:",
      v1.equivalent_polynomials(phi, g_bad))

print()
print("digit-level data of the descent (r = %d, e = %d):"
      % (trace.r, trace.e))
for j, (aj, uj) in enumerate(zip(trace.a, trace.u)):
    excess = v1.valuation(aj - uj) if aj != uj else "exact"
    print("  digit %d: %s -> %s (excess value %s)" % (j, aj, uj, excess))
