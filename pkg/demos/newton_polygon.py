"""Newton polygons at successive stages of a resolution.

The first-stage polygon of f collects the points (deg f - i, v0(f_i))
from the coefficients; its slopes are the candidate values for x.  Later
stages expand f in the current key polynomial instead.
"""

from fractions import Fraction

from maclane import (
    InductiveValuation,
    OrderBase,
    PAdicBase,
    Poly,
    QQ,
    polygon,
)

F2 = PAdicBase(2)
x = Poly.gen(QQ, "x")


def show(N, label):
    print(label)
    print("  vertices:", N.vertices)
    for seg in N.segments:
        print("  slope %s over length %d" % (seg.slope, seg.length))


show(polygon(F2, x, x ** 3 - 2), "x^3 - 2 over Q_2, pivot x:")

f = x * x + 1
show(polygon(F2, x, f), "x^2 + 1 over Q_2, pivot x:")

# All coefficient values vanish, so the first stage is the Gauss
# valuation; the second-stage polygon with pivot x+1 reveals the slope.
v1 = InductiveValuation.stage_zero(F2, x, 0)
N = polygon(v1, x + 1, f)
show(N, "x^2 + 1 over [x: 0], pivot x + 1:")
print("  principal part above v(x+1) = 0:",
      N.principal_segments(v1.valuation(x + 1)))

print()
# Fractional slopes from a function-field base: x^2 + s over k(s).
base = OrderBase(QQ, "s")
y = Poly.gen(base.field, "x")
s = Poly.constant(base.field, base.field.gen(), "x")
show(polygon(base, y, y * y + s), "x^2 + s over Q(s), pivot x:")
print("the slope 1/2 is the value of x in the extension")
