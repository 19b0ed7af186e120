"""Newton polygons of phi-adic expansions.

The polygon of f with respect to a pivot phi over a valuation v collects
the points (m - i, v(f_i)) for the nonzero digits f_i of the expansion
f = sum f_i phi^i with m = deg f / deg phi.  Its lower convex hull carries
the candidate values for augmenting by phi: each principal segment (one
whose slope exceeds the current value of phi) yields one continuation,
with the horizontal length giving the projection of the augmented stage.

Slope convention: slope = (change in ordinate) / (change in abscissa)
moving in the direction of increasing abscissa, so the candidate key
values are the principal slopes themselves.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, NamedTuple, Tuple

from .errors import MonicRequired, ZeroPolynomial
from .poly import Poly, phi_digits
from .value import Value


class Segment(NamedTuple):
    slope: Fraction
    length: int


class NewtonPolygon:
    """Lower convex hull of digit-value points, with its segment list."""

    def __init__(self, points: List[Tuple[int, Fraction]]):
        # One point per abscissa: only the lowest ordinate can matter.
        best = {}
        for x, y in points:
            if x not in best or y < best[x]:
                best[x] = y
        self.points = sorted(best.items())
        self.vertices = _lower_hull(self.points)
        self.segments = [
            Segment(Fraction(b[1] - a[1], b[0] - a[0]), b[0] - a[0])
            for a, b in zip(self.vertices, self.vertices[1:])
        ]

    def principal_segments(self, threshold) -> List[Segment]:
        t = threshold.q if isinstance(threshold, Value) else Fraction(threshold)
        return [s for s in self.segments if s.slope > t]

    def __repr__(self):
        return "NewtonPolygon(vertices=%r)" % (self.vertices,)


def _lower_hull(points):
    hull = []
    for p in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return hull


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def polygon(v_prev, phi: Poly, f: Poly) -> NewtonPolygon:
    """The Newton polygon of f with respect to phi over v_prev.

    v_prev may be an inductive valuation or a valued base field; in the
    latter case phi must be linear so the digits are constants.
    """
    if not f:
        raise ZeroPolynomial("Newton polygon of the zero polynomial")
    if not phi.is_monic():
        raise MonicRequired("pivot %r is not monic" % (phi,))
    digits = phi_digits(f, phi)
    m = len(digits) - 1
    points = []
    for i, c in enumerate(digits):
        if not c:
            continue
        val = _digit_value(v_prev, c)
        if val.is_infinite:
            continue
        points.append((m - i, val.q))
    return NewtonPolygon(points)


def principal_part(N: NewtonPolygon, threshold) -> List[Segment]:
    """The segments of N with slope strictly above the threshold."""
    return N.principal_segments(threshold)


def projection(v_k, f: Poly) -> int:
    """Spread alpha - beta of the expansion exponents attaining v_k(f)."""
    return v_k.projection(f)


def _digit_value(v_prev, c: Poly) -> Value:
    from .inductive import InductiveValuation

    if isinstance(v_prev, InductiveValuation):
        return v_prev.valuation(c)
    if c.degree > 0:
        raise TypeError(
            "nonconstant digit %r needs an inductive valuation, got %r"
            % (c, v_prev)
        )
    return v_prev.valuation(c[0])
