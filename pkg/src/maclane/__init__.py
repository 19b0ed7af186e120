"""MacLane inductive valuations, approximants, integral descent.

The library computes with rank-one valuations on K[x] built as MacLane
towers over an exactly-valued base field: key polynomials, Newton
polygons, the resolution of a monic polynomial into pseudo-valuation
branches, descent of keys into a local coefficient ring, and the graded
presentation of the resulting quotient with its value semigroup.
"""

from fractions import Fraction

from .approximants import (
    ApproximantChain,
    ExtensionInvariants,
    Resolution,
    StageRecord,
    UniquenessCertificate,
    extension_invariants,
    first_approximants,
    next_approximants,
    resolve,
    uniqueness_certificate,
)
from .descent import (
    DescentTrace,
    GeneratingSequence,
    IntegersLocalizedAt,
    PolyLocalized,
    PowerDigits,
    descend_key,
    generating_sequence,
    membership,
    poly_in_ring,
    power_digits,
    sequence_from_chain,
)
from .errors import (
    CoverageGapFound,
    HypothesisViolated,
    InvalidInput,
    KeyConditionViolated,
    KeyValueTooSmall,
    LimitRequired,
    MacLaneError,
    MembershipFailure,
    MonicRequired,
    NonUniqueExtension,
    NotAUnit,
    NotEquivalentPower,
    ParseError,
    ReducibleInput,
    RelationNotHomogeneous,
    RelationValueTooSmall,
    ResidueCharDividesDegree,
    StageBoundExceeded,
    UnsupportedResidueFactorization,
    UnsupportedRing,
    ZeroPolynomial,
)
from .factor import factor_poly, is_irreducible, roots
from .fields import Field, PrimeField, QQ, RationalField
from .graded import (
    GradedPresentation,
    InitialForm,
    Relation,
    RelationTerm,
    SemigroupModule,
    ValueSemigroup,
    presentation,
    relation_check,
    relation_lift,
    semigroup_module,
    semigroup_of_ring,
)
from .inductive import InductiveValuation, equiv_divides, is_equivalent
from .newton import NewtonPolygon, Segment, polygon, principal_part, projection
from .parsing import Scenario, load_scenario, parse_poly, parse_value, scenario_from_dict
from .poly import Poly, phi_digits, poly_gcd, poly_xgcd, resultant
from .ratfunc import FunctionField, RationalFunction
from .value import INFINITY, Value, finite, vmin
from .valued_fields import ExtensionField, OrderBase, PAdicBase, ValuedField


def poly_divmod(g: Poly, phi: Poly):
    """Quotient and remainder of g by a monic phi."""
    if not phi.is_monic():
        raise MonicRequired("division by the non-monic %r" % (phi,))
    return divmod(g, phi)


def factor_over_prime_field(g: Poly):
    """Irreducible factorization over a prime field (exhaustive search)."""
    if not isinstance(g.field, PrimeField):
        raise InvalidInput("expected a polynomial over a prime field")
    _unit, factors = factor_poly(g)
    return factors


def value_of(F: ValuedField, a) -> Value:
    return F.valuation(a)


def residue(F: ValuedField, a):
    return F.residue(a)


def lift(F: ValuedField, r):
    return F.lift_residue(r)


def extend_by_tower(K: ValuedField, var: str, tower) -> ValuedField:
    """The valued field K(var) defined by an inductive tower over K."""
    return ExtensionField(K, var, tower)


def augment(v: InductiveValuation, phi: Poly, mu) -> InductiveValuation:
    return v.augment(phi, mu)


def value(v: InductiveValuation, g: Poly) -> Value:
    return v.valuation(g)


def phi_expand(v: InductiveValuation, g: Poly, k=None):
    """phi-adic digits of g at stage k (the last stage by default)."""
    w = v if k is None else v.truncate(k)
    return w.expand(g)


def homogenize(v: InductiveValuation, g: Poly) -> Poly:
    return v.homogeneous_form(g)


def is_minimal(v: InductiveValuation, g: Poly) -> bool:
    return v.is_minimal(g)


def is_key(v: InductiveValuation, phi: Poly) -> bool:
    return v.is_key(phi)


def key_condition_failure(v: InductiveValuation, phi: Poly):
    return v.key_condition_failure(phi)


def effective_degree(v: InductiveValuation, g: Poly, k=None) -> int:
    w = v if k is None else v.truncate(k)
    return w.effective_degree(g)


def residual_polynomial(v: InductiveValuation, g: Poly) -> Poly:
    return v.residual_polynomial(g)


def equivalence_factor(v: InductiveValuation, f: Poly):
    return v.equivalence_factor(f)


def lift_residual_factor(v: InductiveValuation, h: Poly) -> Poly:
    return v.keypol_from_residual(h)


__all__ = [name for name in dir() if not name.startswith("_")]
