"""Exception hierarchy for the whole library.

Every error raised on a documented failure path derives from MacLaneError so
callers (and the CLI) can distinguish math-level failures from bugs.
"""


class MacLaneError(Exception):
    """Base class for all library errors."""


class MonicRequired(MacLaneError):
    """Division pivot must be monic."""


class ZeroPolynomial(MacLaneError):
    """Operation undefined for the zero polynomial."""


class NotAUnit(MacLaneError):
    """Residue requested for an element of nonzero value."""


class PseudoValuationNotAField(MacLaneError):
    """A field extension cannot be built from a tower ending in value infinity."""


class UnsupportedRing(MacLaneError):
    """Local ring descriptor not supported for this base field."""


class UnsupportedResidueFactorization(MacLaneError):
    """Factorization over this residue field is outside the supported range."""


class KeyValueTooSmall(MacLaneError):
    """Augmentation value must exceed the current value of the key polynomial."""


class KeyConditionViolated(MacLaneError):
    """Candidate key polynomial fails one of the key conditions.

    The ``reason`` attribute names the failed condition.
    """

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class InvalidInput(MacLaneError):
    """Malformed input to the approximant machinery."""


class LimitRequired(MacLaneError):
    """The finite algorithm cannot continue; a limit key polynomial would be needed."""


class StageBoundExceeded(MacLaneError):
    """Resolution did not terminate within the configured stage bound."""


class ReducibleInput(MacLaneError):
    """The polynomial presented as irreducible has a proper factor."""


class NonUniqueExtension(MacLaneError):
    """Invariant requested that is only defined for a unique extension."""


class ResidueCharDividesDegree(MacLaneError):
    """1/e does not lie in the coefficient ring."""


class NotEquivalentPower(MacLaneError):
    """f is not equivalent to the required power of the candidate key."""


class MembershipFailure(MacLaneError):
    """Internal descent consistency failure; signals a bug or violated precondition."""


class HypothesisViolated(MacLaneError):
    """A hypothesis of the descent construction does not hold.

    ``kind`` is 'pDividesDeg', 'nonUnique' or 'notInRing'.
    """

    def __init__(self, kind, message=None):
        super().__init__(message or kind)
        self.kind = kind


class RelationNotHomogeneous(MacLaneError):
    """A graded relation has terms of unequal value."""


class RelationValueTooSmall(MacLaneError):
    """A relation lift does not exceed the relation degree."""


class CoverageGapFound(MacLaneError):
    """A value escaped the candidate semigroup-module cover.

    The offending value is carried in the ``value`` attribute.
    """

    def __init__(self, value):
        super().__init__("value %s not covered" % (value,))
        self.value = value


class ParseError(MacLaneError):
    """Text input could not be parsed; carries position information."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position
