"""MacLane's resolution algorithm.

Starting from a valued base field (K, v0) and a monic polynomial f, build
chains of approximants: inductive valuations with positive projection
relative to f whose values on f strictly increase.  A chain terminates
when f itself becomes a key polynomial and the value infinity is attached
to it, producing a pseudo-valuation whose support is (f).  Several chains
can coexist; each corresponds to one extension of v0 to K[x]/(f).
"""

from __future__ import annotations

from typing import List, NamedTuple, Optional

from .errors import (
    InvalidInput,
    LimitRequired,
    NonUniqueExtension,
    ReducibleInput,
    StageBoundExceeded,
)
from .inductive import InductiveValuation
from .newton import polygon
from .poly import Poly
from .value import INFINITY, Value


class StageRecord(NamedTuple):
    """Bookkeeping for one augmentation step of a chain."""

    key: Poly
    mu: Value
    vf: Value          # value of f after the step
    proj: int          # projection of the augmented valuation on f
    multiplicity: int  # multiplicity of the chosen equivalence factor
    siblings: int      # number of available continuations at this step
    single_factor: bool
    full_support: bool    # multiplicity * deg key == deg f
    equiv_power: bool     # f ~ key^multiplicity before the step


class UniquenessCertificate(NamedTuple):
    records: tuple
    terminal: bool
    verdict: bool


class ExtensionInvariants(NamedTuple):
    e: int
    f: int
    delta: int


class ApproximantChain:
    """One branch of the resolution: a tower plus its step records."""

    def __init__(self, field, f: Poly, tower: InductiveValuation, records,
                 terminal: bool, steps: int, truncated: bool = False):
        self.field = field
        self.f = f
        self.tower = tower
        self.records = tuple(records)
        self.terminal = terminal
        self.steps = steps
        self.truncated = truncated

    @property
    def mu(self) -> Value:
        """Value attached to the most recent key polynomial."""
        return self.tower.keyval

    def value_of_f(self) -> Value:
        return self.records[-1].vf

    def __repr__(self):
        state = "terminal" if self.terminal else (
            "truncated" if self.truncated else "open"
        )
        return "ApproximantChain(%r, %s, %d steps)" % (self.tower, state, self.steps)


class Resolution:
    """All branches found for f over the base field, in a fixed order."""

    def __init__(self, field, f: Poly, branches: List[ApproximantChain]):
        self.field = field
        self.f = f
        self.branches = branches

    def __len__(self):
        return len(self.branches)

    def __iter__(self):
        return iter(self.branches)

    def __getitem__(self, i):
        return self.branches[i]

    @property
    def unique(self) -> bool:
        if len(self.branches) != 1:
            return False
        return uniqueness_certificate(self.branches[0]).verdict


def first_approximants(field, f: Poly) -> List[ApproximantChain]:
    """All first approximants v1 = [v0; v1(x) = mu1] to f.

    Candidate values mu1 are the slopes of the Newton polygon of the
    coefficient values of f; each has positive projection by construction.
    """
    if not f or not f.is_monic():
        raise InvalidInput("f must be monic, got %r" % (f,))
    if f.degree < 1:
        raise InvalidInput("f must have positive degree")
    for c in f.coeffs:
        if c and field.valuation(c) < 0:
            raise InvalidInput(
                "coefficient %r lies outside the valuation ring" % (c,)
            )
    x = Poly.gen(f.field, f.var)
    if not f[0]:
        if f.degree == 1:
            tower = InductiveValuation.stage_zero(field, x, INFINITY)
            rec = StageRecord(x, INFINITY, INFINITY, 1, 1, 1, True, True, True)
            return [ApproximantChain(field, f, tower, [rec], True, 1)]
        raise ReducibleInput("x divides %r" % (f,))
    N = polygon(field, x, f)
    chains = []
    segs = N.segments
    for slope, length in segs:
        tower = InductiveValuation.stage_zero(field, x, slope)
        vf = tower.valuation(f)
        proj = tower.projection(f)
        rec = StageRecord(
            x, tower.keyval, vf, proj, length, len(segs),
            len(segs) == 1, length * 1 == f.degree, length * 1 == f.degree,
        )
        chains.append(ApproximantChain(field, f, tower, [rec], False, 1))
    return chains


def next_approximants(chain: ApproximantChain) -> List[ApproximantChain]:
    """All one-step extensions of a non-terminal chain.

    For each key factor psi of f over the current stage and each principal
    slope mu of the Newton polygon of f with respect to psi, one extended
    chain; if f itself is a key polynomial, the single terminal chain with
    value infinity attached to f.
    """
    if chain.terminal:
        raise InvalidInput("chain is already terminal")
    v = chain.tower
    f = chain.f
    if v.is_key(f):
        tower = v.augment(f, INFINITY)
        rec = StageRecord(f, INFINITY, INFINITY, 1, 1, 1, True, True, True)
        return [
            ApproximantChain(chain.field, f, tower, chain.records + (rec,),
                             True, chain.steps + 1)
        ]
    _e, _m0, factors = v.equivalence_factor(f)
    vf_old = v.valuation(f)
    continuations = []
    for psi, m in sorted(factors, key=lambda fm: fm[0].degree):
        if psi.degree < f.degree and not (f % psi):
            raise ReducibleInput("%r divides %r exactly" % (psi, f))
        N = polygon(v, psi, f)
        equiv_power = (
            len(factors) == 1 and v.equivalent_polynomials(f, psi ** m)
        )
        for slope, _length in N.principal_segments(v.valuation(psi)):
            continuations.append((psi, m, slope, equiv_power))
    if not continuations:
        raise LimitRequired(
            "no finite augmentation increases the value of f; a limit "
            "valuation would be required"
        )
    total = len(continuations)
    out = []
    for psi, m, slope, equiv_power in continuations:
        tower = v.augment(psi, slope)
        vf = tower.valuation(f)
        assert vf > vf_old, "value of f must strictly increase"
        rec = StageRecord(
            psi, tower.keyval, vf, tower.projection(f), m, total,
            total == 1, m * psi.degree == f.degree, equiv_power,
        )
        out.append(
            ApproximantChain(chain.field, f, tower, chain.records + (rec,),
                             False, chain.steps + 1)
        )
    return out


def resolve(field, f: Poly, stage_bound: int = 64) -> Resolution:
    """Run the full resolution of f over the base field.

    Branches are explored breadth first in a deterministic order; each
    finished branch carries a pseudo-valuation with support (f).  A single
    branch that fails to terminate within stage_bound steps raises
    StageBoundExceeded; with several branches the unfinished ones are
    returned truncated, since non-uniqueness is already established.
    """
    active = []
    done = []
    for c in first_approximants(field, f):
        (done if c.terminal else active).append(c)
    while active:
        nxt = []
        for c in active:
            if c.steps >= stage_bound:
                c.truncated = True
                done.append(c)
                continue
            for c2 in next_approximants(c):
                (done if c2.terminal else nxt).append(c2)
        active = nxt
    if len(done) == 1 and done[0].truncated:
        raise StageBoundExceeded(
            "resolution did not terminate within %d stages" % stage_bound
        )
    return Resolution(field, f, done)


def uniqueness_certificate(chain: ApproximantChain) -> UniquenessCertificate:
    """Stage-wise verification that the chain is the unique extension.

    Each step must have offered a single continuation whose factor has
    full multiplicity (multiplicity times key degree equals deg f) and
    with f equivalent to the corresponding power of the new key.
    """
    checks = []
    for rec in chain.records:
        checks.append(rec.single_factor and rec.full_support and rec.equiv_power)
    verdict = chain.terminal and all(checks)
    return UniquenessCertificate(tuple(checks), chain.terminal, verdict)


def extension_invariants(
    chain: ApproximantChain,
    certificate: Optional[UniquenessCertificate] = None,
) -> ExtensionInvariants:
    """Ramification index, residue degree and defect of a terminal branch."""
    if not chain.terminal:
        raise InvalidInput("extension invariants need a terminal chain")
    cert = certificate if certificate is not None else uniqueness_certificate(chain)
    if not cert.verdict:
        raise NonUniqueExtension(
            "defect is determined only for a certified unique extension"
        )
    w = chain.tower
    e = w.ramification_index()
    fdeg = w.residue_degree
    n = chain.f.degree
    if n % (e * fdeg):
        raise NonUniqueExtension(
            "degree %d is not a multiple of e*f = %d" % (n, e * fdeg)
        )
    return ExtensionInvariants(e, fdeg, n // (e * fdeg))
