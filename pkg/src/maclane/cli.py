"""Command-line front end.

Subcommands: value, approximate, descend, graded, polygon, oracle.  Every
run takes a JSON scenario config through --input; results are printed in
a short human-readable form, or as canonical JSON where --json applies.

Exit codes: 0 success, 2 parse or input error, 3 hypothesis violation,
4 limit or stage bound reached, 5 oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .approximants import (
    extension_invariants,
    resolve,
    uniqueness_certificate,
)
from .descent import generating_sequence, poly_in_ring, sequence_from_chain
from .errors import (
    HypothesisViolated,
    InvalidInput,
    LimitRequired,
    MacLaneError,
    MembershipFailure,
    ParseError,
    ReducibleInput,
    StageBoundExceeded,
)
from .graded import presentation, relation_check, semigroup_module, semigroup_of_ring
from .newton import polygon
from .parsing import load_scenario, parse_poly
from .poly import Poly, resultant

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_HYPOTHESIS = 3
EXIT_LIMIT = 4
EXIT_ORACLE = 5


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="maclane",
        description="MacLane valuations, approximants, descent and graded data",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", required=True, metavar="FILE",
                       help="JSON scenario config")
        p.add_argument("--json", action="store_true", help="emit JSON output")
        p.add_argument("--verbose", action="store_true")
        p.add_argument("--seed", type=int, default=7)
        p.add_argument("--samples", type=int, default=200)
        p.add_argument("--stage-bound", type=int, default=64,
                       dest="stage_bound")
        p.add_argument("--bound", default="20",
                       help="semigroup coverage bound B")
        return p

    p = common(sub.add_parser("value", help="value of g under the extension"))
    p.add_argument("g", help="polynomial text")
    p.set_defaults(func=cmd_value)

    p = common(sub.add_parser("approximate", help="run the resolution of f"))
    p.set_defaults(func=cmd_approximate)

    p = common(sub.add_parser("descend", help="generating sequence over A"))
    p.set_defaults(func=cmd_descend)

    p = common(sub.add_parser("graded", help="graded presentation and semigroup"))
    p.set_defaults(func=cmd_graded)

    p = common(sub.add_parser("polygon", help="Newton polygon dump"))
    p.add_argument("--stage", type=int, default=1)
    p.set_defaults(func=cmd_polygon)

    p = common(sub.add_parser("oracle", help="resultant-oracle agreement"))
    p.set_defaults(func=cmd_oracle)
    return ap


def _terminal_branch(scenario, stage_bound):
    res = resolve(scenario.field, scenario.f, stage_bound=stage_bound)
    for chain in res:
        if chain.terminal:
            return res, chain
    raise StageBoundExceeded("no branch terminated within the stage bound")


def _tower_stages(w):
    """The stage list v_1, ..., v_n of a tower, outermost last."""
    stages = [w]
    while not stages[0].is_stage_zero():
        stages.insert(0, stages[0].prev())
    return stages


def cmd_value(args) -> int:
    scenario = load_scenario(args.input)
    g = parse_poly(args.g, scenario.field.field, scenario.var)
    _res, chain = _terminal_branch(scenario, args.stage_bound)
    val = chain.tower.valuation(g)
    if args.json:
        print(json.dumps({"value": str(val)}, indent=2, sort_keys=True))
    else:
        print(str(val))
    return EXIT_OK


def cmd_approximate(args) -> int:
    scenario = load_scenario(args.input)
    res = resolve(scenario.field, scenario.f, stage_bound=args.stage_bound)
    payload = {"branches": [], "unique": res.unique}
    for chain in res:
        branch = {
            "terminal": chain.terminal,
            "truncated": chain.truncated,
            "stages": [
                {"key": str(r.key), "value": str(r.mu), "projection": r.proj}
                for r in chain.records
            ],
        }
        if chain.terminal:
            cert = uniqueness_certificate(chain)
            branch["certified"] = cert.verdict
            if cert.verdict:
                inv = extension_invariants(chain, cert)
                branch["invariants"] = {"e": inv.e, "f": inv.f, "delta": inv.delta}
        payload["branches"].append(branch)
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
        return EXIT_OK
    for b, chain in enumerate(res):
        if len(res) > 1:
            print("branch %d:" % (b + 1))
        for r in chain.records:
            print("(%s, %s)" % (r.key, r.mu))
    print("unique: %s" % ("yes" if res.unique else "no"))
    if res.unique:
        inv = extension_invariants(res[0])
        print("e=%d f=%d defect=%d" % (inv.e, inv.f, inv.delta))
    return EXIT_OK


def cmd_descend(args) -> int:
    scenario = load_scenario(args.input)
    if scenario.ring is None:
        raise InvalidInput("descend needs a ring descriptor in the config")
    try:
        seq = generating_sequence(
            scenario.ring, scenario.field, scenario.f,
            stage_bound=args.stage_bound,
        )
    except HypothesisViolated as exc:
        if exc.kind != "pDividesDeg":
            raise
        # Descent is unavailable, but the sequence still exists whenever
        # the approximant keys already have coefficients in A.
        _res, chain = _terminal_branch(scenario, args.stage_bound)
        seq = sequence_from_chain(scenario.ring, chain)
    if args.json:
        payload = {
            "keys": [
                {"name": "phi_%d" % (i + 1), "poly": str(k), "value": str(v)}
                for i, (k, v) in enumerate(zip(seq.keys, seq.values))
            ],
            "in_ring": all(poly_in_ring(scenario.ring, k) for k in seq.keys),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return EXIT_OK
    for i, (key, val) in enumerate(zip(seq.keys, seq.values)):
        print("phi_%d = %s (v=%s)" % (i + 1, key, val))
    ok = all(poly_in_ring(scenario.ring, k) for k in seq.keys)
    print("all coefficients in A: %s" % ("yes" if ok else "no"))
    if args.verbose:
        for k, trace in enumerate(seq.traces):
            if trace is None:
                continue
            print("stage %d: r=%d e=%d" % (k + 1, trace.r, trace.e))
            nz = [i for i, c in enumerate(trace.c) if c]
            print("  nonzero c_i: %s" % (nz,))
            re_ = trace.r * trace.e
            mu = seq.values[k]
            for i in range(re_ + 1):
                ci = trace.c[i] if i < len(trace.c) else None
                bi = trace.b[i] if i < len(trace.b) else None
                if ci is None and bi is None:
                    continue
                diff = (ci - bi) if ci is not None and bi is not None else (
                    ci if ci is not None else bi
                )
                if diff:
                    margin = seq.tower.valuation(diff) - (mu * (re_ - i)).q
                    print("  digit margin at i=%d: %s" % (i, margin))
            for j, u in enumerate(trace.u):
                print("  u_%d = %s" % (j, u))
    return EXIT_OK


def _graded_payload(scenario, args):
    from fractions import Fraction

    _res, chain = _terminal_branch(scenario, args.stage_bound)
    seq = sequence_from_chain(scenario.ring, chain)
    P = presentation(scenario.ring, seq, scenario.f)
    relation_check(P, seq.tower)
    rng = random.Random(args.seed)
    module = semigroup_module(
        scenario.ring, seq, Fraction(args.bound), field=scenario.field,
        rng=rng, samples=args.samples,
    )
    S = semigroup_of_ring(scenario.ring, scenario.field)
    return {
        "generators": [
            {"name": name, "degree": str(deg)} for name, deg in P.generators
        ],
        "relations": [
            {
                "lead": {"gen": "phi%d" % rel.index, "power": rel.lead_power},
                "terms": [
                    {
                        "coeff": str(t.coeff),
                        "monomial": list(t.monomial),
                        "value": str(t.value),
                    }
                    for t in rel.terms
                ],
            }
            for rel in P.relations
        ],
        "semigroup": {
            "base_gens": [str(g) for g in S.generators],
            "module_gens": [str(g) for g in module.module_generators],
        },
    }


def cmd_graded(args) -> int:
    scenario = load_scenario(args.input)
    if scenario.ring is None:
        raise InvalidInput("graded needs a ring descriptor in the config")
    payload = _graded_payload(scenario, args)
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
        return EXIT_OK
    for gen in payload["generators"]:
        print("generator %s of degree %s" % (gen["name"], gen["degree"]))
    for rel in payload["relations"]:
        terms = " + ".join(
            "%s*%s" % (t["coeff"], _monomial_text(t["monomial"]))
            for t in rel["terms"]
        )
        print("relation (lead %s^%d): %s" % (
            rel["lead"]["gen"], rel["lead"]["power"], terms,
        ))
    print("semigroup base generators: %s" % ", ".join(
        payload["semigroup"]["base_gens"]))
    print("module generators: %s" % ", ".join(
        payload["semigroup"]["module_gens"]))
    return EXIT_OK


def _monomial_text(exps) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e:
            parts.append("phi%d^%d" % (i + 1, e) if e > 1 else "phi%d" % (i + 1))
    return "*".join(parts) if parts else "1"


def cmd_polygon(args) -> int:
    scenario = load_scenario(args.input)
    f = scenario.f
    k = args.stage
    if k < 1:
        raise InvalidInput("--stage must be at least 1")
    if k == 1:
        x = Poly.gen(f.field, scenario.var)
        N = polygon(scenario.field, x, f)
        threshold = None
    else:
        _res, chain = _terminal_branch(scenario, args.stage_bound)
        stages = _tower_stages(chain.tower)
        if k > len(stages):
            raise InvalidInput(
                "stage %d exceeds the tower height %d" % (k, len(stages))
            )
        v_prev = stages[k - 2]
        pivot = stages[k - 1].keypol
        N = polygon(v_prev, pivot, f)
        threshold = v_prev.valuation(pivot)
    principal = set(
        N.segments if threshold is None else N.principal_segments(threshold)
    )
    for x0, y0 in N.vertices:
        print("(%d, %s)" % (x0, y0))
    for seg in N.segments:
        print("slope=%s length=%d principal=%s" % (
            seg.slope, seg.length, "true" if seg in principal else "false",
        ))
    return EXIT_OK


def cmd_oracle(args) -> int:
    scenario = load_scenario(args.input)
    f = scenario.f
    field = scenario.field
    _res, chain = _terminal_branch(scenario, args.stage_bound)
    w = chain.tower
    rng = random.Random(args.seed)
    agree = 0
    failures = []
    for _ in range(args.samples):
        g = _random_poly_over(field, f, rng)
        lhs = w.valuation(g) * f.degree
        rhs = field.valuation(resultant(f, g))
        if lhs == rhs:
            agree += 1
        else:
            failures.append((g, lhs, rhs))
    print("%d/%d agree" % (agree, args.samples))
    if failures:
        for g, lhs, rhs in failures[:5]:
            print("disagree on %s: %s * deg f != %s" % (g, w.valuation(g), rhs))
        return EXIT_ORACLE
    return EXIT_OK


def _random_poly_over(field, f: Poly, rng) -> Poly:
    while True:
        deg = rng.randrange(max(1, f.degree))
        coeffs = [field.random_element(rng) for _ in range(deg)]
        coeffs.append(field.random_element(rng, nonzero=True))
        g = Poly(f.field, coeffs, f.var)
        if g:
            return g


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidInput, ReducibleInput, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except (HypothesisViolated, MembershipFailure) as exc:
        print("hypothesis violation: %s" % exc, file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (LimitRequired, StageBoundExceeded) as exc:
        print("limit: %s" % exc, file=sys.stderr)
        return EXIT_LIMIT
    except MacLaneError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
