"""The graded ring of Z_(p)[x]/(f) by generators and relations.

The initial forms of the key polynomials generate the associated graded
ring over the graded ring of the coefficient ring; expanding each key in
the previous one and keeping the minimal-value part gives the relations.
The value semigroup of the quotient comes along for free as a module.
"""

from fractions import Fraction

from maclane import (
    IntegersLocalizedAt,
    PAdicBase,
    Poly,
    QQ,
    presentation,
    relation_check,
    resolve,
    semigroup_module,
    sequence_from_chain,
)


def report(p, f, label):
    print("=== %s ===" % label)
    A = IntegersLocalizedAt(p)
    chain = resolve(PAdicBase(p), f)[0]
    seq = sequence_from_chain(A, chain)
    P = presentation(A, seq, f)
    for name, deg in P.generators:
        print("generator %s of degree %s" % (name, deg))
    for rel in P.relations:
        pieces = []
        for term in rel.terms:
            mono = "*".join(
                "phi%d^%d" % (i + 1, e)
                for i, e in enumerate(term.monomial) if e
            )
            pieces.append("%s%s" % (term.coeff, "*" + mono if mono else ""))
        print("relation of degree %s: %s" % (rel.degree, " + ".join(pieces)))
    relation_check(P, seq.tower)
    print("relation check: passed")
    module = semigroup_module(A, seq, Fraction(10))
    print("value semigroup: base <%s>, module generators {%s}"
          % (", ".join(str(g) for g in module.base.generators),
             ", ".join(str(g) for g in module.module_generators)))
    print()


x = Poly.gen(QQ, "x")
report(2, x * x + 1, "x^2 + 1 over Z_(2)")
report(2, x ** 3 - 2, "x^3 - 2 over Z_(2)")
report(3, x * x - 3, "x^2 - 3 over Z_(3)")
