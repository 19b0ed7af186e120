"""Walk through the resolution of a few monic polynomials over Q_p.

Each run prints the chain of approximant stages (key polynomial, value)
and the invariants e, f, defect of the extension when it is unique.
"""

from maclane import PAdicBase, Poly, QQ, extension_invariants, resolve

x = Poly.gen(QQ, "x")

print("=== x^2 + 1 over Q_2 ===")
res = resolve(PAdicBase(2), x * x + 1)
for chain in res:
    for rec in chain.records:
        print("  stage: key = %s, value = %s" % (rec.key, rec.mu))
print("unique extension:", res.unique)
inv = extension_invariants(res[0])
print("e = %d, f = %d, defect = %d" % (inv.e, inv.f, inv.delta))

print()
print("=== x^3 - 2 over Q_2 (totally ramified) ===")
res = resolve(PAdicBase(2), x ** 3 - 2)
for rec in res[0].records:
    print("  stage: key = %s, value = %s" % (rec.key, rec.mu))
inv = extension_invariants(res[0])
print("e = %d, f = %d, defect = %d" % (inv.e, inv.f, inv.delta))

print()
print("=== x^2 + 1 over Q_5 (splits: two branches) ===")
# The chains never terminate because the polynomial factors; we cap the
# number of stages and look at the truncated branches.
res = resolve(PAdicBase(5), x * x + 1, stage_bound=6)
print("branches found:", len(res))
for b, chain in enumerate(res):
    last = chain.records[-1]
    print("  branch %d reaches v(f) = %s after %d stages"
          % (b + 1, last.vf, chain.steps))
print("unique extension:", res.unique)
