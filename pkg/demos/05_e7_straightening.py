#!/usr/bin/env python3
"""The 56-dimensional minuscule poset and its single seeded relation.

Basis vectors are indexed by weights; squares and products of comparable
pairs are standard, and the 133 incomparable pairs (as many as the
dimension of the adjoint module) each carry one quadratic relation.  The
relation through the highest vector rewrites x5*y5 into an alternating sum
of five standard products; applying the engine to a standard product, for
example x0*y0, leaves it untouched.
"""

from smt_kit import cartan, smt

poset = smt.e7_minuscule()
comp, inc = smt.count_standard_pairs(poset)
print(f"poset size: {len(poset)}; comparable pairs (with repeats): {comp};"
      f" incomparable: {inc}")

e7 = cartan.build_cartan(cartan.FinTypeLabel("E", 7))
adj = cartan.weyl_dim(e7, cartan.Realization(e7, "E7").fundamental(0))
r0 = cartan.Realization(smt.e7_gcm(), "E7@0")
sym = cartan.weyl_dim(smt.e7_gcm(), r0.fundamental(0).scale(2))
print(f"dimension oracle: {sym} + {adj} = {sym + adj} = 56*57/2")

system, xs, ys = smt.e7_system()
names = {g: f"x{k}" for k, g in enumerate(xs)}
names.update({g: f"y{k}" for k, g in enumerate(ys)})


def show(mono, nf):
    terms = " ".join(f"{'+' if c > 0 else '-'} {names[m[0]]}{names[m[1]]}"
                     for m, c in sorted(nf.items()))
    print(f"  {names[mono[0]]}{names[mono[1]]}  ->  {terms.lstrip('+ ')}")


print("\nstraightening:")
show((xs[5], ys[5]), smt.straighten((xs[5], ys[5]), system))
show((xs[0], ys[0]), smt.straighten((xs[0], ys[0]), system))
print("\nfactor grades: x-chain",
      [system.grade[g] for g in xs], " y-chain", [system.grade[g] for g in ys])
