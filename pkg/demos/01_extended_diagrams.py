#!/usr/bin/env python3
"""Attach a node to a restricted root system and identify what you get.

For each classical family the first quadratic-basis weight produces a
matrix of finite or affine type: type A gives the next symplectic group,
everything else lands in the affine tables.  The grading constant n_0 of
the node-0 fundamental weight distinguishes the two situations.
"""

from smt_kit import cartan, extend

ROWS = [("A", range(1, 5)), ("B", range(1, 5)), ("C", range(2, 5)),
        ("D", range(2, 5)), ("BC", range(1, 5))]

print("restricted   extended matrix label   class    symmetrizer        n_0")
for fam, ranks in ROWS:
    for l in ranks:
        datum = extend.extend_restricted(cartan.FinTypeLabel(fam, l))
        name = cartan.identify_label(datum.extended)
        d = cartan.symmetrizer(datum.extended)
        print(f"{fam}{l:<11} {name:<22} {datum.classification:<8} "
              f"{str([str(x) for x in d]):<18} {extend.n0(datum)}")

print()
print("The B and BC rows coincide: with the doubled-pairing convention for")
print("the nonreduced end node, their Cartan matrices are literally equal:")
b2 = extend.extend_restricted(cartan.FinTypeLabel("B", 2)).extended
bc2 = extend.extend_restricted(cartan.FinTypeLabel("BC", 2)).extended
print("  B2 ->", b2.entries)
print("  BC2 ->", bc2.entries)
