#!/usr/bin/env python3
"""Which lattices between the root and weight lattices are quadratic?

A lattice is quadratic when its dominant monoid is free and every dominant
element below a sum of two basis weights has basis-height at most two,
equivalently every simple root has nonnegative height over the basis.  The
classification is short: full weight lattice for types A, C, BC, root
lattice for type B (and both for rank one / the coincidence B2 = C2);
branchy or multiply-laced diagrams fail at a recorded certificate root.
"""

from smt_kit import cartan, quadlat

for name in ("A3", "B3", "C3", "BC3", "D4", "G2"):
    label = cartan.FinTypeLabel.parse(name)
    print(f"== {name}")
    for lattice, verdict, report in quadlat.classify_quadratic(label, bound=12):
        line = f"   {lattice:<9} quadratic={verdict}"
        if not verdict and isinstance(report.get("certificate"), dict):
            line += f"   certificate: {report['certificate']}"
        print(line)

print()
print("Chain structure of the quadratic basis (down-sets of eps_i):")
for name in ("B3", "C3"):
    rep = quadlat.check_lemma7(cartan.FinTypeLabel.parse(name))
    print(f"  {name}: eps_i <= eps_1 + eps_(i-1): {rep['part_i']};"
          f" uniqueness: {rep['part_ii']}")
    for i, down in rep["downsets"].items():
        print(f"     down-set of eps_{i}: {down}")
