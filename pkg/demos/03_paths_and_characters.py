#!/usr/bin/env python3
"""Three ways to count a Demazure module, and the path tensor rule.

Lakshmibai-Seshadri paths of a dominant shape, counted below a coset,
match the divided-difference character; at the longest element both match
the Weyl dimension formula.  Concatenating with a straight segment
decomposes tensor products.
"""

import itertools
from fractions import Fraction as Q

from smt_kit import cartan, lspath, weyl

for name, coords in (("A2", (1, 1)), ("C2", (1, 1)), ("G2", (1, 0))):
    gcm = cartan.build_cartan(cartan.FinTypeLabel.parse(name))
    real = cartan.Realization(gcm, name)
    lam = real.weight([Q(c) for c in coords])
    w0 = weyl.longest_parabolic(real, range(real.n))
    top = weyl.CosetRep(w0, lspath.stabilizer_nodes(lam))
    paths = lspath.enumerate_paths(lam, top)
    print(f"{name}, shape {coords}: paths={len(paths)}"
          f"  demazure={weyl.demazure_dim(w0, lam)}"
          f"  weyl_dim={cartan.weyl_dim(gcm, lam)}")

print()
print("Tensor decomposition of the two 4-dimensional symplectic modules:")
gcm = cartan.build_cartan(cartan.FinTypeLabel("C", 2))
real = cartan.Realization(gcm, "C2")
w1 = real.fundamental(0)
total = 0
for coords in itertools.product(range(4), repeat=2):
    nu = real.weight([Q(c) for c in coords])
    mult = lspath.tensor_multiplicity(w1, w1, nu, gcm)
    if mult:
        dim = cartan.weyl_dim(gcm, nu)
        total += mult * dim
        print(f"   V{coords}: multiplicity {mult}, dimension {dim}")
print(f"   total {total} = 4 * 4")
