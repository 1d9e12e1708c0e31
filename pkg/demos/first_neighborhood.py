"""
Isomorphism on the first formal neighborhood
============================================

Modulo u^2 only the u-linear part p_1 of the canonical form survives, and two
bundles agree there exactly when their p_1 are proportional.  The exact
equivalence solver reproduces this, and shows that higher orders matter.
"""

from blowup_bundles.algebra import GaussianRational
from blowup_bundles.canonical import CanonicalForm
from blowup_bundles.equivalence import are_equivalent, equivalent_first_neighborhood

i = GaussianRational(0, 1)
K = CanonicalForm(3, {(1, -1): 1, (1, 0): 2, (1, 2): -1})
L = CanonicalForm(3, {k: c * (1 + i) for k, c in K.coeffs.items()})
M = CanonicalForm(3, {(1, -1): 1, (1, 0): 3, (1, 2): -1})

for name, other in (("(1+i) p_1", L), ("perturbed p_1", M)):
    v = are_equivalent(K, other, order=1)
    print(f"{name}: solver says {v.equivalent}, proportionality says "
          f"{equivalent_first_neighborhood(K, other)}")

# every positive verdict comes with a checkable witness
v = are_equivalent(K, L, order=1)
print("witness A =", v.witness.A)

# at full order the extra coefficients can separate bundles with equal p_1
base = CanonicalForm(3, {(1, 2): 1})
other = CanonicalForm(3, {(1, 2): 1, (2, 0): 1, (4, 2): 1})
print("\nsame p_1, order 1:", are_equivalent(base, other, order=1).equivalent)
print("same p_1, order 4:", are_equivalent(base, other).equivalent)
