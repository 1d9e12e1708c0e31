"""
Canonical transition matrices
=============================

Any transition matrix with splitting type j can be brought to the shape
[[z^j, p], [0, z^-j]] where p only uses the monomials z^l u^i of a finite
window.  We scramble a canonical form with random gauges, then reduce it back.
"""

import random

from blowup_bundles.canonical import CanonicalForm, canonical_window, canonicalize
from blowup_bundles.equivalence import are_equivalent
from blowup_bundles.sampling import random_gauged

rng = random.Random(1)

for j in range(1, 5):
    print(f"j = {j}: {len(canonical_window(j))} parameters", canonical_window(j))

K0 = CanonicalForm(3, {(1, -1): 1, (1, 2): -2, (2, 1): 3, (4, 2): 1})
print("\nstarting form p =", K0.p())

# T A = C K0 with A holomorphic on U and C holomorphic on V
T, A, C = random_gauged(rng, K0)
print("scrambled transition matrix has", sum(len(x) for x in T), "terms")

K, G = canonicalize(T)
print("recovered p =", K.p())
print("T A = C K holds:", T @ G.A == G.C @ K.matrix())

# the recovered form need not be identical, but it is the same bundle
print("equivalent to the start:", are_equivalent(K, K0).equivalent)
