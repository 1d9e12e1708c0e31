"""
Splitting type on the exceptional divisor
=========================================

Restricting a bundle to the exceptional line gives a bundle on P^1, which
splits as O(j) + O(-j).  Here we hide diag(z^j, z^-j) behind random changes of
frame and recover j twice: once by counting sections, once by factoring.
"""

import random

from blowup_bundles.algebra import BiLaurentPoly, Matrix2
from blowup_bundles.birkhoff import grothendieck_split, section_dimension, splitting_type
from blowup_bundles.sampling import random_xi_unimodular, random_z_unimodular

rng = random.Random(0)

# a disguised O(2) + O(-2): polynomial in 1/z on the left, in z on the right
M = random_xi_unimodular(rng) @ Matrix2.split(2) @ random_z_unimodular(rng)
print("M =", M)

# sections of the twists E(-k) vanish exactly when k exceeds j
for k in range(4):
    print(f"h0(E({-k})) = {section_dimension(M, k)}")
print("splitting type:", splitting_type(M))

# the factorization returns the frames explicitly
f = grothendieck_split(M)
print("A =", f.A)
print("B =", f.B)
print("recomposes exactly:", f.recompose() == M)

# an upper-triangular matrix can still be trivial on P^1
z = BiLaurentPoly.monomial(1, 0)
example = Matrix2(z, 1, 0, BiLaurentPoly.monomial(-1, 0))
print("[[z, 1], [0, 1/z]] has splitting type", splitting_type(example))
