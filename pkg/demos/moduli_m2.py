"""
The moduli space M_2
====================

For j = 2 the window holds three coefficients (c10, c11, c21).  Bundles with
(c10, c11) != 0 are classified by [c10 : c11] in P^1; the rest collapse to two
extra points, the split bundle and a single bundle with only c21 nonzero.
These two points cannot be separated by open sets.
"""

import itertools

from blowup_bundles.canonical import CanonicalForm
from blowup_bundles.equivalence import are_equivalent
from blowup_bundles.moduli import M2Subset, dimension_count, m2_classify, m2_closure, m2_separable


def form(c10, c11, c21):
    return CanonicalForm(2, {(1, 0): c10, (1, 1): c11, (2, 1): c21})


samples = [form(1, 0, 0), form(1, 0, 5), form(2, 0, -1), form(0, 0, 1), form(0, 0, -3),
           form(0, 0, 0), form(1, 1, 0)]
for K in samples:
    x = m2_classify(K)
    print(f"p = {K.p()}  ->  {x}")

# the solver agrees with the tags
for a, b in itertools.combinations(samples, 2):
    same_tag = m2_classify(a) == m2_classify(b)
    assert same_tag == are_equivalent(a, b).equivalent

split, q = m2_classify(form(0, 0, 0)), m2_classify(form(0, 0, 1))
print("\nsplit and q separable:", m2_separable(split, q))
print("closure of {p}:", m2_closure(M2Subset(has_p=True)))

for j in range(2, 6):
    size, generic, lower = dimension_count(j)
    print(f"M_{j}: {size} parameters, generic stratum P^{generic}, lower strata {lower}")
