"""Randomized property suites shared by the ``oracle-check`` command."""

import random
from dataclasses import dataclass, field

from .algebra import Matrix2
from .birkhoff import grothendieck_split, splitting_type
from .canonical import canonical_window, canonicalize
from .equivalence import are_equivalent, equivalent_first_neighborhood, first_neighborhood_class
from .sampling import (random_canonical, random_gauged, random_scalar,
                       random_xi_unimodular, random_z_unimodular)

__all__ = ["PropertyResult", "run_all", "PROPERTIES"]


@dataclass
class PropertyResult:
    name: str
    trials: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "trials": self.trials,
                "failures": self.failures}


def gauge_roundtrip(rng, count):
    """Random gauges of random canonical forms canonicalize back to an equivalent form."""
    res = PropertyResult("gauge_roundtrip")
    for n in range(count):
        j = rng.choice((2, 3))
        K0 = random_canonical(rng, j, depth=1)
        T, _, _ = random_gauged(rng, K0)
        K, G = canonicalize(T)
        res.trials += 1
        window = set(canonical_window(j))
        ok = (K.j == j and T @ G.A == G.C @ K.matrix() and G.is_valid()
              and set(K.coeffs) <= window
              and equivalent_first_neighborhood(K, K0)
              and are_equivalent(K, K0).equivalent)
        if not ok:
            res.failures.append({"trial": n, "j": j})
    return res


def first_neighborhood_agreement(rng, count):
    """Order-1 oracle verdicts agree with projective equality of the u-linear rows."""
    res = PropertyResult("first_neighborhood_agreement")
    for n in range(count):
        j = rng.choice((2, 3))
        K1 = random_canonical(rng, j, depth=1, trunc=2 * j - 2)
        if rng.random() < 0.5:
            lam = random_scalar(rng)
            coeffs = {(i, l): c * lam for (i, l), c in K1.coeffs.items() if i == 1}
            for (i, l) in canonical_window(j):
                if i > 1 and rng.random() < 0.5:
                    coeffs[(i, l)] = random_scalar(rng)
            K2 = type(K1)(j, coeffs, K1.trunc)
        else:
            K2 = random_canonical(rng, j, depth=1, trunc=2 * j - 2)
        res.trials += 1
        expected = equivalent_first_neighborhood(K1, K2)
        got = are_equivalent(K1, K2, order=1).equivalent
        if expected != got:
            res.failures.append({"trial": n, "j": j, "expected": expected, "got": got})
    return res


def birkhoff_roundtrip(rng, count):
    """``A diag(z**j, z**-j) B`` re-splits to the same ``j`` and recomposes exactly."""
    res = PropertyResult("birkhoff_roundtrip")
    for n in range(count):
        j = rng.randint(0, 4)
        M = random_xi_unimodular(rng) @ Matrix2.split(j) @ random_z_unimodular(rng)
        f = grothendieck_split(M)
        res.trials += 1
        if not (f.j == j == splitting_type(M) and f.recompose() == M):
            res.failures.append({"trial": n, "j": j})
    return res


def class_invariance(rng, count):
    """The first-neighborhood class is unchanged by random gauges (j = 2, 3)."""
    res = PropertyResult("first_neighborhood_class_invariance")
    for n in range(count):
        j = rng.choice((2, 3))
        K0 = random_canonical(rng, j, depth=1)
        T, _, _ = random_gauged(rng, K0)
        K, _ = canonicalize(T)
        res.trials += 1
        if first_neighborhood_class(K) != first_neighborhood_class(K0):
            res.failures.append({"trial": n, "j": j})
    return res


PROPERTIES = (gauge_roundtrip, first_neighborhood_agreement, birkhoff_roundtrip,
              class_invariance)


def run_all(seed, count):
    rng = random.Random(seed)
    return [prop(rng, count) for prop in PROPERTIES]
