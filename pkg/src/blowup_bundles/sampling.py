"""Deterministic random generators for canonical forms, gauges and Birkhoff inputs.

Everything takes a :class:`random.Random` so that results depend only on the seed.
"""

import random

from .algebra import BiLaurentPoly, GaussianRational, Matrix2, TransitionMatrix2
from .canonical import CanonicalForm, canonical_window

__all__ = [
    "rng_from",
    "random_scalar",
    "random_canonical",
    "random_u_gauge",
    "random_v_gauge",
    "random_gauged",
    "random_z_unimodular",
    "random_xi_unimodular",
]


def rng_from(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_scalar(rng, bound=4, complex_rate=0.0, nonzero=True):
    while True:
        re = rng.randint(-bound, bound)
        im = rng.randint(-bound, bound) if rng.random() < complex_rate else 0
        if re or im or not nonzero:
            return GaussianRational(re, im)


def random_canonical(rng, j, depth=1, trunc=None, density=0.6, complex_rate=0.0):
    """Canonical form whose first nonzero row is ``depth`` (``None`` for split)."""
    coeffs = {}
    if depth is not None:
        for (i, l) in canonical_window(j):
            if i >= depth and rng.random() < density:
                coeffs[(i, l)] = random_scalar(rng, complex_rate=complex_rate)
        row = [(i, l) for (i, l) in canonical_window(j) if i == depth]
        if not row:
            raise ValueError(f"depth {depth} is outside 1..{2 * j - 2}")
        if not any((i, l) in coeffs for (i, l) in row):
            coeffs[rng.choice(row)] = random_scalar(rng, complex_rate=complex_rate)
    return CanonicalForm(j, coeffs, trunc)


def _poly(rng, trunc, allowed, nterms):
    terms = {}
    for _ in range(nterms):
        l, i = rng.choice(allowed)
        terms[(l, i)] = random_scalar(rng)
    return BiLaurentPoly(terms, trunc)


def _elementary_product(rng, trunc, allowed, factors, nterms):
    M = Matrix2.diag(random_scalar(rng, 2), random_scalar(rng, 2), trunc)
    for n in range(factors):
        f = _poly(rng, trunc, allowed, nterms)
        E = Matrix2(1, f, 0, 1, trunc) if n % 2 == 0 else Matrix2(1, 0, f, 1, trunc)
        M = M @ E
    return M


def random_u_gauge(rng, trunc, max_degree=2, factors=2, nterms=2):
    """Invertible matrix holomorphic on U (entries polynomial in ``z``, ``u``)."""
    allowed = [(l, i) for i in range(trunc + 1) for l in range(max_degree + 1)]
    return _elementary_product(rng, trunc, allowed, factors, nterms)


def random_v_gauge(rng, trunc, max_degree=2, factors=2, nterms=2):
    """Invertible matrix holomorphic on V (entries polynomial in ``1/z``, ``z u``)."""
    allowed = [(i - a, i) for i in range(trunc + 1) for a in range(max_degree + 1)]
    return _elementary_product(rng, trunc, allowed, factors, nterms)


def random_gauged(rng, K, max_degree=1, factors=2, nterms=2):
    """``(T, A, C)`` with ``T A = C K`` for random gauges ``A``, ``C``."""
    M = K.matrix() if isinstance(K, CanonicalForm) else K
    t = M.trunc
    A = random_u_gauge(rng, t, max_degree, factors, nterms)
    C = random_v_gauge(rng, t, max_degree, factors, nterms)
    T = TransitionMatrix2.from_matrix(C @ M @ A.inverse())
    return T, A, C


def random_z_unimodular(rng, max_degree=2, factors=2):
    """Polynomial in ``z`` with constant nonzero determinant (u-free)."""
    return random_u_gauge(rng, 0, max_degree, factors)


def random_xi_unimodular(rng, max_degree=2, factors=2):
    """Polynomial in ``1/z`` with constant nonzero determinant (u-free)."""
    return random_v_gauge(rng, 0, max_degree, factors)
