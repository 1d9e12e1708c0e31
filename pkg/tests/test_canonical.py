import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blowup_bundles.algebra import BiLaurentPoly, GaussianRational, Matrix2, TransitionMatrix2
from blowup_bundles.algebra.laurent import is_U_holomorphic, is_V_holomorphic
from blowup_bundles.canonical import (CanonicalForm, HasDivisorLevelTerms, TruncationTooLow,
                                      canonical_window, canonicalize, monomial_reduce,
                                      window_size)
from blowup_bundles.equivalence import are_equivalent, first_neighborhood_class
from blowup_bundles.sampling import random_canonical, random_gauged
from oracles import brute_force_equivalent, matrix_to_sympy, truncate, window_oracle


def poly(terms, trunc=2):
    return BiLaurentPoly(terms, trunc)


def check_sound(T, K, G):
    assert T @ G.A == G.C @ K.matrix()
    assert G.is_valid()
    assert set(K.coeffs) <= set(canonical_window(K.j))
    M = K.matrix()
    assert M.a == BiLaurentPoly.monomial(K.j, 0, 1, K.trunc)
    assert M.d == BiLaurentPoly.monomial(-K.j, 0, 1, K.trunc)
    assert M.c.is_zero()


# window

def test_window_small_cases():
    assert canonical_window(0) == () and canonical_window(1) == ()
    assert set(canonical_window(2)) == {(1, 0), (1, 1), (2, 1)}


def test_window_j3():
    w = canonical_window(3)
    assert len(w) == 10
    assert [l for i, l in w if i == 1] == [-1, 0, 1, 2]
    assert [l for i, l in w if i == 2] == [0, 1, 2]
    assert [l for i, l in w if i == 3] == [1, 2]
    assert [l for i, l in w if i == 4] == [2]


@pytest.mark.parametrize("j", range(0, 9))
def test_window_matches_enumeration(j):
    assert set(canonical_window(j)) == window_oracle(j)
    assert len(canonical_window(j)) == window_size(j)
    if j >= 1:
        assert window_size(j) == (2 * j - 2) * (2 * j - 1) // 2


# canonical form type

def test_canonical_form_rejects_outside_window():
    with pytest.raises(ValueError):
        CanonicalForm(2, {(1, 2): 1})


def test_canonical_form_default_trunc_and_truncation_check():
    assert CanonicalForm(3, {}).trunc == 4
    with pytest.raises(TruncationTooLow):
        CanonicalForm(3, {}, trunc=3)


def test_canonical_form_drops_zeros_and_expands():
    K = CanonicalForm(2, {(1, 1): 2, (2, 1): 0})
    assert K.coeffs == {(1, 1): 2}
    assert K.matrix().b == poly({(1, 1): 2})
    assert isinstance(K.matrix(), TransitionMatrix2)


# monomial_reduce

def test_monomial_reduce_examples():
    a, b, r = monomial_reduce(poly({(5, 1): 1}), 2)
    assert a == poly({(3, 1): 1}) and b.is_zero() and r.is_zero()

    a, b, r = monomial_reduce(poly({(1, 1): 1}), 2)
    assert r == poly({(1, 1): 1}) and a.is_zero() and b.is_zero()

    a, b, r = monomial_reduce(poly({(-1, 2): 1}), 2)
    assert b == poly({(1, 2): 1}) and is_V_holomorphic(b)
    assert a.is_zero() and r.is_zero()


def test_monomial_reduce_rejects_divisor_terms():
    with pytest.raises(HasDivisorLevelTerms):
        monomial_reduce(poly({(0, 0): 1}), 2)


@st.composite
def positive_order_polys(draw, trunc=6):
    keys = draw(st.lists(st.tuples(st.integers(-8, 8), st.integers(1, trunc)),
                         max_size=8, unique=True))
    return BiLaurentPoly({k: draw(st.integers(-5, 5)) for k in keys}, trunc)


@given(positive_order_polys(), st.integers(0, 4))
def test_monomial_reduce_decomposition(q, j):
    a, b, r = monomial_reduce(q, j)
    zj = BiLaurentPoly.monomial(j, 0, 1, q.trunc)
    zmj = BiLaurentPoly.monomial(-j, 0, 1, q.trunc)
    assert zj * a + zmj * b + r == q
    assert is_U_holomorphic(a) and is_V_holomorphic(b)
    window = set(canonical_window(j))
    assert all((i, l) in window for (l, i) in r.terms)


# canonicalize

def test_canonicalize_split_bundle():
    T = CanonicalForm(2, {}).matrix()
    K, G = canonicalize(T)
    assert K.j == 2 and K.coeffs == {}
    assert G.A == Matrix2.identity(2) and G.C == Matrix2.identity(2)


def test_canonicalize_removes_high_z_power():
    z2 = poly({(2, 0): 1})
    T = TransitionMatrix2(z2, poly({(1, 1): 1, (5, 1): 1}), 0, poly({(-2, 0): 1}))
    K, G = canonicalize(T)
    assert K.j == 2 and K.coeffs == {(1, 1): 1}
    check_sound(T, K, G)


def test_canonicalize_matches_sympy_identity():
    rng = random.Random(11)
    K0 = random_canonical(rng, 2)
    T, _, _ = random_gauged(rng, K0)
    K, G = canonicalize(T)
    lhs = matrix_to_sympy(T) * matrix_to_sympy(G.A)
    rhs = matrix_to_sympy(G.C) * matrix_to_sympy(K.matrix())
    assert all(truncate(x - y, 2) == 0 for x, y in zip(lhs, rhs))


def test_canonicalize_too_low_truncation():
    T = Matrix2.split(3, 2)
    with pytest.raises(TruncationTooLow):
        canonicalize(T)


def test_canonicalize_rejects_bad_determinant():
    from blowup_bundles.algebra import InvalidTransitionMatrix
    with pytest.raises(InvalidTransitionMatrix):
        canonicalize(Matrix2.diag(poly({(1, 0): 1}), 1))


@pytest.mark.parametrize("j", [2, 3])
@pytest.mark.parametrize("seed", range(4))
def test_canonicalize_roundtrip(j, seed):
    rng = random.Random(1000 * j + seed)
    K0 = random_canonical(rng, j)
    T, _, _ = random_gauged(rng, K0)
    K, G = canonicalize(T)
    assert K.j == j
    check_sound(T, K, G)
    assert are_equivalent(K, K0).equivalent
    # first-neighborhood data is recovered up to a nonzero scalar
    assert first_neighborhood_class(K) == first_neighborhood_class(K0)


@pytest.mark.parametrize("seed", range(3))
def test_canonicalize_roundtrip_brute_force(seed):
    rng = random.Random(seed)
    K0 = random_canonical(rng, 2)
    T, _, _ = random_gauged(rng, K0, max_degree=1, factors=1, nterms=1)
    K, _ = canonicalize(T)
    assert brute_force_equivalent(K.matrix(), K0.matrix(), 2, 5)


@given(st.integers(0, 4), st.integers(0, 10**6))
def test_idempotence(j, seed):
    rng = random.Random(seed)
    K0 = random_canonical(rng, j, depth=1 if j >= 2 else None)
    K, G = canonicalize(K0.matrix())
    assert K == K0
    assert G.A == Matrix2.identity(K0.trunc) and G.C == Matrix2.identity(K0.trunc)
    K2, _ = canonicalize(K.matrix())
    assert K2 == K


@pytest.mark.parametrize("j", [0, 1])
def test_low_j_collapses_to_split(j):
    rng = random.Random(j)
    T, _, _ = random_gauged(rng, Matrix2.split(j, 2))
    K, G = canonicalize(T)
    assert K.j == j and K.coeffs == {}
    check_sound(T, K, G)


@pytest.mark.parametrize("j", [2, 3])
def test_higher_truncation_residual_vanishes(j):
    rng = random.Random(7 + j)
    K0 = random_canonical(rng, j, trunc=2 * j + 1)
    T, _, _ = random_gauged(rng, K0)
    K, G = canonicalize(T)
    assert K.trunc == 2 * j + 1
    check_sound(T, K, G)
    assert all(i <= 2 * j - 2 for (i, _) in K.coeffs)


def test_complex_coefficients():
    rng = random.Random(3)
    K0 = random_canonical(rng, 2, complex_rate=1.0)
    assert any(not c.is_real() for c in K0.coeffs.values())
    T, _, _ = random_gauged(rng, K0)
    K, G = canonicalize(T)
    check_sound(T, K, G)
    assert first_neighborhood_class(K) == first_neighborhood_class(K0)


def test_gaussian_scalars_in_form():
    K = CanonicalForm(2, {(1, 0): GaussianRational(1, 1)})
    assert canonicalize(K.matrix())[0] == K
