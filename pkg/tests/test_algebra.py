from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from blowup_bundles.algebra import (ONE, ZERO, BiLaurentPoly, GaussianRational, I,
                                    InvalidTransitionMatrix, Matrix2, NonUnitDeterminant,
                                    NotVHolomorphic, TransitionMatrix2, add, from_V_chart,
                                    is_U_holomorphic, is_V_holomorphic, mat_det, mat_inverse,
                                    mat_mul, mul, restrict_to_exceptional, to_V_chart)
from conftest import polys, scalars, unit_matrices
from oracles import from_sympy, matrix_from_sympy, inverse_sympy, matrix_to_sympy, to_sympy, truncate


def mono(l, i, c=1, trunc=3):
    return BiLaurentPoly({(l, i): c}, trunc)


# scalars

def test_scalar_reduced_representation():
    c = GaussianRational(Fraction(6, -4), Fraction(2, 8))
    assert c.as_pairs() == ([-3, 2], [1, 4])


def test_scalar_field_operations():
    a = GaussianRational(1, 2)
    b = GaussianRational(Fraction(1, 3), -1)
    assert a * a.inverse() == ONE
    assert (a + b) - b == a
    assert I * I == -1
    assert a / b * b == a


def test_scalar_rejects_floats():
    with pytest.raises(TypeError):
        GaussianRational(0.5)
    with pytest.raises(TypeError):
        BiLaurentPoly({(0, 0): 1.5}, 0)


def test_scalar_zero_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


@given(scalars(), scalars())
def test_scalar_matches_sympy(a, b):
    from oracles import from_sympy_scalar, to_sympy_scalar
    assert from_sympy_scalar(sp.expand(to_sympy_scalar(a) * to_sympy_scalar(b))) == a * b
    assert from_sympy_scalar(to_sympy_scalar(a) + to_sympy_scalar(b)) == a + b


# polynomials

def test_add_examples():
    assert add(mono(1, 1), mono(1, 1, -1)) == 0
    s = add(mono(2, 1), mono(1, 1))
    assert s.terms == {(2, 1): 1, (1, 1): 1}
    t = add(mono(1, 1, 1, 3), mono(0, 4, 7, 4))
    assert t == mono(1, 1) and t.trunc == 3


def test_mul_examples():
    assert mul(mono(1, 0), mono(-1, 0)) == 1
    zpu = BiLaurentPoly({(1, 0): 1, (0, 1): 1}, 3)
    zmu = BiLaurentPoly({(1, 0): 1, (0, 1): -1}, 3)
    assert mul(zpu, zmu) == BiLaurentPoly({(2, 0): 1, (0, 2): -1}, 3)
    sq = mul(mono(0, 1, 1, 1), mono(0, 1, 1, 1))
    assert sq.is_zero() and sq.trunc == 1


def test_zero_coefficients_are_dropped():
    p = BiLaurentPoly({(1, 0): 0, (2, 1): 3}, 2)
    assert p.terms == {(2, 1): 3}


def test_terms_beyond_trunc_are_dropped():
    assert BiLaurentPoly({(0, 5): 1}, 2).is_zero()


def test_negative_u_exponent_rejected():
    with pytest.raises(ValueError):
        BiLaurentPoly({(0, -1): 1}, 2)


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == 0


@given(polys(trunc=2), polys(trunc=3))
def test_mul_matches_sympy(a, b):
    expected = from_sympy(truncate(to_sympy(a) * to_sympy(b), 2), 2)
    got = a * b
    assert got == expected and got.trunc == 2


@given(polys(), polys())
def test_restriction_is_ring_morphism(a, b):
    r = restrict_to_exceptional
    assert r(a * b) == r(a) * r(b)
    assert r(a + b) == r(a) + r(b)


def test_restrict_examples():
    assert restrict_to_exceptional(BiLaurentPoly({(2, 0): 1, (1, 1): 1}, 2)) == mono(2, 0)
    assert restrict_to_exceptional(BiLaurentPoly({(1, 1): 1, (1, 2): 1}, 2)) == 0
    assert restrict_to_exceptional(BiLaurentPoly.const(5, 2)) == 5


def test_holomorphy_examples():
    assert is_U_holomorphic(mono(3, 2))
    assert not is_U_holomorphic(mono(-1, 1))
    assert is_U_holomorphic(BiLaurentPoly.zero(2))
    assert is_V_holomorphic(mono(-1, 0))
    assert is_V_holomorphic(mono(1, 1))
    assert not is_V_holomorphic(mono(1, 0))


def test_to_V_chart_examples():
    assert to_V_chart(mono(2, 3)) == {(1, 3): 1}
    assert to_V_chart(mono(-1, 1)) == {(2, 1): 1}
    with pytest.raises(NotVHolomorphic):
        to_V_chart(mono(2, 1))


@given(polys(trunc=3))
def test_to_V_chart_roundtrip(a):
    a = BiLaurentPoly({k: c for k, c in a.terms.items() if k[0] <= k[1]}, a.trunc)
    assert is_V_holomorphic(a)
    assert from_V_chart(to_V_chart(a), a.trunc) == a
    # injective: distinct monomials map to distinct monomials
    assert len(to_V_chart(a)) == len(a)


def test_invert_geometric_series():
    p = BiLaurentPoly({(0, 0): 2, (3, 1): 1, (-1, 2): 5}, 3)
    assert p * p.invert() == 1


# matrices

def test_mat_inverse_examples():
    assert mat_inverse(Matrix2.identity(2)) == Matrix2.identity(2)
    assert mat_inverse(Matrix2.split(1, 2)) == Matrix2.diag(mono(-1, 0), mono(1, 0))
    U = Matrix2(1, mono(0, 1), 0, 1, 2)
    assert mat_inverse(U) == Matrix2(1, mono(0, 1, -1), 0, 1, 2)


def test_mat_inverse_rejects_non_unit():
    M = Matrix2(BiLaurentPoly({(0, 0): 1, (1, 0): 1}, 1), 0, 0, 1, 1)
    with pytest.raises(NonUnitDeterminant):
        mat_inverse(M)


@given(unit_matrices())
def test_inverse_is_two_sided(M):
    Id = Matrix2.identity(M.trunc)
    assert mat_mul(M, mat_inverse(M)) == Id
    assert mat_mul(mat_inverse(M), M) == Id


@given(unit_matrices())
def test_inverse_matches_sympy(M):
    assert mat_inverse(M) == matrix_from_sympy(inverse_sympy(matrix_to_sympy(M), 2), 2)


@given(unit_matrices(), unit_matrices())
def test_det_multiplicative(M, N):
    assert mat_det(M @ N) == mat_det(M) * mat_det(N)


def test_uniform_trunc():
    M = Matrix2(mono(0, 3, 1, 3), mono(0, 1, 1, 1), 0, 1)
    assert M.trunc == 1 and all(x.trunc == 1 for x in M)


def test_transition_matrix_validation():
    TransitionMatrix2(mono(2, 0, 1, 2), mono(1, 1, 1, 2), 0, mono(-2, 0, 1, 2))
    with pytest.raises(InvalidTransitionMatrix):
        TransitionMatrix2(mono(1, 0, 1, 2), 0, 0, 1)
    with pytest.raises(InvalidTransitionMatrix):
        TransitionMatrix2(0, 0, 0, 0, 2)


@given(st.integers(-4, 4), st.integers(0, 3))
def test_monomial_accessors(l, i):
    p = BiLaurentPoly.monomial(l, i, 3, 3)
    assert p.coeff(l, i) == 3 and p.z_range() == (l, l)
