import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from blowup_bundles.algebra import GaussianRational
from blowup_bundles.linalg import RHS, nullspace, solve
from conftest import scalars
from oracles import to_sympy_scalar


@st.composite
def systems(draw):
    nrows = draw(st.integers(1, 5))
    ncols = draw(st.integers(1, 6))
    rows = []
    for _ in range(nrows):
        cols = draw(st.lists(st.integers(0, ncols - 1), max_size=ncols, unique=True))
        rows.append({c: draw(scalars()) for c in cols})
    return rows, ncols


def dense(rows, ncols):
    return sp.Matrix([[to_sympy_scalar(r.get(c, GaussianRational(0))) for c in range(ncols)]
                      for r in rows])


def apply(row, x):
    return sum((row[c] * x.get(c, 0) for c in row if c != RHS), GaussianRational(0))


@given(systems())
def test_nullspace_dimension_matches_sympy(sysm):
    rows, ncols = sysm
    basis = nullspace(rows, ncols)
    assert len(basis) == ncols - dense(rows, ncols).rank()
    for v in basis:
        assert all(apply(r, v) == 0 for r in rows)
    if basis:
        assert dense(basis, ncols).rank() == len(basis)


@given(systems(), st.lists(scalars(), min_size=6, max_size=6))
def test_solve_consistent_system(sysm, x0):
    rows, ncols = sysm
    x = {c: x0[c] for c in range(ncols)}
    rows = [{**r, RHS: apply(r, x)} for r in rows]
    part, basis = solve(rows, ncols)
    assert part is not None
    assert all(apply(r, part) == r[RHS] for r in rows)


def test_inconsistent_system():
    one = GaussianRational(1)
    rows = [{0: one, RHS: one}, {0: one, RHS: GaussianRational(2)}]
    part, _ = solve(rows, 1)
    assert part is None


def test_complex_entries_stay_exact():
    i = GaussianRational(0, 1)
    rows = [{0: i, 1: GaussianRational(1)}]
    (v,) = nullspace(rows, 2)
    assert apply(rows[0], v) == 0
    assert all(isinstance(c, GaussianRational) for c in v.values())
