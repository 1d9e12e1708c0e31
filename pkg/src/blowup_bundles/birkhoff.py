"""Splitting type and Birkhoff factorization on the exceptional divisor.

A 2x2 Laurent matrix ``M(z)`` with constant nonzero determinant is the
transition matrix of a rank-2 bundle on P^1 with zero degree. Every such matrix factors as
``M = A diag(z**j, z**-j) B`` with ``A`` polynomial in ``1/z`` and
``B`` polynomial in ``z`` (both with constant determinant).  The sides follow the
U -> V gauge action ``M -> C^-1 M A``: V-chart factors act on the left, U-chart
factors on the right.

Two independent routes compute ``j``:

* :func:`splitting_type` counts sections of the twists ``E(-k)``.  A section is a
  polynomial vector ``s(z)`` such that ``z**k M s`` is polynomial in ``1/z``.
* :func:`grothendieck_split` works with ``M^-1`` instead: it searches for the
  largest ``k`` admitting a vector ``a(1/z)`` with ``z**-k M^-1 a`` polynomial
  in ``z``, and builds the factors from that column.

Both reduce to small exact linear systems.  Only the ``u = 0`` part of the
entries is used.
"""

from dataclasses import dataclass, field

from .algebra import BiLaurentPoly, Matrix2
from .algebra.scalars import ONE, ZERO
from .linalg import RHS, RowReducer, nullspace

__all__ = [
    "NonConstantDeterminant",
    "SplitFactorization",
    "section_dimension",
    "splitting_type",
    "grothendieck_split",
]


class NonConstantDeterminant(ValueError):
    """The determinant at ``u = 0`` is not a nonzero constant."""


def _entries(M):
    """Entries of the u = 0 restriction as dicts ``l -> coeff``."""
    return [[{l: c for (l, i), c in M[r, s].terms.items() if i == 0} for s in range(2)]
            for r in range(2)]


def _check_det(M):
    d = (M.a * M.d - M.b * M.c).u_part(0)
    if d.is_zero() or len(d) != 1 or d.coeff(0, 0) == 0:
        raise NonConstantDeterminant(f"det = {d} is not a nonzero constant")
    return d.coeff(0, 0)


def _degree_span(E):
    ls = [l for row in E for e in row for l in e]
    return min(ls), max(ls)


def section_dimension(M, k):
    """``h0(E(-k))`` for the bundle on P^1 with transition matrix ``M``.

    Sections are pairs of polynomials ``s(z)`` with ``z**k M s`` free of
    positive powers of ``z``.  Any such ``s`` has degree at most
    ``max_deg(M) - k`` because ``s = z**-k M^-1 t`` with ``t`` polynomial in
    ``1/z`` and ``M^-1`` an adjugate over a constant.
    """
    _check_det(M)
    E = _entries(M)
    _, hi = _degree_span(E)
    D = hi - k
    if D < 0:
        return 0
    ncols = 2 * (D + 1)
    rows = {}
    for r in range(2):
        for c in range(2):
            for l, coef in E[r][c].items():
                for n in range(D + 1):
                    e = l + k + n
                    if e > 0:
                        rows.setdefault((r, e), {})
                        col = c * (D + 1) + n
                        rows[(r, e)][col] = rows[(r, e)].get(col, ZERO) + coef
    return len(nullspace(rows.values(), ncols))


def splitting_type(M):
    """The ``j >= 0`` with ``E|_l = O(j) + O(-j)``, via section counting.

    ``j`` is the largest ``k`` with ``h0(E(-k)) > 0``.
    """
    _check_det(M)
    _, hi = _degree_span(_entries(M))
    j = 0
    for k in range(0, max(hi, 0) + 1):
        if section_dimension(M, k) > 0:
            j = k
        else:
            break
    return j


@dataclass(frozen=True)
class SplitFactorization:
    """``M = A @ diag(z**j, z**-j) @ B``.

    ``bounds`` records the a priori degree bounds used: ``deg_(1/z) A <= A_xi_degree``
    and ``deg_z B <= B_z_degree``.
    """

    j: int
    A: Matrix2
    B: Matrix2
    bounds: dict = field(default_factory=dict, compare=False)

    @property
    def middle(self):
        return Matrix2.split(self.j)

    def recompose(self):
        return self.A @ self.middle @ self.B


def _xi_system(E, k, D):
    """Rows for ``z**-k N a`` having no negative powers, ``a`` of degree ``D`` in ``1/z``."""
    rows = {}
    for r in range(2):
        for c in range(2):
            for l, coef in E[r][c].items():
                for n in range(D + 1):
                    e = l - k - n
                    if e < 0:
                        rows.setdefault((r, e), {})
                        col = c * (D + 1) + n
                        rows[(r, e)][col] = rows[(r, e)].get(col, ZERO) + coef
    return rows


def _xi_polys(v, D):
    out = [{}, {}]
    for col, c in v.items():
        comp, n = divmod(col, D + 1)
        out[comp][(-n, 0)] = c
    return [BiLaurentPoly(p, 0) for p in out]


def grothendieck_split(M):
    """Factor ``M = A diag(z**j, z**-j) B`` exactly.

    ``A`` is polynomial in ``1/z`` and ``B`` polynomial in ``z``, both with
    constant nonzero determinant.  Raises :class:`NonConstantDeterminant`.
    """
    det = _check_det(M)
    M0 = M.u_part(0)
    E = _entries(M0)
    lo, hi = _degree_span(E)

    if lo <= 0 and M0 == Matrix2.split(-lo):
        j = -lo
        return SplitFactorization(j, Matrix2.identity(), Matrix2.identity(),
                                  {"A_xi_degree": j - lo, "B_z_degree": hi + j})

    inv_det = det.inverse()
    N = Matrix2(M0.d.scale(inv_det), (-M0.b).scale(inv_det),
                (-M0.c).scale(inv_det), M0.a.scale(inv_det), 0)
    EN = _entries(N)

    # Writing M B^-1 = A diag(z**j, z**-j), the columns a1, a2 of A satisfy
    # z**j N a1 = b1 and z**-j N a2 = b2 with b1, b2 polynomial in z.  The
    # largest twist k with a solution a(1/z) of z**-k N a = poly(z) is j, and
    # for j > 0 the solution a2 is unique up to scale.  Any solution has
    # degree <= -k - lo in 1/z since a = z**k M b.
    j = None
    for k in range(max(-lo, 0), -1, -1):
        D2 = max(-k - lo, 0)
        basis = nullspace(_xi_system(EN, k, D2).values(), 2 * (D2 + 1))
        if basis:
            j = k
            break
    if j is None:
        raise RuntimeError("no degree-0 column found; determinant check should have failed")

    a2 = basis[0]
    lead = a2[min(a2)]
    a2 = {col: c / lead for col, c in a2.items()}
    a2_polys = _xi_polys(a2, D2)

    # a1: z**j N a1 polynomial in z and det[a1 a2] = 1
    D1 = max(j - lo, 0)
    red = RowReducer(2 * (D1 + 1))
    for row in _xi_system(EN, -j, D1).values():
        red.add_row(row)
    a2_1 = {-l: c for (l, _), c in a2_polys[0].terms.items()}
    a2_2 = {-l: c for (l, _), c in a2_polys[1].terms.items()}
    for m in range(0, D1 + D2 + 1):
        # coefficient of xi**m in a1_1 * a2_2 - a1_2 * a2_1
        row = {}
        for n in range(D1 + 1):
            c2 = a2_2.get(m - n)
            if c2:
                row[n] = row.get(n, ZERO) + c2
            c1 = a2_1.get(m - n)
            if c1:
                col = (D1 + 1) + n
                row[col] = row.get(col, ZERO) - c1
        row[RHS] = ONE if m == 0 else ZERO
        red.add_row(row)
    a1 = red.particular_solution()
    if a1 is None:
        raise RuntimeError("could not complete the column to a unimodular frame")
    a1_polys = _xi_polys(a1, D1)

    zj = BiLaurentPoly.monomial(j, 0, 1, 0)
    zmj = BiLaurentPoly.monomial(-j, 0, 1, 0)
    b1 = [(N[r, 0] * a1_polys[0] + N[r, 1] * a1_polys[1]) * zj for r in range(2)]
    b2 = [(N[r, 0] * a2_polys[0] + N[r, 1] * a2_polys[1]) * zmj for r in range(2)]
    A = Matrix2(a1_polys[0], a2_polys[0], a1_polys[1], a2_polys[1], 0)
    # [b1 b2] has determinant 1/det(M); B is its inverse
    B = Matrix2(b2[1], -b2[0], -b1[1], b1[0], 0).scale(det)
    return SplitFactorization(j, A, B, {"A_xi_degree": j - lo, "B_z_degree": hi + j})
