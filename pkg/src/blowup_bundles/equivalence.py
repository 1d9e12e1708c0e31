"""Deciding holomorphic equivalence of transition matrices.

Two bundles with transition matrices ``T`` and ``T'`` are isomorphic on the
``N``-th formal neighborhood iff there are ``A`` (holomorphic, invertible on U)
and ``C`` (holomorphic, invertible on V) with ``T A = C T'`` modulo
``u**(N+1)``.  Writing ``C = T A T'^-1`` the problem becomes linear in ``A``:
the coefficients of ``A`` must kill every non-V-holomorphic term of
``T A T'^-1``.

The degree of ``A`` needs no guessing.  From ``A = T^-1 C T'`` with ``C``
V-holomorphic (z-degree at most ``b`` at order ``u**b``), the ``u**i`` part of
any solution ``A`` has z-degree at most::

    max over a + b + c = i of  deg(T^-1 at u**a) + b + deg(T' at u**c)

so the finite linear system captures every solution.  On the solution space
``det A`` at ``u = 0`` is a constant (both determinants are constant), equal
to the determinant of the ``z**0 u**0`` coefficient matrix of ``A``: a
quadratic form ``Q``.  ``Q`` vanishes identically on the span of a basis
``v_1..v_m`` iff ``Q(v_i) = 0`` and ``Q(v_i + v_k) = 0`` for all pairs, which
is an exact finite test.
"""

from dataclasses import dataclass, field

from .algebra import BiLaurentPoly, Matrix2, TransitionMatrix2
from .algebra.matrix import is_constant_unit
from .algebra.scalars import ZERO
from .canonical import CanonicalForm
from .linalg import nullspace

__all__ = [
    "DegreeBoundExceeded",
    "OrderTooLarge",
    "SplittingTypeMismatch",
    "EquivalenceWitness",
    "EquivalenceVerdict",
    "are_equivalent",
    "verify_witness",
    "compose_witnesses",
    "witness_degree_bounds",
    "first_neighborhood_class",
    "equivalent_first_neighborhood",
    "projectivize",
]


class OrderTooLarge(ValueError):
    """Requested order exceeds the truncation of an input."""


class DegreeBoundExceeded(RuntimeError):
    """The a priori witness degree exceeds the configured cap."""


class SplittingTypeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class EquivalenceWitness:
    """``T A = C T'`` modulo ``u**(order+1)``."""

    A: Matrix2
    C: Matrix2
    order: int


@dataclass(frozen=True)
class EquivalenceVerdict:
    equivalent: bool
    order: int
    witness: EquivalenceWitness = None
    bounds: dict = field(default_factory=dict, compare=False)

    def __bool__(self):
        return self.equivalent


def _as_transition(T):
    if isinstance(T, CanonicalForm):
        return T.matrix()
    return TransitionMatrix2.from_matrix(T)


def _max_deg_at(M, i):
    degs = [r[1] for x in M if (r := x.z_range(i)) is not None]
    return max(degs) if degs else None


def witness_degree_bounds(T, Tp, order):
    """Per-order upper bound on the z-degree of ``A`` in any solution of ``T A = C T'``.

    Entry ``i`` is ``None`` when ``A`` must vanish at order ``u**i``.
    """
    Tinv = T.with_trunc(order).inverse()
    Tp = Tp.with_trunc(order)
    inv_deg = [_max_deg_at(Tinv, a) for a in range(order + 1)]
    tp_deg = [_max_deg_at(Tp, c) for c in range(order + 1)]
    bounds = []
    for i in range(order + 1):
        best = None
        for a in range(i + 1):
            if inv_deg[a] is None:
                continue
            for c in range(i - a + 1):
                if tp_deg[c] is None:
                    continue
                d = inv_deg[a] + (i - a - c) + tp_deg[c]
                best = d if best is None else max(best, d)
        bounds.append(best if best is not None and best >= 0 else None)
    return bounds


def _quadratic(v, const_cols):
    a, b, c, d = (v.get(k, ZERO) for k in const_cols)
    return a * d - b * c


def _vec_add(x, y):
    out = dict(x)
    for k, v in y.items():
        s = out.get(k, ZERO) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def are_equivalent(T, Tp, order=None, max_z_degree=None):
    """Decide whether ``T`` and ``Tp`` define isomorphic bundles modulo ``u**(order+1)``.

    ``order`` defaults to the smaller truncation.  ``max_z_degree`` caps the
    z-degree of the witness ``A``; if the a priori bound exceeds it,
    :class:`DegreeBoundExceeded` is raised instead of answering.
    """
    T = _as_transition(T)
    Tp = _as_transition(Tp)
    top = min(T.trunc, Tp.trunc)
    if order is None:
        order = top
    if order < 0 or order > top:
        raise OrderTooLarge(f"order {order} exceeds available truncation {top}")
    T = T.with_trunc(order)
    Tp = Tp.with_trunc(order)
    Tp_inv = Tp.inverse()

    deg = witness_degree_bounds(T, Tp, order)
    used = max((d for d in deg if d is not None), default=-1)
    if max_z_degree is not None and used > max_z_degree:
        raise DegreeBoundExceeded(
            f"witness z-degree bound {used} exceeds the cap {max_z_degree}")

    # highest orders and degrees first: pivoting on them keeps fill-in low
    unknowns = [(r, s, l, i)
                for i in reversed(range(order + 1)) if deg[i] is not None
                for r in range(2) for s in range(2)
                for l in reversed(range(deg[i] + 1))]
    index = {key: n for n, key in enumerate(unknowns)}

    # T E_rs T'^-1 has (p, q) entry T[p, r] * T'^-1[s, q]
    prods = {(r, s, p, q): T[p, r] * Tp_inv[s, q]
             for r in range(2) for s in range(2) for p in range(2) for q in range(2)}
    rows = {}
    for (r, s, l, i), col in index.items():
        for p in range(2):
            for q in range(2):
                for (l2, i2), c in prods[(r, s, p, q)].terms.items():
                    lt, it = l2 + l, i2 + i
                    if it > order or lt <= it:
                        continue
                    row = rows.setdefault((p, q, lt, it), {})
                    row[col] = row.get(col, ZERO) + c
    basis = nullspace(rows.values(), len(unknowns))

    bounds = {"A_z_degree_by_order": deg, "unknowns": len(unknowns),
              "solution_dim": len(basis)}
    const_cols = [index.get((r, s, 0, 0)) for r in range(2) for s in range(2)]
    if not basis or any(c is None for c in const_cols):
        return EquivalenceVerdict(False, order, None, bounds)

    chosen = None
    for v in basis:
        if _quadratic(v, const_cols):
            chosen = v
            break
    if chosen is None:
        for n, v in enumerate(basis):
            for w in basis[n + 1:]:
                s = _vec_add(v, w)
                if _quadratic(s, const_cols):
                    chosen = s
                    break
            if chosen is not None:
                break
    if chosen is None:
        return EquivalenceVerdict(False, order, None, bounds)

    entries = [{}, {}, {}, {}]
    for col, c in chosen.items():
        r, s, l, i = unknowns[col]
        entries[2 * r + s][(l, i)] = c
    A = Matrix2(*(BiLaurentPoly(e, order) for e in entries), trunc=order)
    C = T @ A @ Tp_inv
    witness = EquivalenceWitness(A, C, order)
    if not verify_witness(T, Tp, witness):
        raise RuntimeError("solver produced an invalid witness")
    return EquivalenceVerdict(True, order, witness, bounds)


def verify_witness(T, Tp, witness):
    """Independent check of ``T A = C T'``, holomorphy and unit determinants."""
    n = witness.order
    T = _as_transition(T).with_trunc(n)
    Tp = _as_transition(Tp).with_trunc(n)
    A = witness.A.with_trunc(n)
    C = witness.C.with_trunc(n)
    return (A.is_U_holomorphic() and C.is_V_holomorphic()
            and is_constant_unit(A.det()) and is_constant_unit(C.det())
            and T @ A == C @ Tp)


def compose_witnesses(w1, w2):
    """From ``T A1 = C1 T'`` and ``T' A2 = C2 T''`` get ``T (A1 A2) = (C1 C2) T''``."""
    n = min(w1.order, w2.order)
    return EquivalenceWitness((w1.A @ w2.A).with_trunc(n), (w1.C @ w2.C).with_trunc(n), n)


def projectivize(vec):
    """Scale so that the first nonzero entry is 1; ``None`` for the zero vector."""
    vec = list(vec)
    for x in vec:
        if x:
            inv = x.inverse()
            return tuple(y * inv for y in vec)
    return None


def first_neighborhood_class(K):
    """Projective class of ``(p_1l)`` for ``l = 2-j .. j-1``, or ``None`` if it vanishes."""
    if K.j < 1:
        raise ValueError("first-neighborhood data needs j >= 1")
    return projectivize(K.level(1))


def equivalent_first_neighborhood(K, Kp):
    """Isomorphism on the first formal neighborhood: ``p'_1 = lambda p_1``, ``lambda != 0``."""
    if K.j != Kp.j:
        raise SplittingTypeMismatch(f"j = {K.j} vs j = {Kp.j}")
    return first_neighborhood_class(K) == first_neighborhood_class(Kp)
