"""Reduction of transition matrices to the upper-triangular canonical form.

Every valid transition matrix ``T`` (U -> V, constant determinant at ``u = 0``)
is equivalent to ``[[z**j, p], [0, z**-j]]`` where ``p`` only has monomials
``z**l u**i`` in the window ``1 <= i <= 2j-2``, ``i-j+1 <= l <= j-1``.

The reduction keeps a gauge pair ``(A, C)`` with ``T A = C K``: ``A`` is
holomorphic on U (``l >= 0``), ``C`` on V (``l <= i``).  First the ``u = 0``
restriction is Birkhoff-factored; then each order ``u**k`` is cleared by a
correction ``A_k = I + u**k a``, ``C_k = I + u**k c`` whose entries come from
a per-monomial split of the order-``k`` error.
"""

from dataclasses import dataclass, field

from .algebra import BiLaurentPoly, Matrix2, TransitionMatrix2
from .algebra.matrix import is_constant_unit
from .algebra.scalars import ZERO, as_scalar
from .birkhoff import grothendieck_split

__all__ = [
    "CanonicalForm",
    "GaugePair",
    "HasDivisorLevelTerms",
    "TruncationTooLow",
    "canonical_window",
    "window_size",
    "monomial_reduce",
    "canonicalize",
]


class HasDivisorLevelTerms(ValueError):
    """A polynomial passed to :func:`monomial_reduce` has ``u**0`` terms."""


class TruncationTooLow(ValueError):
    """The truncation order is below ``2j - 2``."""


def canonical_window(j):
    """Index pairs ``(i, l)`` of the free coefficients, sorted by ``i`` then ``l``."""
    return tuple((i, l) for i in range(1, 2 * j - 1) for l in range(i - j + 1, j))


def window_size(j):
    return (2 * j - 2) * (2 * j - 1) // 2 if j >= 1 else 0


@dataclass(frozen=True)
class CanonicalForm:
    """Splitting type ``j`` plus the window coefficients ``(i, l) -> p_il``.

    Zero coefficients are dropped.  ``trunc`` defaults to ``max(2j - 2, 0)``.
    """

    j: int
    coeffs: dict = field(default_factory=dict)
    trunc: int = None

    def __post_init__(self):
        if self.j < 0:
            raise ValueError("j must be non-negative")
        trunc = max(2 * self.j - 2, 0) if self.trunc is None else self.trunc
        if trunc < 2 * self.j - 2:
            raise TruncationTooLow(f"trunc {trunc} < 2j-2 = {2 * self.j - 2}")
        window = set(canonical_window(self.j))
        clean = {}
        for (i, l), c in dict(self.coeffs).items():
            if (i, l) not in window:
                raise ValueError(f"index {(i, l)} is outside the window for j = {self.j}")
            c = as_scalar(c)
            if c:
                clean[(int(i), int(l))] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))
        object.__setattr__(self, "trunc", trunc)

    def p(self):
        return BiLaurentPoly({(l, i): c for (i, l), c in self.coeffs.items()}, self.trunc)

    def matrix(self):
        """The transition matrix ``[[z**j, p], [0, z**-j]]``."""
        t = self.trunc
        return TransitionMatrix2(BiLaurentPoly.monomial(self.j, 0, 1, t), self.p(),
                                 0, BiLaurentPoly.monomial(-self.j, 0, 1, t), t)

    def level(self, i):
        """Coefficients ``p_il`` at ``u``-degree ``i`` over the whole window row."""
        return [self.coeffs.get((i, l), ZERO)
                for l in range(i - self.j + 1, self.j)]

    def __eq__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.j == other.j and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.j, frozenset(self.coeffs.items())))


@dataclass(frozen=True)
class GaugePair:
    """``A`` holomorphic and invertible on U, ``C`` holomorphic and invertible on V."""

    A: Matrix2
    C: Matrix2

    def is_valid(self):
        return (self.A.is_U_holomorphic() and self.C.is_V_holomorphic()
                and is_constant_unit(self.A.det()) and is_constant_unit(self.C.det()))


def monomial_reduce(q, j):
    """Split ``q = z**j alpha + z**-j beta + r``.

    ``alpha`` is U-holomorphic, ``beta`` V-holomorphic and ``r`` supported in
    the window.  A term ``z**l u**i`` goes to ``alpha`` when ``l >= j`` (ties
    included), else to ``beta`` when ``l <= i - j``, else to ``r``.
    """
    t = q.trunc
    alpha, beta, r = {}, {}, {}
    for (l, i), c in q.terms.items():
        if i == 0:
            raise HasDivisorLevelTerms(f"term z^{l} has u-degree 0")
        if l >= j:
            alpha[(l - j, i)] = c
        elif l <= i - j:
            beta[(l + j, i)] = c
        else:
            r[(l, i)] = c
    return BiLaurentPoly(alpha, t), BiLaurentPoly(beta, t), BiLaurentPoly(r, t)


def _order_zero_gauge(T):
    """``(A0, C0, j)`` with ``T A0 = C0 diag(z**j, z**-j)`` at ``u = 0``."""
    f = grothendieck_split(T.u_part(0))
    t = T.trunc
    C0 = f.A.with_trunc(t)
    A0 = f.B.inverse().with_trunc(t)
    return A0, C0, f.j


def _order_k_correction(S, j, k):
    """Correction ``(a, c)`` clearing everything but the window at order ``k``.

    With ``L = diag(z**j, z**-j)`` the order-``k`` part changes by ``L a - c L``.
    """
    t = S.trunc
    a = [{}, {}, {}, {}]
    c = [{}, {}, {}, {}]
    s11, s12, s21, s22 = (x.u_part(k).terms for x in S)
    for (l, _), s in s11.items():
        if l >= j:
            a[0][(l - j, k)] = -s
        else:
            c[0][(l - j, k)] = s
    for (l, _), s in s22.items():
        if l >= -j:
            a[3][(l + j, k)] = -s
        else:
            c[3][(l + j, k)] = s
    for (l, _), s in s21.items():
        if l >= -j:
            a[2][(l + j, k)] = -s
        else:
            c[2][(l - j, k)] = s
    alpha, beta, _ = monomial_reduce(BiLaurentPoly({(l, k): v for (l, _), v in s12.items()}, k), j)
    a[1] = {key: -s for key, s in alpha.terms.items()}
    c[1] = beta.terms
    one = BiLaurentPoly.const(1, t)
    A = Matrix2(one + BiLaurentPoly(a[0], t), BiLaurentPoly(a[1], t),
                BiLaurentPoly(a[2], t), one + BiLaurentPoly(a[3], t), t)
    C = Matrix2(one + BiLaurentPoly(c[0], t), BiLaurentPoly(c[1], t),
                BiLaurentPoly(c[2], t), one + BiLaurentPoly(c[3], t), t)
    return A, C


def _split_type_if_diagonal(L0):
    """``j`` if ``L0`` is exactly ``diag(z**j, z**-j)`` with ``j >= 0``, else ``None``."""
    ra = L0.a.z_range()
    if ra is None or ra[0] != ra[1] or ra[0] < 0:
        return None
    return ra[0] if L0 == Matrix2.split(ra[0]) else None


def canonicalize(T):
    """Return ``(K, GaugePair(A, C))`` with ``T A = C K.matrix()`` modulo ``u**(trunc+1)``.

    ``K.trunc`` is the truncation order the identity holds at.  Raises
    :class:`TruncationTooLow` when ``T.trunc < 2j - 2``.
    """
    T = TransitionMatrix2.from_matrix(T)
    t = T.trunc
    j0 = _split_type_if_diagonal(T.u_part(0))
    if j0 is not None:
        A, C, j = Matrix2.identity(t), Matrix2.identity(t), j0
        S = T
    else:
        A, C, j = _order_zero_gauge(T)
        S = C.inverse() @ T @ A
    if t < 2 * j - 2:
        raise TruncationTooLow(f"trunc {t} < 2j-2 = {2 * j - 2} for splitting type {j}")

    for k in range(1, t + 1):
        Ak, Ck = _order_k_correction(S, j, k)
        if Ak == Matrix2.identity(t) and Ck == Matrix2.identity(t):
            continue
        S = Ck.inverse() @ S @ Ak
        A = A @ Ak
        C = C @ Ck

    p = S.b
    K = CanonicalForm(j, {(i, l): c for (l, i), c in p.terms.items()}, t)
    if S != K.matrix():
        raise RuntimeError("canonicalization did not reach the canonical shape")
    return K, GaugePair(A, C)
