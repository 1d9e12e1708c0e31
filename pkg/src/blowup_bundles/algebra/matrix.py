"""2x2 matrices over truncated Laurent polynomials, and transition matrices."""

from .laurent import BiLaurentPoly, is_U_holomorphic, is_V_holomorphic

__all__ = [
    "Matrix2",
    "TransitionMatrix2",
    "NonUnitDeterminant",
    "InvalidTransitionMatrix",
    "mat_mul",
    "mat_det",
    "mat_inverse",
    "is_unit",
    "is_constant_unit",
]


class NonUnitDeterminant(ValueError):
    """The determinant is not invertible in the truncated ring."""


class InvalidTransitionMatrix(ValueError):
    """The matrix does not satisfy the zero-first-Chern-class condition."""


def _as_poly(x, trunc):
    if isinstance(x, BiLaurentPoly):
        return x
    return BiLaurentPoly.const(x, trunc)


class Matrix2:
    """Immutable 2x2 matrix ``[[a, b], [c, d]]`` of :class:`BiLaurentPoly`.

    All entries are brought to a common truncation (the smallest one given).
    """

    __slots__ = ("a", "b", "c", "d", "trunc")

    def __init__(self, a, b, c, d, trunc=None):
        polys = [x for x in (a, b, c, d) if isinstance(x, BiLaurentPoly)]
        if trunc is None:
            trunc = min((p.trunc for p in polys), default=0)
        a, b, c, d = (_as_poly(x, trunc).with_trunc(trunc) for x in (a, b, c, d))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "trunc", trunc)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix2 is immutable")

    @classmethod
    def from_rows(cls, rows, trunc=None):
        (a, b), (c, d) = rows
        return cls(a, b, c, d, trunc)

    @classmethod
    def identity(cls, trunc=0):
        return cls(1, 0, 0, 1, trunc)

    @classmethod
    def diag(cls, x, y, trunc=None):
        return cls(x, 0, 0, y, trunc)

    @classmethod
    def split(cls, j, trunc=0):
        """``diag(z**j, z**-j)``."""
        return cls(BiLaurentPoly.monomial(j, 0, 1, trunc), 0, 0,
                   BiLaurentPoly.monomial(-j, 0, 1, trunc), trunc)

    @property
    def entries(self):
        return ((self.a, self.b), (self.c, self.d))

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def map(self, f):
        return Matrix2(*(f(x) for x in self), trunc=None)

    def with_trunc(self, trunc):
        return Matrix2(self.a, self.b, self.c, self.d, trunc)

    def u_part(self, i):
        """The ``u**i`` coefficient matrix (trunc 0)."""
        return Matrix2(*(x.u_part(i) for x in self), trunc=0)

    def transpose(self):
        return Matrix2(self.a, self.c, self.b, self.d, self.trunc)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        return Matrix2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        return Matrix2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self):
        return Matrix2(-self.a, -self.b, -self.c, -self.d, self.trunc)

    def scale(self, s):
        return Matrix2(*(x.scale(s) for x in self), trunc=self.trunc)

    def det(self):
        return mat_det(self)

    def inverse(self):
        return mat_inverse(self)

    def __eq__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return tuple(self) == tuple(other)

    def __hash__(self):
        return hash(tuple(self))

    def __repr__(self):
        return f"Matrix2([[{self.a}, {self.b}], [{self.c}, {self.d}]], trunc={self.trunc})"

    def is_U_holomorphic(self):
        return all(is_U_holomorphic(x) for x in self)

    def is_V_holomorphic(self):
        return all(is_V_holomorphic(x) for x in self)


def mat_mul(x, y):
    return Matrix2(
        x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d,
    )


def mat_det(x):
    return x.a * x.d - x.b * x.c


def is_unit(p):
    """True iff ``p`` is invertible in its truncated ring (``u = 0`` part ``c z**k``)."""
    return len(p.u_part(0)) == 1


def is_constant_unit(p):
    """True iff the ``u = 0`` part of ``p`` is a nonzero constant."""
    lead = p.u_part(0)
    return len(lead) == 1 and lead.coeff(0, 0) != 0


def mat_inverse(x):
    """Exact inverse: adjugate times the truncated inverse of the determinant."""
    det = mat_det(x)
    if not is_unit(det):
        raise NonUnitDeterminant(f"determinant {det} is not a unit")
    inv = det.invert()
    return Matrix2(x.d * inv, -x.b * inv, -x.c * inv, x.a * inv)


class TransitionMatrix2(Matrix2):
    """Transition matrix from chart U to chart V of a rank-2 bundle.

    Validated on construction: the determinant restricted to ``u = 0`` must
    be a nonzero constant (zero first Chern class).
    """

    __slots__ = ()

    def __init__(self, a, b, c, d, trunc=None):
        super().__init__(a, b, c, d, trunc)
        if not is_constant_unit(mat_det(self)):
            raise InvalidTransitionMatrix(
                f"det at u = 0 is {mat_det(self).u_part(0)}, not a nonzero constant")

    @classmethod
    def from_matrix(cls, m):
        if isinstance(m, cls):
            return m
        return cls(m.a, m.b, m.c, m.d, m.trunc)

    def with_trunc(self, trunc):
        return TransitionMatrix2(self.a, self.b, self.c, self.d, trunc)
