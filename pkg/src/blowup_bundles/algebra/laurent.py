"""Sparse bivariate Laurent polynomials in ``z`` and ``u``, truncated in ``u``.

A polynomial is stored as a mapping ``(l, i) -> coefficient`` for the monomial
``z**l * u**i``.  The ``u``-exponent is non-negative and at most ``trunc``;
everything is computed in the ring ``C[z, 1/z][u] / (u**(trunc+1))``.

The second chart of the blow-up has coordinates ``xi = 1/z`` and ``v = z*u``,
so ``xi**a * v**b = z**(b-a) * u**b``.  A term ``z**l u**i`` is holomorphic on
the U chart iff ``l >= 0`` and on the V chart iff ``l <= i``.
"""

from .scalars import ZERO, as_scalar

__all__ = [
    "BiLaurentPoly",
    "NotVHolomorphic",
    "add",
    "mul",
    "to_V_chart",
    "from_V_chart",
    "is_U_holomorphic",
    "is_V_holomorphic",
    "restrict_to_exceptional",
]


class NotVHolomorphic(ValueError):
    """A term ``z**l u**i`` with ``l > i`` has no expression in ``(xi, v)``."""


def _key(term):
    (l, i) = term[0]
    return (i, l)


class BiLaurentPoly:
    """Immutable sparse Laurent polynomial in ``z`` with ``u``-truncation."""

    __slots__ = ("_terms", "trunc", "_hash")

    def __init__(self, terms=None, trunc=0):
        if trunc < 0:
            raise ValueError("trunc must be non-negative")
        clean = {}
        if terms:
            for (l, i), c in dict(terms).items():
                l, i = int(l), int(i)
                if i < 0:
                    raise ValueError(f"negative u-exponent {i}")
                if i > trunc:
                    continue
                c = as_scalar(c)
                if c:
                    clean[(l, i)] = c
        self._terms = clean
        self.trunc = int(trunc)
        self._hash = None

    @classmethod
    def _raw(cls, terms, trunc):
        obj = object.__new__(cls)
        obj._terms = terms
        obj.trunc = trunc
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, trunc=0):
        return cls._raw({}, trunc)

    @classmethod
    def const(cls, c, trunc=0):
        return cls({(0, 0): c}, trunc)

    @classmethod
    def monomial(cls, l, i, c=1, trunc=None):
        if trunc is None:
            trunc = i
        return cls({(l, i): c}, trunc)

    # access

    @property
    def terms(self):
        """Read-only view of ``(l, i) -> coefficient``."""
        return dict(self._terms)

    def items(self):
        """Terms in the canonical order: ascending ``i``, then ``l``."""
        return sorted(self._terms.items(), key=_key)

    def coeff(self, l, i):
        return self._terms.get((l, i), ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def z_range(self, i=None):
        """``(min l, max l)`` over all terms, or over terms of u-degree ``i``.

        Returns ``None`` when there are no such terms.
        """
        ls = [l for (l, k) in self._terms if i is None or k == i]
        if not ls:
            return None
        return (min(ls), max(ls))

    def u_part(self, i):
        """The coefficient of ``u**i`` as a polynomial with trunc 0."""
        return BiLaurentPoly._raw({(l, 0): c for (l, k), c in self._terms.items() if k == i}, 0)

    def with_trunc(self, trunc):
        """Reinterpret at a different truncation (dropping terms above it)."""
        if trunc >= self.trunc:
            return BiLaurentPoly._raw(self._terms, trunc)
        return BiLaurentPoly._raw({k: c for k, c in self._terms.items() if k[1] <= trunc}, trunc)

    def shift(self, dl, di=0):
        """Multiply by ``z**dl * u**di``."""
        t = self.trunc
        return BiLaurentPoly._raw(
            {(l + dl, i + di): c for (l, i), c in self._terms.items() if i + di <= t}, t)

    def scale(self, c):
        c = as_scalar(c)
        if not c:
            return BiLaurentPoly._raw({}, self.trunc)
        return BiLaurentPoly._raw({k: v * c for k, v in self._terms.items()}, self.trunc)

    def substitute_z_inverse(self):
        """Replace ``z`` by ``1/z``; only meaningful on u-free polynomials."""
        return BiLaurentPoly._raw({(-l, i): c for (l, i), c in self._terms.items()}, self.trunc)

    # arithmetic

    def __add__(self, other):
        other = _coerce(other, self.trunc)
        if other is NotImplemented:
            return other
        t = min(self.trunc, other.trunc)
        out = {k: c for k, c in self._terms.items() if k[1] <= t}
        for k, c in other._terms.items():
            if k[1] > t:
                continue
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return BiLaurentPoly._raw(out, t)

    __radd__ = __add__

    def __neg__(self):
        return BiLaurentPoly._raw({k: -c for k, c in self._terms.items()}, self.trunc)

    def __sub__(self, other):
        other = _coerce(other, self.trunc)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other, self.trunc)
        if other is NotImplemented:
            return other
        t = min(self.trunc, other.trunc)
        out = {}
        b_items = list(other._terms.items())
        for (l1, i1), c1 in self._terms.items():
            if i1 > t:
                continue
            for (l2, i2), c2 in b_items:
                i = i1 + i2
                if i > t:
                    continue
                k = (l1 + l2, i)
                s = out.get(k)
                out[k] = c1 * c2 if s is None else s + c1 * c2
        return BiLaurentPoly._raw({k: c for k, c in out.items() if c}, t)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not supported; use invert()")
        result = BiLaurentPoly.const(1, self.trunc)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def invert(self):
        """Inverse in the truncated ring.

        The ``u = 0`` part must be a monomial ``c z**k``; the remainder is
        nilpotent and the geometric series terminates at ``trunc``.
        """
        lead = self.u_part(0)
        if len(lead) != 1:
            raise ZeroDivisionError("u = 0 part is not a nonzero monomial")
        ((k, _), c), = lead._terms.items()
        unit_inv = BiLaurentPoly._raw({(-k, 0): c.inverse()}, self.trunc)
        # self = lead * (1 + n) with n nilpotent
        n = (self * unit_inv) - 1
        result = BiLaurentPoly.const(1, self.trunc)
        power = BiLaurentPoly.const(1, self.trunc)
        for _ in range(self.trunc):
            power = -(power * n)
            if not power:
                break
            result = result + power
        return result * unit_inv

    # comparisons

    def __eq__(self, other):
        if isinstance(other, BiLaurentPoly):
            return self._terms == other._terms
        try:
            other = as_scalar(other)
        except TypeError:
            return NotImplemented
        if not other:
            return not self._terms
        return self._terms == {(0, 0): other}

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"BiLaurentPoly({self}, trunc={self.trunc})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (l, i), c in self.items():
            mono = []
            if l:
                mono.append("z" if l == 1 else f"z^{l}")
            if i:
                mono.append("u" if i == 1 else f"u^{i}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(mono))
            elif c == -1:
                parts.append("-" + "*".join(mono))
            else:
                parts.append(f"{c}*" + "*".join(mono))
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(x, trunc):
    if isinstance(x, BiLaurentPoly):
        return x
    try:
        c = as_scalar(x)
    except TypeError:
        return NotImplemented
    return BiLaurentPoly._raw({(0, 0): c} if c else {}, trunc)


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def is_U_holomorphic(a):
    """True iff ``a`` is a polynomial in ``z`` and ``u``."""
    return all(l >= 0 for (l, _) in a._terms)


def is_V_holomorphic(a):
    """True iff ``a`` is a polynomial in ``xi = 1/z`` and ``v = z*u``."""
    return all(l <= i for (l, i) in a._terms)


def to_V_chart(a):
    """Rewrite ``a`` in the V-chart monomials: ``z**l u**i -> xi**(i-l) v**i``.

    Returns a dict ``(xi exponent, v exponent) -> coefficient``.
    """
    out = {}
    for (l, i), c in a._terms.items():
        if l > i:
            raise NotVHolomorphic(f"term z^{l} u^{i} is not holomorphic on V")
        out[(i - l, i)] = c
    return out


def from_V_chart(terms, trunc):
    """Inverse of :func:`to_V_chart`."""
    return BiLaurentPoly({(b - a, b): c for (a, b), c in terms.items()}, trunc)


def restrict_to_exceptional(a):
    """The ``u = 0`` slice, as a polynomial with ``trunc = 0``."""
    return a.u_part(0)
