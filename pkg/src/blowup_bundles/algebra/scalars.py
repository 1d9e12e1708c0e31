"""Exact Gaussian-rational scalars, i.e. elements of Q(i)."""

from fractions import Fraction
from numbers import Integral, Rational

from gmpy2 import mpq

__all__ = ["GaussianRational", "as_scalar", "ZERO", "ONE", "I"]

_MPQ = type(mpq(0))


def _q(x):
    if isinstance(x, _MPQ):
        return x
    if isinstance(x, (Integral, Rational)):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return mpq(Fraction(x).numerator, Fraction(x).denominator)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class GaussianRational:
    """A number ``re + im*i`` with ``re``, ``im`` exact rationals.

    Instances are immutable. Floats are rejected on purpose.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _q(re))
        object.__setattr__(self, "im", _q(im))

    @classmethod
    def _make(cls, re, im):
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (Fraction(int(self.re.numerator), int(self.re.denominator)),
                                   Fraction(int(self.im.numerator), int(self.im.denominator))))

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._make(a * c, b)
        return GaussianRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self):
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("inverse of zero")
            return GaussianRational._make(1 / a, b)
        n = a * a + b * b
        return GaussianRational._make(a / n, -b / n)

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def conjugate(self):
        return GaussianRational._make(self.re, -self.im)

    # comparisons

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        try:
            other = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self):
        return not self.im

    def __repr__(self):
        if not self.im:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*I"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}*I)"

    def as_pairs(self):
        """``([num, den], [num, den])`` for the real and imaginary parts."""
        return ([int(self.re.numerator), int(self.re.denominator)],
                [int(self.im.numerator), int(self.im.denominator)])

    @classmethod
    def from_pairs(cls, re, im):
        (rn, rd), (in_, id_) = re, im
        if rd == 0 or id_ == 0:
            raise ZeroDivisionError("zero denominator")
        return cls._make(mpq(int(rn), int(rd)), mpq(int(in_), int(id_)))


def as_scalar(x):
    """Coerce ints, Fractions, mpq or ``GaussianRational`` into a ``GaussianRational``."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, complex) or isinstance(x, float):
        raise TypeError("floating-point values are not exact scalars")
    return GaussianRational(x)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
