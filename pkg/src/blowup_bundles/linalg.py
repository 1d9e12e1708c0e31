"""Sparse exact Gaussian elimination over Q(i).

Rows are dicts ``column -> coefficient``; the right-hand side, when present,
lives under the key :data:`RHS`.  Rows are reduced to echelon form as they
arrive (pivot = smallest column); the nullspace and a particular solution come
from back substitution.

Systems whose entries are all real are eliminated on raw ``mpq`` values, which
is much faster than going through :class:`GaussianRational`.
"""

from gmpy2 import mpq

from .algebra.scalars import GaussianRational

RHS = -1

__all__ = ["RHS", "RowReducer", "nullspace", "solve"]


def _lift(x):
    return x if isinstance(x, GaussianRational) else GaussianRational._make(mpq(x), mpq(0))


class RowReducer:
    """Incremental echelon form with pivots in increasing column order."""

    def __init__(self, ncols, real=False):
        self.ncols = ncols
        self.real = real
        self.pivots = {}  # pivot column -> row normalized to 1 at the pivot
        self.inconsistent = False

    def _convert(self, row):
        if self.real:
            return {k: v.re for k, v in row.items() if v}
        return {k: v for k, v in row.items() if v}

    def add_row(self, row):
        r = self._convert(row)
        pivots = self.pivots
        while True:
            cols = [k for k in r if k != RHS]
            if not cols:
                if r.get(RHS):
                    self.inconsistent = True
                return False
            p = min(cols)
            prow = pivots.get(p)
            if prow is None:
                break
            c = r[p]
            for k, v in prow.items():
                s = r.get(k)
                s = -c * v if s is None else s - c * v
                if s:
                    r[k] = s
                else:
                    del r[k]
        inv = 1 / r[p]
        pivots[p] = {k: v * inv for k, v in r.items()}
        return True

    @property
    def rank(self):
        return len(self.pivots)

    def free_columns(self):
        return [c for c in range(self.ncols) if c not in self.pivots]

    def _back_substitute(self, x, with_rhs):
        """Fill the pivot variables of ``x``, highest pivot first."""
        for p in sorted(self.pivots, reverse=True):
            row = self.pivots[p]
            s = row.get(RHS) if with_rhs else None
            for k, v in row.items():
                if k == p or k == RHS:
                    continue
                xv = x.get(k)
                if xv:
                    s = -v * xv if s is None else s - v * xv
            if s:
                x[p] = s
        return {k: _lift(v) for k, v in x.items() if v}

    def nullspace(self):
        basis = []
        for f in self.free_columns():
            one = mpq(1) if self.real else GaussianRational(1)
            basis.append(self._back_substitute({f: one}, False))
        return basis

    def particular_solution(self):
        """Solution with all free variables zero, or ``None`` if inconsistent."""
        if self.inconsistent:
            return None
        return self._back_substitute({}, True)


def _is_real(rows):
    return all(not v.im for row in rows for v in row.values())


def nullspace(rows, ncols):
    """Basis of ``{x : row . x = 0 for every row}`` as sparse dicts."""
    rows = list(rows)
    red = RowReducer(ncols, real=_is_real(rows))
    for row in rows:
        red.add_row(row)
    return red.nullspace()


def solve(rows, ncols):
    """Solve ``row . x = row[RHS]``; returns ``(particular, nullspace basis)``.

    ``particular`` is ``None`` when the system is inconsistent.
    """
    rows = list(rows)
    red = RowReducer(ncols, real=_is_real(rows))
    for row in rows:
        red.add_row(row)
    return red.particular_solution(), red.nullspace()
