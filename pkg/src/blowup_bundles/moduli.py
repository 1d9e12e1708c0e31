"""Strata of the moduli spaces M_j and the topology of M_2.

A canonical form is sorted by its *depth*, the smallest ``u``-degree carrying a
nonzero coefficient, and described by the projective class of that row of the
window.  Depth 1 is the generic stratum, a point of P^(2j-3); it is a complete
invariant by the first-neighborhood criterion.  Deeper descriptors are
reported with ``partial=True``.

M_2 is P^1 together with two extra points ``p`` and ``q``; neighborhoods are
generated by

* ``U``, an open set of P^1,
* ``{p} + U`` with ``U`` nonempty,
* ``{p, q} + U`` with ``U`` nonempty.

Which of the two extra points is the split bundle is configurable
(``"split-p"`` by default, meaning ``p`` is the split bundle and ``q`` the
depth-2 bundle).
"""

import enum
import math
from dataclasses import dataclass, field

from .algebra.scalars import as_scalar
from .canonical import window_size
from .equivalence import projectivize

__all__ = [
    "ModuliPoint",
    "M2Tag",
    "M2Point",
    "P1Set",
    "M2Subset",
    "UnsupportedSubsetDescription",
    "PQ_ASSIGNMENTS",
    "classify",
    "m2_classify",
    "m2_label",
    "m2_is_open",
    "m2_closure",
    "m2_separable",
    "m2_basis_intersections",
    "dimension_count",
]

PQ_ASSIGNMENTS = ("split-p", "split-q")


class UnsupportedSubsetDescription(ValueError):
    pass


@dataclass(frozen=True)
class ModuliPoint:
    """Stratum descriptor of a canonical form.

    ``depth`` is ``math.inf`` for the split bundle.  ``classdata`` is the
    projectivized depth row (``2j - 1 - depth`` slots).
    """

    j: int
    depth: float
    classdata: tuple = None
    partial: bool = False

    @property
    def is_split(self):
        return self.depth == math.inf

    @property
    def stratum_dimension(self):
        """Dimension of the projective space the descriptor lives in."""
        if self.classdata is None:
            return 0
        return len(self.classdata) - 1


def classify(K):
    """Stratum of ``K`` in ``M_j``.  For ``j <= 1`` the moduli space is a single point."""
    if K.j <= 1:
        return ModuliPoint(K.j, math.inf, None, False)
    for i in range(1, 2 * K.j - 1):
        cls = projectivize(K.level(i))
        if cls is not None:
            return ModuliPoint(K.j, i, cls, i > 1)
    return ModuliPoint(K.j, math.inf, None, False)


class M2Tag(enum.Enum):
    GENERIC = "GENERIC"
    Q = "Q"
    SPLIT = "SPLIT"


@dataclass(frozen=True)
class M2Point:
    tag: M2Tag
    point: tuple = None  # normalized [c10 : c11] for GENERIC

    def __post_init__(self):
        if (self.tag is M2Tag.GENERIC) != (self.point is not None):
            raise ValueError("GENERIC points carry a P^1 coordinate, others none")
        if self.point is not None:
            object.__setattr__(self, "point", _p1_point(self.point))

    def __str__(self):
        if self.point is None:
            return self.tag.value
        return "GENERIC [{} : {}]".format(*self.point)


def _p1_point(pt):
    try:
        a, b = pt
    except (TypeError, ValueError):
        raise UnsupportedSubsetDescription(f"{pt!r} is not a pair") from None
    try:
        norm = projectivize((as_scalar(a), as_scalar(b)))
    except TypeError as exc:
        raise UnsupportedSubsetDescription(str(exc)) from None
    if norm is None:
        raise UnsupportedSubsetDescription("[0 : 0] is not a point of P^1")
    return norm


def m2_classify(K):
    """Tag of a ``j = 2`` canonical form: GENERIC([c10 : c11]), Q or SPLIT."""
    if K.j != 2:
        raise ValueError("m2_classify needs j = 2")
    cls = projectivize(K.level(1))
    if cls is not None:
        return M2Point(M2Tag.GENERIC, cls)
    if K.coeffs.get((2, 1)):
        return M2Point(M2Tag.Q)
    return M2Point(M2Tag.SPLIT)


def m2_label(x, assignment="split-p"):
    """``"p"``, ``"q"`` or ``"P1"`` for an :class:`M2Point`."""
    if assignment not in PQ_ASSIGNMENTS:
        raise ValueError(f"unknown p/q assignment {assignment!r}")
    if x.tag is M2Tag.GENERIC:
        return "P1"
    split_is_p = assignment == "split-p"
    return "p" if (x.tag is M2Tag.SPLIT) == split_is_p else "q"


@dataclass(frozen=True)
class P1Set:
    """A finite subset of P^1, or the complement of one (``cofinite=True``)."""

    points: frozenset = field(default_factory=frozenset)
    cofinite: bool = False

    def __post_init__(self):
        object.__setattr__(self, "points", frozenset(_p1_point(p) for p in self.points))

    @classmethod
    def empty(cls):
        return cls()

    @classmethod
    def everything(cls):
        return cls(frozenset(), True)

    def is_empty(self):
        return not self.cofinite and not self.points

    def is_open(self):
        # P^1 is infinite and T1: finite nonempty sets are not open, cofinite ones are
        return self.cofinite or not self.points

    def closure(self):
        if self.cofinite:
            return P1Set.everything()
        return self

    def is_dense(self):
        return self.cofinite

    def __contains__(self, pt):
        return (_p1_point(pt) in self.points) != self.cofinite


@dataclass(frozen=True)
class M2Subset:
    """Subset of M_2: membership of ``p`` and ``q`` plus a :class:`P1Set`."""

    has_p: bool = False
    has_q: bool = False
    generic: P1Set = field(default_factory=P1Set)

    @classmethod
    def of_points(cls, pts, assignment="split-p"):
        labels = [m2_label(x, assignment) for x in pts]
        return cls("p" in labels, "q" in labels,
                   P1Set(frozenset(x.point for x in pts if x.tag is M2Tag.GENERIC)))

    def contains(self, x, assignment="split-p"):
        label = m2_label(x, assignment)
        if label == "p":
            return self.has_p
        if label == "q":
            return self.has_q
        return x.point in self.generic


def _check(S):
    if not isinstance(S, M2Subset) or not isinstance(S.generic, P1Set):
        raise UnsupportedSubsetDescription(
            "subsets must be M2Subset values over finite or cofinite parts of P^1")
    return S


def m2_is_open(S):
    """Whether ``S`` is a union of basis neighborhoods."""
    S = _check(S)
    g = S.generic
    if not g.is_open():
        return False
    if S.has_q and not S.has_p:
        return False
    if (S.has_p or S.has_q) and g.is_empty():
        return False
    return True


def m2_closure(S):
    """Points all of whose basis neighborhoods meet ``S``.

    A neighborhood of ``p`` is ``{p} + U`` for arbitrary nonempty open ``U``, so
    ``p`` is in the closure iff ``p`` is in ``S`` or ``S`` is dense in P^1; every
    neighborhood of ``q`` also contains ``p``.
    """
    S = _check(S)
    dense = S.generic.is_dense()
    has_p = S.has_p or dense
    has_q = S.has_q or S.has_p or dense
    return M2Subset(has_p, has_q, S.generic.closure())


def m2_separable(x, y, assignment="split-p"):
    """Whether ``x`` and ``y`` have disjoint basis neighborhoods.

    Every neighborhood of ``p`` or ``q`` contains ``p``; the P^1 parts can
    always be chosen disjoint except for two copies of the same point.
    """
    lx, ly = m2_label(x, assignment), m2_label(y, assignment)
    if lx != "P1" and ly != "P1":
        return False
    if lx == "P1" and ly == "P1":
        return x.point != y.point
    return True


def m2_basis_intersections():
    """Intersections of pairs of basis neighborhoods, with their openness.

    Each entry is ``(kind1, kind2, overlap, intersection, is_open)`` where a
    kind is ``"U"``, ``"pU"`` or ``"pqU"`` and ``overlap`` says whether the
    two P^1 parts meet.  A nonempty overlap is modelled by a cofinite set.
    """
    kinds = {"U": (False, False), "pU": (True, False), "pqU": (True, True)}
    out = []
    names = list(kinds)
    for n, k1 in enumerate(names):
        for k2 in names[n:]:
            for overlap in (True, False):
                has_p = kinds[k1][0] and kinds[k2][0]
                has_q = kinds[k1][1] and kinds[k2][1]
                g = P1Set.everything() if overlap else P1Set.empty()
                S = M2Subset(has_p, has_q, g)
                out.append((k1, k2, overlap, S, m2_is_open(S)))
    return out


def dimension_count(j):
    """``(window size, generic dimension, lower stratum dimensions)`` for ``j >= 2``.

    The depth-``i`` row has ``2j - 1 - i`` slots, so its projectivization has
    dimension ``2j - 2 - i``.
    """
    if j < 2:
        raise ValueError("dimension_count needs j >= 2")
    first_row = 2 * j - 2
    generic = first_row - 1
    lower = [2 * j - 2 - i for i in range(2, 2 * j - 1)]
    return window_size(j), generic, lower
