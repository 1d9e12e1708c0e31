"""Rank-2 bundles with vanishing first Chern class on the blow-up of C^2.

Exact Gaussian-rational arithmetic for transition matrices, Birkhoff
factorization on the exceptional divisor, canonical forms, holomorphic
equivalence with witnesses, and moduli classification.
"""

from .algebra import (BiLaurentPoly, ExactScalar, GaussianRational, Matrix2,
                      TransitionMatrix2)
from .birkhoff import grothendieck_split, section_dimension, splitting_type
from .canonical import (CanonicalForm, GaugePair, canonical_window, canonicalize,
                        monomial_reduce, window_size)
from .equivalence import (EquivalenceVerdict, EquivalenceWitness, are_equivalent,
                          compose_witnesses, equivalent_first_neighborhood,
                          first_neighborhood_class, verify_witness)
from .moduli import (M2Point, M2Subset, M2Tag, ModuliPoint, P1Set, classify,
                     dimension_count, m2_classify, m2_closure, m2_is_open, m2_separable)

__version__ = "0.1.0"

__all__ = [
    "BiLaurentPoly", "ExactScalar", "GaussianRational", "Matrix2", "TransitionMatrix2",
    "grothendieck_split", "section_dimension", "splitting_type",
    "CanonicalForm", "GaugePair", "canonical_window", "canonicalize", "monomial_reduce",
    "window_size",
    "EquivalenceVerdict", "EquivalenceWitness", "are_equivalent", "compose_witnesses",
    "equivalent_first_neighborhood", "first_neighborhood_class", "verify_witness",
    "M2Point", "M2Subset", "M2Tag", "ModuliPoint", "P1Set", "classify", "dimension_count",
    "m2_classify", "m2_closure", "m2_is_open", "m2_separable",
]
