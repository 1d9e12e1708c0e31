"""JSON documents for transition matrices, canonical forms and verdicts.

A bundle document looks like::

    {"format_version": "1", "j_hint": 2, "trunc": 2,
     "entries": [[[term, ...], [term, ...]], [[...], [...]]]}

with each term ``{"l": 1, "i": 1, "re": [1, 1], "im": [0, 1]}``.  Terms are
written in ascending ``i`` then ``l``; fractions are reduced with positive
denominators, so parse followed by dump is the identity on such documents.
"""

import json
from dataclasses import dataclass

from .algebra import BiLaurentPoly, GaussianRational, Matrix2, TransitionMatrix2

FORMAT_VERSION = "1"

__all__ = [
    "FORMAT_VERSION",
    "InvalidDocument",
    "BundleDocument",
    "poly_to_terms",
    "terms_to_poly",
    "matrix_to_entries",
    "entries_to_matrix",
    "parse_document",
    "dump_document",
    "dumps",
    "scalar_to_json",
]


class InvalidDocument(ValueError):
    pass


@dataclass(frozen=True)
class BundleDocument:
    matrix: Matrix2
    j_hint: int = None
    format_version: str = FORMAT_VERSION

    @property
    def trunc(self):
        return self.matrix.trunc

    def transition(self):
        return TransitionMatrix2.from_matrix(self.matrix)

    def to_json(self):
        return {"format_version": self.format_version, "j_hint": self.j_hint,
                "trunc": self.trunc, "entries": matrix_to_entries(self.matrix)}


def scalar_to_json(c):
    re, im = c.as_pairs()
    return {"re": re, "im": im}


def poly_to_terms(p):
    return [{"l": l, "i": i, **scalar_to_json(c)} for (l, i), c in p.items()]


def _int(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InvalidDocument(f"{what} must be an integer, got {x!r}")
    return x


def _pair(x, what):
    if not isinstance(x, list) or len(x) != 2:
        raise InvalidDocument(f"{what} must be [num, den]")
    num, den = _int(x[0], what), _int(x[1], what)
    if den == 0:
        raise InvalidDocument(f"{what} has a zero denominator")
    return [num, den]


def terms_to_poly(terms, trunc):
    if not isinstance(terms, list):
        raise InvalidDocument("an entry must be a list of terms")
    out = {}
    for t in terms:
        if not isinstance(t, dict) or set(t) - {"l", "i", "re", "im"} or not {"l", "i", "re"} <= set(t):
            raise InvalidDocument(f"malformed term {t!r}")
        l, i = _int(t["l"], "l"), _int(t["i"], "i")
        if i < 0 or i > trunc:
            raise InvalidDocument(f"u-exponent {i} outside 0..{trunc}")
        if (l, i) in out:
            raise InvalidDocument(f"duplicate term (l={l}, i={i})")
        out[(l, i)] = GaussianRational.from_pairs(_pair(t["re"], "re"),
                                                  _pair(t.get("im", [0, 1]), "im"))
    return BiLaurentPoly(out, trunc)


def matrix_to_entries(M):
    return [[poly_to_terms(M[r, c]) for c in range(2)] for r in range(2)]


def entries_to_matrix(entries, trunc):
    if not isinstance(entries, list) or len(entries) != 2 or any(
            not isinstance(row, list) or len(row) != 2 for row in entries):
        raise InvalidDocument("entries must be a 2x2 array")
    return Matrix2(*(terms_to_poly(entries[r][c], trunc) for r in range(2) for c in range(2)),
                   trunc=trunc)


def parse_document(text):
    """Parse a bundle document from a JSON string (or an already decoded dict)."""
    if isinstance(text, (str, bytes)):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidDocument(f"not JSON: {exc}") from None
    else:
        data = text
    if not isinstance(data, dict):
        raise InvalidDocument("document must be a JSON object")
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise InvalidDocument(f"unsupported format_version {version!r}")
    trunc = _int(data.get("trunc"), "trunc")
    if trunc < 0:
        raise InvalidDocument("trunc must be non-negative")
    j_hint = data.get("j_hint")
    if j_hint is not None:
        _int(j_hint, "j_hint")
    return BundleDocument(entries_to_matrix(data.get("entries"), trunc), j_hint, version)


def dumps(obj, pretty=False):
    if pretty:
        return json.dumps(obj, indent=2)
    return json.dumps(obj, separators=(",", ":"))


def dump_document(doc, pretty=False):
    return dumps(doc.to_json(), pretty)
