"""Command-line front-end.

Exit codes: 0 success (or Equivalent), 1 NotEquivalent (``equivalent`` only),
2 invalid input, 3 an internal bound was exceeded.
"""

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor

from .algebra import InvalidTransitionMatrix, NonUnitDeterminant
from .birkhoff import NonConstantDeterminant, splitting_type
from .canonical import TruncationTooLow, canonicalize
from .checks import run_all
from .equivalence import DegreeBoundExceeded, OrderTooLarge, are_equivalent
from .moduli import PQ_ASSIGNMENTS, classify, m2_classify, m2_label
from .sampling import random_canonical, rng_from
from .serialize import (FORMAT_VERSION, BundleDocument, InvalidDocument, dumps,
                        matrix_to_entries, parse_document, scalar_to_json)

EXIT_OK = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_INVALID = 2
EXIT_BOUND = 3

_INVALID = (InvalidDocument, InvalidTransitionMatrix, NonConstantDeterminant,
            NonUnitDeterminant, TruncationTooLow, OrderTooLarge, OSError)


def _load(path, trunc=None):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    doc = parse_document(text)
    T = doc.transition()
    if trunc is not None:
        T = T.with_trunc(trunc)
    return doc, T


def _canonical_json(K):
    return [{"i": i, "l": l, **scalar_to_json(c)} for (i, l), c in K.coeffs.items()]


def _batch(worker, args, *extra):
    """Run ``worker`` on every input file, in parallel when ``--jobs`` > 1.

    Results keep the order of the inputs, so output is independent of scheduling.
    """
    items = [(path, *extra) for path in args.files]
    if args.jobs > 1 and len(items) > 1 and "-" not in args.files:
        with ProcessPoolExecutor(args.jobs) as pool:
            return list(pool.map(worker, *zip(*items))), EXIT_OK
    return [worker(*item) for item in items], EXIT_OK


def _canonicalize_one(path, trunc):
    _, T = _load(path, trunc)
    K, G = canonicalize(T)
    return {
        "command": "canonicalize", "format_version": FORMAT_VERSION, "input": path,
        "j": K.j, "order": K.trunc, "coeffs": _canonical_json(K),
        "canonical": BundleDocument(K.matrix(), K.j).to_json(),
        "gauge": {"A": matrix_to_entries(G.A), "C": matrix_to_entries(G.C)},
    }


def _canonicalize(args):
    return _batch(_canonicalize_one, args, args.trunc)


def _summary_canonicalize(r):
    p = " + ".join(f"{GaussianPair(t)}*z^{t['l']}*u^{t['i']}" for t in r["coeffs"]) or "0"
    return f"{r['input']}: j = {r['j']}, order {r['order']}, p = {p}"


class GaussianPair:
    """Render a JSON scalar for summaries."""

    def __init__(self, t):
        self.re, self.im = t["re"], t["im"]

    def __str__(self):
        def q(p):
            return str(p[0]) if p[1] == 1 else f"{p[0]}/{p[1]}"
        if self.im[0] == 0:
            return q(self.re)
        return f"({q(self.re)}+{q(self.im)}i)"


def _splitting_type_one(path):
    _, T = _load(path)
    return {"command": "splitting-type", "input": path, "j": splitting_type(T.u_part(0))}


def _splitting_type(args):
    return _batch(_splitting_type_one, args)


def _equivalent(args):
    _, T1 = _load(args.first)
    _, T2 = _load(args.second)
    v = are_equivalent(T1, T2, order=args.order, max_z_degree=args.max_degree)
    witness = None
    if v.witness is not None:
        witness = {"A": matrix_to_entries(v.witness.A), "C": matrix_to_entries(v.witness.C),
                   "order": v.witness.order}
    bounds = dict(v.bounds)
    bounds["max_z_degree_cap"] = args.max_degree
    res = {"command": "equivalent", "verdict": "Equivalent" if v.equivalent else "NotEquivalent",
           "order": v.order, "witness": witness, "bounds": bounds,
           "inputs": [args.first, args.second]}
    return [res], EXIT_OK if v.equivalent else EXIT_NOT_EQUIVALENT


def _classify_one(path, trunc, assignment):
    doc, T = _load(path, trunc)
    K, _ = canonicalize(T)
    if doc.j_hint is not None and doc.j_hint != K.j:
        raise InvalidDocument(f"j_hint {doc.j_hint} disagrees with splitting type {K.j}")
    pt = classify(K)
    res = {"command": "classify", "input": path, "j": K.j, "order": K.trunc,
           "p_q_assignment": assignment, "unique_point": K.j <= 1,
           "stratum": {
               "depth": "infinity" if pt.depth == math.inf else pt.depth,
               "classdata": None if pt.classdata is None
               else [scalar_to_json(c) for c in pt.classdata],
               "dimension": pt.stratum_dimension,
           },
           "partial": pt.partial, "m2": None}
    if K.j == 2:
        m2 = m2_classify(K)
        res["m2"] = {"tag": m2.tag.value,
                     "point": None if m2.point is None else [scalar_to_json(c) for c in m2.point],
                     "label": m2_label(m2, assignment)}
    return res


def _classify(args):
    return _batch(_classify_one, args, args.trunc, args.p_q_assignment)


def _summary_classify(r):
    if r["unique_point"]:
        return f"{r['input']}: the unique point of M_{r['j']}"
    if r["m2"] is not None:
        tag = r["m2"]["tag"]
        where = r["m2"]["label"]
        if tag == "GENERIC":
            a, b = (GaussianPair(t) for t in r["m2"]["point"])
            return f"{r['input']}: M_2 GENERIC [{a} : {b}] in P^1"
        return f"{r['input']}: M_2 {tag} (point {where}, assignment {r['p_q_assignment']})"
    s = r["stratum"]
    if s["depth"] == "infinity":
        return f"{r['input']}: split bundle in M_{r['j']}"
    flag = " (partial descriptor)" if r["partial"] else ""
    return f"{r['input']}: M_{r['j']} depth {s['depth']}, point of P^{s['dimension']}{flag}"


def _sample(args):
    rng = rng_from(args.seed)
    depth = None if args.depth in ("split", "none") else int(args.depth)
    out = []
    for _ in range(args.count):
        K = random_canonical(rng, args.j, depth=depth, trunc=args.trunc)
        out.append(BundleDocument(K.matrix(), K.j).to_json())
    return out, EXIT_OK


def _oracle_check(args):
    results = run_all(args.seed, args.count)
    rep = {"command": "oracle-check", "seed": args.seed, "count": args.count,
           "properties": [r.to_json() for r in results],
           "all_passed": all(r.passed for r in results)}
    return [rep], EXIT_OK


def _summary_generic(r):
    if r.get("command") == "equivalent":
        return f"{r['verdict']} at order {r['order']} (witness degree bounds {r['bounds']['A_z_degree_by_order']})"
    if r.get("command") == "splitting-type":
        return f"{r['input']}: j = {r['j']}"
    if r.get("command") == "oracle-check":
        lines = [f"{p['name']}: {'PASS' if p['passed'] else 'FAIL'} ({p['trials']} trials)"
                 for p in r["properties"]]
        return "\n".join(lines)
    return dumps(r, pretty=True)


_SUMMARIES = {"canonicalize": _summary_canonicalize, "classify": _summary_classify}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--json", dest="pretty", action="store_false", default=False,
                      help="machine-readable JSON, one object per line (default)")
    mode.add_argument("--pretty", dest="pretty", action="store_true",
                      help="human-readable summary")

    parser = argparse.ArgumentParser(prog="blowup-bundles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canonicalize", parents=[common], help="reduce to canonical form")
    p.add_argument("files", nargs="+", help="bundle documents ('-' for standard input)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for batch input")
    p.add_argument("--trunc", type=int, help="reinterpret inputs at this truncation")
    p.set_defaults(func=_canonicalize)

    p = sub.add_parser("splitting-type", parents=[common], help="splitting type on the divisor")
    p.add_argument("files", nargs="+", help="bundle documents ('-' for standard input)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for batch input")
    p.set_defaults(func=_splitting_type)

    p = sub.add_parser("equivalent", parents=[common], help="decide holomorphic equivalence")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--order", type=int, help="formal neighborhood order (default: min trunc)")
    p.add_argument("--max-degree", type=int, default=None,
                   help="cap on the witness z-degree; exceeding it exits with 3")
    p.set_defaults(func=_equivalent)

    p = sub.add_parser("classify", parents=[common], help="moduli stratum of a bundle")
    p.add_argument("files", nargs="+", help="bundle documents ('-' for standard input)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for batch input")
    p.add_argument("--trunc", type=int)
    p.add_argument("--p-q-assignment", choices=PQ_ASSIGNMENTS, default="split-p",
                   help="which extra point of M_2 is the split bundle")
    p.set_defaults(func=_classify)

    p = sub.add_parser("sample", parents=[common], help="random canonical-form documents")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--depth", default="1", help="first nonzero u-degree, or 'split'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--trunc", type=int)
    p.set_defaults(func=_sample)

    p = sub.add_parser("oracle-check", parents=[common], help="run randomized property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(func=_oracle_check)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        results, code = args.func(args)
    except DegreeBoundExceeded as exc:
        print(dumps({"error": "DegreeBoundExceeded", "message": str(exc)}), file=sys.stderr)
        return EXIT_BOUND
    except _INVALID as exc:
        print(dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_INVALID
    for r in results:
        if args.pretty:
            print(_SUMMARIES.get(r.get("command"), _summary_generic)(r))
        else:
            print(dumps(r))
    return code


if __name__ == "__main__":
    sys.exit(main())
