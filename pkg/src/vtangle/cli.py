"""Command-line front end: parse tangle text, run computations and suites,
emit JSON or CSV documents.

Exit codes: 0 success, 2 parse error, 3 computation error or finding,
4 verification failure (routes disagree or an identity check fails).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bracket import bracket
from .conductance import (
    PATH_CLASSICAL,
    PATH_CLOSED,
    PATH_FRACTION,
    PATH_RECURSION,
    PATH_STATE_SUM,
    classical_fraction,
    closed_form,
    conductance_from_bracket,
    conductance_paths,
    conductance_recursive,
    continued_fraction_C,
)
from .diagram import build_basic
from .errors import TangleError, VectorRuleError, VectorSyntaxError
from .vector import parse_vector
from .verify import (
    STATUS_FAIL,
    STATUS_FINDING,
    STATUS_INDETERMINATE,
    Envelope,
    enumerate_classify,
    run_additivity_suite,
    run_equivalence_suite,
    run_invariance_suite,
    run_ratio_suite,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_COMPUTE = 3
EXIT_VERIFY = 4

_PATH_CHOICES = (
    PATH_STATE_SUM,
    PATH_RECURSION,
    PATH_FRACTION,
    PATH_CLOSED,
    PATH_CLASSICAL,
)


def _write(text: str, out=None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit(doc: dict, out=None) -> None:
    _write(json.dumps(doc, indent=2), out)


def _fail(doc: dict, code: int) -> int:
    sys.stderr.write(json.dumps(doc, indent=2) + "\n")
    return code


def _parse_vector_arg(text: str):
    """(vector, None) on success, (None, exit code) after reporting."""
    try:
        vec = parse_vector(text)
        vec.validate()
    except VectorSyntaxError as exc:
        return None, _fail({"error": str(exc), "offset": exc.offset}, EXIT_PARSE)
    except VectorRuleError as exc:
        return None, _fail({"error": str(exc), "position": exc.position}, EXIT_PARSE)
    return vec, None


def _parse_envelope(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        return None
    try:
        n_max, a_max = int(parts[0]), int(parts[1])
    except ValueError:
        return None
    if n_max < 1 or a_max < 0:
        return None
    return n_max, a_max


def cmd_bracket(args) -> int:
    vec, code = _parse_vector_arg(args.vector)
    if vec is None:
        return code
    t = bracket(build_basic(vec))
    _emit(
        {"vector": str(vec), "f": str(t.f), "g": str(t.g), "h": str(t.h)},
        args.out,
    )
    return EXIT_OK


_SINGLE_PATH = {
    PATH_STATE_SUM: lambda v: conductance_from_bracket(bracket(build_basic(v))),
    PATH_RECURSION: conductance_recursive,
    PATH_FRACTION: continued_fraction_C,
    PATH_CLOSED: closed_form,
    PATH_CLASSICAL: lambda v: classical_fraction([a for a, _ in v.entries]),
}


def cmd_conductance(args) -> int:
    vec, code = _parse_vector_arg(args.vector)
    if vec is None:
        return code
    if args.path:
        if args.path == PATH_CLASSICAL and not vec.classical:
            return _fail(
                {"vector": str(vec), "error": "classical-fraction needs a marker-free vector"},
                EXIT_COMPUTE,
            )
        try:
            value = _SINGLE_PATH[args.path](vec)
        except TangleError as exc:
            return _fail({"vector": str(vec), "error": str(exc), "path": args.path}, EXIT_COMPUTE)
        doc = {"vector": str(vec), "C": str(value), "provenance": [args.path]}
        if args.path == PATH_STATE_SUM:
            t = bracket(build_basic(vec))
            doc["bracket"] = {"f": str(t.f), "g": str(t.g), "h": str(t.h)}
        _emit(doc, args.out)
        return EXIT_OK
    values, errors = conductance_paths(vec, include_state_sum=True)
    ordered = [p for p in _PATH_CHOICES if p in values]
    distinct = {}
    for p in ordered:
        distinct.setdefault(values[p].value, []).append(p)
    if len(distinct) > 1:
        return _fail(
            {
                "vector": str(vec),
                "error": "routes disagree",
                "routes": {p: str(values[p].value) for p in ordered},
            },
            EXIT_VERIFY,
        )
    if errors:
        doc = {
            "vector": str(vec),
            "error": "some routes were degenerate; no unanimous value",
            "degenerate": {p: str(e) for p, e in sorted(errors.items())},
        }
        if ordered:
            doc["agreeing"] = {
                "C": str(values[ordered[0]].value),
                "routes": ordered,
            }
        return _fail(doc, EXIT_COMPUTE)
    t = bracket(build_basic(vec))
    _emit(
        {
            "vector": str(vec),
            "C": str(values[ordered[0]].value),
            "provenance": ordered,
            "bracket": {"f": str(t.f), "g": str(t.g), "h": str(t.h)},
        },
        args.out,
    )
    return EXIT_OK


def cmd_fraction(args) -> int:
    vec, code = _parse_vector_arg(args.vector)
    if vec is None:
        return code
    if not vec.classical:
        return _fail(
            {"vector": str(vec), "error": "fraction needs a marker-free vector"},
            EXIT_PARSE,
        )
    value = classical_fraction([a for a, _ in vec.entries])
    _emit({"vector": str(vec), "F": value.real_str()}, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    env_pair = _parse_envelope(args.envelope)
    if env_pair is None:
        return _fail({"error": f"bad envelope {args.envelope!r}, expected n_max,a_max"}, EXIT_PARSE)
    env = Envelope(*env_pair)
    reports = []
    suites = []
    if args.suite in ("all", "equivalence"):
        suites.append("equivalence")
        reports.extend(run_equivalence_suite(env))
    if args.suite in ("all", "invariance"):
        suites.append("invariance")
        reports.extend(run_invariance_suite(seed=args.seed, count=args.samples))
    if args.suite in ("all", "additivity"):
        suites.append("additivity")
        reports.extend(run_additivity_suite(seed=args.seed, count=args.samples))
    if args.suite in ("all", "ratio"):
        suites.append("ratio")
        reports.extend(run_ratio_suite(seed=args.seed, count=args.samples))
    reports.sort(key=lambda r: (r.name, r.instance))
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    doc = {
        "envelope": env.as_dict(),
        "seed": args.seed,
        "samples": args.samples,
        "suites": suites,
        "checks": len(reports),
        "counts": counts,
        "fails": [r.as_dict() for r in reports if r.status == STATUS_FAIL],
        "findings": [r.as_dict() for r in reports if r.status == STATUS_FINDING],
        "indeterminate": [
            r.as_dict() for r in reports if r.status == STATUS_INDETERMINATE
        ],
    }
    _emit(doc, args.out)
    if doc["fails"]:
        return EXIT_VERIFY
    if doc["findings"] or doc["indeterminate"]:
        return EXIT_COMPUTE
    return EXIT_OK


def _csv_records(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["vector", "C-real", "C-imag", "is-real", "bucket-id"])
    for r in records:
        if r.conductance.is_infinite:
            re_s = im_s = "inf"
        else:
            re, im = r.conductance.re, r.conductance.im
            re_s = f"{re.numerator}/{re.denominator}"
            im_s = f"{im.numerator}/{im.denominator}"
        w.writerow([r.vector, re_s, im_s, "true" if r.is_real else "false", r.bucket_id])
    return buf.getvalue()


def cmd_enumerate(args) -> int:
    env_pair = _parse_envelope(args.envelope)
    if env_pair is None:
        return _fail({"error": f"bad envelope {args.envelope!r}, expected n_max,a_max"}, EXIT_PARSE)
    env = Envelope(*env_pair)
    records, summary = enumerate_classify(env)
    if args.format == "csv":
        _write(_csv_records(records), args.out)
        if summary["findings"]:
            sys.stderr.write(json.dumps({"findings": summary["findings"]}, indent=2) + "\n")
    else:
        _emit({"summary": summary, "records": [r.as_dict() for r in records]}, args.out)
    return EXIT_COMPUTE if summary["findings"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="vtangle",
        description="Exact bracket and conductance computations for virtual rational tangles.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bracket", help="bracket triple (f, g, h) of a tangle vector")
    b.add_argument("vector", help="tangle vector, e.g. 2,-3v,1 or inf,2")
    b.add_argument("--out", help="write the document to a file instead of stdout")

    c = sub.add_parser(
        "conductance",
        help="conductance C of a tangle vector; all routes must agree",
    )
    c.add_argument("vector", help="tangle vector, e.g. 2,-3v,1 or inf,2")
    c.add_argument("--path", choices=_PATH_CHOICES, help="use one route instead of all")
    c.add_argument("--out", help="write the document to a file instead of stdout")

    f = sub.add_parser("fraction", help="classical continued fraction of a marker-free vector")
    f.add_argument("vector", help="marker-free tangle vector, e.g. 2,3,1")
    f.add_argument("--out", help="write the document to a file instead of stdout")

    v = sub.add_parser("verify", help="run the equivalence, invariance, additivity, and ratio suites")
    v.add_argument("--envelope", default="3,3", help="n_max,a_max bounds (default 3,3)")
    v.add_argument("--seed", type=int, default=0, help="seed for sampled suites")
    v.add_argument("--samples", type=int, default=100, help="sample count per sampled suite")
    v.add_argument(
        "--suite",
        choices=("all", "equivalence", "invariance", "additivity", "ratio"),
        default="all",
    )
    v.add_argument("--out", help="write the document to a file instead of stdout")

    e = sub.add_parser("enumerate", help="classify conductances over an envelope")
    e.add_argument("--envelope", default="3,3", help="n_max,a_max bounds (default 3,3)")
    e.add_argument("--format", choices=("json", "csv"), default="json")
    e.add_argument("--out", help="write the document to a file instead of stdout")

    return p


_HANDLERS = {
    "bracket": cmd_bracket,
    "conductance": cmd_conductance,
    "fraction": cmd_fraction,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except TangleError as exc:
        return _fail({"error": str(exc)}, EXIT_COMPUTE)
    except OSError as exc:
        return _fail({"error": str(exc)}, EXIT_COMPUTE)


def run() -> None:
    sys.exit(main())
