"""Command-line interface: ``partition-gini <command> ...``.

Data goes to stdout, errors to stderr. Exit codes: 0 ok, 1 domain error
(invalid partition, weight mismatch, budget), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import dominance, series, width
from .dominance import Comparison, build_poset, compare
from .errors import BudgetExceeded, PartitionError, WeightMismatch
from .gini import e2_direct, gini, normalized_gini, normalized_gini_euclidean
from .partitions import (
    PartitionParseError,
    conjugate,
    count_partitions,
    format_partition,
    parse_partition,
)

FORMATS = ("json", "csv", "dot", "plain")
ALLOWED = {
    "gini": ("json", "plain"),
    "compare": ("json", "plain"),
    "hasse": ("dot", "json"),
    "gf": ("json", "csv", "plain"),
    "profile": ("json", "csv", "plain"),
    "width": ("json", "plain"),
}
DEFAULT_MAX_XDEG = 400


class CliError(Exception):
    def __init__(self, message: str, code: int = 1):
        super().__init__(message)
        self.code = code


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _parse(text: str):
    try:
        return parse_partition(text)
    except PartitionParseError as exc:
        raise CliError(str(exc), 2)
    except PartitionError as exc:
        raise CliError(f"invalid partition {text!r}: {exc}")


def _frac(f) -> str:
    return f"{f.numerator}/{f.denominator}"


def cmd_gini(args) -> str:
    p = _parse(args.partition)
    if p.weight < 1:
        raise CliError("gini needs a partition of a positive integer")
    out = {
        "partition": format_partition(p),
        "n": p.weight,
        "g": gini(p),
        "e2": e2_direct(p),
        "conjugate": format_partition(conjugate(p)),
    }
    if args.normalize:
        out["normalized"] = _frac(normalized_gini(p)) if p.weight >= 2 else None
        out["normalized_euclidean"] = _frac(normalized_gini_euclidean(p))
    if args.format == "plain":
        return "".join(f"{k}={'-' if v is None else v}\n" for k, v in out.items())
    return _dumps(out)


def cmd_compare(args) -> str:
    a, b = _parse(args.a), _parse(args.b)
    try:
        rel = compare(a, b)
    except WeightMismatch as exc:
        raise CliError(str(exc))
    out = {"a": format_partition(a), "b": format_partition(b), "relation": rel.value}
    note = None
    if rel in (Comparison.LESS, Comparison.GREATER) and a.weight >= 1:
        ga, gb = gini(a), gini(b)
        lo, hi = (ga, gb) if rel is Comparison.LESS else (gb, ga)
        out["gini"] = {"a": ga, "b": gb}
        out["gini_strictly_increases"] = lo < hi
        sym = "<" if ga < gb else (">" if ga > gb else "=")
        note = f"g: {ga} {sym} {gb}"
    if args.format == "plain":
        return rel.value + "\n" + (note + "\n" if note else "")
    return _dumps(out)


def cmd_hasse(args) -> str:
    poset = build_poset(args.n, max_nodes=args.max_nodes or dominance.DEFAULT_NODE_BUDGET)
    if args.format == "json":
        return _dumps(dominance.to_json_obj(poset))
    return dominance.to_dot(poset)


def _check_xdeg(N: int, args):
    limit = args.max_xdeg or DEFAULT_MAX_XDEG
    if N > limit:
        raise BudgetExceeded("x-degree budget (--max-xdeg)", N, limit)


def cmd_gf(args) -> str:
    _check_xdeg(args.N, args)
    coeffs = series.expand_product(args.N)
    if args.format == "plain":
        return "".join(series.render_row(n, c) + "\n" for n, c in enumerate(coeffs, 1))
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "exponent", "coefficient"])
        for n, c in enumerate(coeffs, 1):
            for e, k in c.terms():
                w.writerow([n, e, k])
        return buf.getvalue()
    return _dumps([series.coefficient_json(n, c) for n, c in enumerate(coeffs, 1)])


def cmd_profile(args) -> str:
    _check_xdeg(args.n, args)
    coeff = series.expand_product(args.n)[args.n - 1]
    prof = series.gini_profile(args.n, coeff)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "g", "count"])
        for g, c in prof.rows():
            w.writerow([args.n, g, c])
        return buf.getvalue()
    if args.format == "plain":
        return "".join(f"g={g}: {c}\n" for g, c in prof.rows())
    return _dumps({"n": args.n, "counts": [[g, c] for g, c in prof.rows()]})


def cmd_width(args) -> str:
    kwargs = {}
    if args.max_nodes:
        kwargs = {"max_nodes": args.max_nodes, "max_matching_nodes": args.max_nodes}
    rep = width.width_report(args.n, compute_exact=args.exact, **kwargs)
    if args.format == "plain":
        a = "-" if rep.a_n is None else rep.a_n
        return (
            f"n={rep.n} P(n)={count_partitions(rep.n)} b={rep.b_n} a={a} "
            f"early={rep.early_expr!r}\n"
        )
    return _dumps(rep.to_json_obj())


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partition-gini",
        description="Gini index of integer partitions, its generating function, "
        "and dominance-lattice width bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, default_format="json"):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=FORMATS, default=default_format)
        sp.set_defaults(func=func)
        return sp

    sp = add("gini", cmd_gini, "gini index, e2 and conjugate of a partition")
    sp.add_argument("partition", help="bracket form, e.g. [4,3,1,1]")
    sp.add_argument("--normalize", action="store_true",
                    help="also print g/C(n,2) and 2g/n^2")

    sp = add("compare", cmd_compare, "dominance comparison of two partitions")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("hasse", cmd_hasse, "Hasse diagram of the dominance order", "dot")
    sp.add_argument("n", type=_positive)
    sp.add_argument("--max-nodes", type=_positive, default=None)

    sp = add("gf", cmd_gf, "coefficients of x^1..x^N of the generating function")
    sp.add_argument("N", type=_positive)
    sp.add_argument("--max-xdeg", type=_positive, default=None)

    sp = add("profile", cmd_profile, "number of partitions of n per gini value")
    sp.add_argument("n", type=_positive)
    sp.add_argument("--max-xdeg", type=_positive, default=None)

    sp = add("width", cmd_width, "level-set bound b(n) and optionally exact width a(n)")
    sp.add_argument("n", type=_positive)
    sp.add_argument("--exact", action="store_true")
    sp.add_argument("--max-nodes", type=_positive, default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format not in ALLOWED[args.command]:
        print(f"error: --format {args.format} not supported by {args.command}",
              file=sys.stderr)
        return 2
    try:
        text = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BudgetExceeded as exc:
        print(f"error: {exc}; raise it with the budget flag", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
