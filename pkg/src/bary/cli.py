"""Command line: ``bary <command> --base B --n N ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from . import counting, lattice, oracle, tree
from .config import DEFAULT_LIMITS, Limits
from .core import Partition, shot_vector, value
from .errors import BaryError, CapExceeded
from .export import diagram_to_dot, diagram_to_json, tree_to_dot
from .verify import Suite

EXIT_VERIFY, EXIT_USAGE, EXIT_CAP = 1, 2, 3


class UsageError(Exception):
    pass


def _basis(text):
    try:
        b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid basis {text!r}") from None
    if b < 2:
        raise argparse.ArgumentTypeError("basis must be >= 2")
    return b


def _natural(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def _common(p, n_required=True, formats=None):
    p.add_argument("-b", "--base", type=_basis, required=True)
    p.add_argument("--n", type=_natural, required=n_required)
    p.add_argument("--cap", type=_natural, default=DEFAULT_LIMITS.max_nodes)
    p.add_argument("--output", metavar="FILE")
    if formats:
        p.add_argument("--format", choices=formats, default=formats[0])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bary", description="b-ary partitions of integers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of b-ary partitions of n")
    _common(p)
    p.add_argument("--method", choices=["recurrence", "sum", "pi", "oracle"], default="recurrence")

    p = sub.add_parser("enum", help="list the b-ary partitions of n")
    _common(p, formats=["lines", "json", "dot"])

    p = sub.add_parser("hasse", help="covering diagram of R_b(n)")
    _common(p, formats=["json", "dot", "lines"])
    p.add_argument("--method", choices=["direct", "incremental"], default="direct")

    p = sub.add_parser("tree", help="levels 0..n of the partition tree")
    _common(p, formats=["lines", "json", "dot"])

    for name in ("meet", "join", "leq"):
        p = sub.add_parser(name, help=f"{name} of two partitions of n")
        _common(p)
        p.add_argument("p")
        p.add_argument("q")

    p = sub.add_parser("shots", help="shot vector of a partition")
    _common(p, n_required=False)
    p.add_argument("p")

    p = sub.add_parser("verify", help="cross-check every construction against the oracle")
    p.add_argument("-b", "--base", type=_basis, required=True)
    p.add_argument("--max-n", type=_natural, required=True)
    p.add_argument("--output", metavar="FILE")
    return parser


def _partition_arg(text, b, n):
    try:
        p = Partition.parse(text, b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if n is not None and value(p) != n:
        raise UsageError(f"{text} has value {value(p)}, not {n}")
    return p


def _reject_dot(args):
    if args.format == "dot":
        raise UsageError(f"--format dot is not available for {args.command}")


def cmd_count(args):
    b, n = args.base, args.n
    if args.method == "oracle":
        return str(oracle.brute_count(n, b))
    fn = {
        "recurrence": counting.count,
        "sum": counting.count_sum_form,
        "pi": counting.count_via_pi,
    }[args.method]
    return str(fn(n, b))


def cmd_enum(args):
    _reject_dot(args)
    parts = list(tree.iter_partitions(args.n, args.base, args.cap))
    if args.format == "json":
        return json.dumps([list(p.parts) for p in parts])
    return "\n".join(p.text() for p in parts)


def cmd_hasse(args):
    b, n = args.base, args.n
    if args.method == "direct":
        d = lattice.build_hasse(n, b, args.cap)
    else:
        if counting.count(n, b) > args.cap:
            raise CapExceeded(f"R_{b}({n}) has more than {args.cap} elements")
        d = lattice.grow_hasse(n, b)
    if args.format == "dot":
        return diagram_to_dot(d).rstrip("\n")
    if args.format == "lines":
        return "\n".join(f"{d.nodes[u].text()} -{i}-> {d.nodes[v].text()}" for u, v, i in d.edges)
    return diagram_to_json(d)


def cmd_tree(args):
    lvls = [lv.members for lv in tree.levels(args.base, args.n, args.cap)]
    if args.format == "json":
        return json.dumps([[list(t.parts) for t in lv] for lv in lvls])
    if args.format == "dot":
        return tree_to_dot(args.base, lvls).rstrip("\n")
    return "\n".join(f"{d}: " + " ".join(t.text() for t in lv) for d, lv in enumerate(lvls))


def cmd_order(args):
    b, n = args.base, args.n
    p = _partition_arg(args.p, b, n)
    q = _partition_arg(args.q, b, n)
    if args.command == "leq":
        return "true" if lattice.leq(p, q, n) else "false"
    op = lattice.meet if args.command == "meet" else lattice.join
    return op(p, q, n).text()


def cmd_shots(args):
    p = _partition_arg(args.p, args.base, args.n)
    return shot_vector(p, value(p)).text()


@contextmanager
def _sink(path):
    if path:
        with open(path, "w") as fh:
            yield fh
    else:
        yield sys.stdout


def cmd_verify(args):
    ok = True
    with _sink(args.output) as out:
        for res in Suite(args.base, args.max_n, Limits()).run():
            print(res.line(), file=out, flush=True)
            ok = ok and res.passed
    return EXIT_VERIFY if not ok else 0


COMMANDS = {
    "count": cmd_count,
    "enum": cmd_enum,
    "hasse": cmd_hasse,
    "tree": cmd_tree,
    "meet": cmd_order,
    "join": cmd_order,
    "leq": cmd_order,
    "shots": cmd_shots,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        text = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"bary: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"bary: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except BaryError as exc:
        print(f"bary: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with _sink(args.output) as out:
        out.write(text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
