"""Command-line front end.

Every public library operation is reachable from at least one subcommand;
the ``COMMAND_OPERATIONS`` table records which command exercises what and
is kept in sync with the package surface by a test.  Output is plain,
stable and machine-readable: identical invocations print identical bytes.

Exit codes: 0 on success, 1 for invalid sequences or failed verification,
2 for usage and parse errors (argparse's convention).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import ImbalatticeError
from .irreducibility import (
    is_join_irreducible_by_balancing,
    is_join_irreducible_by_covers,
    is_join_irreducible_by_decomposition,
)
from .lattice import (
    DEFAULT_CEILING,
    balancing_step,
    enumerate_universe,
    excess_indices,
    hasse,
    hasse_dot,
    hasse_json,
    join,
    meet,
)
from .sequences import compare, format_sequence, parse_components, validate
from .trees import canonical_code, tree_ascii, tree_dot, tree_from_sequence
from .verify import CHECKS, run_checks

__all__ = ["COMMAND_OPERATIONS", "main"]

# command -> the public operations it drives (directly or through the
# library calls it makes); the coverage test keeps this exhaustive.
COMMAND_OPERATIONS: dict[str, tuple[str, ...]] = {
    "enumerate": ("enumerate_universe", "format_sequence"),
    "compare": ("validate", "parse_components", "compare", "scaled_partial_sums"),
    "meet": ("meet", "contraction", "upper_expansion", "lower_expansion",
             "suffix_length", "leq"),
    "join": ("join",),
    "hasse": ("hasse", "hasse_json", "hasse_dot"),
    "irreducibles": ("is_join_irreducible_by_covers", "is_join_irreducible_by_balancing",
                     "is_join_irreducible_by_decomposition", "decompose_segments",
                     "is_near_constant"),
    "balance": ("excess_indices", "balancing_step"),
    "tree": ("tree_from_sequence", "tree_ascii", "tree_dot"),
    "code": ("canonical_code",),
    "verify": ("run_checks", "enumerate_by_partition", "leq_by_definition",
               "meet_bruteforce", "join_bruteforce", "closure_equals_order",
               "minimal_balancing_relation", "covering_pairs", "expansion_at",
               "sequence_from_tree", "leaf_codewords", "nodes_within_depth",
               "sum_components", "bottom", "top"),
}


def _components(text: str) -> tuple[int, ...]:
    try:
        return parse_components(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _cmd_enumerate(args) -> int:
    universe = enumerate_universe(args.n, args.ceiling)
    if args.count:
        print(len(universe))
    elif args.format == "json":
        payload = {"n": universe.n, "nodes": [list(el.components) for el in universe]}
        print(json.dumps(payload, separators=(", ", ": ")))
    else:
        for el in universe:
            print(format_sequence(el))
    return 0


def _cmd_compare(args) -> int:
    print(compare(validate(args.left), validate(args.right)).value)
    return 0


def _cmd_meet(args) -> int:
    print(format_sequence(meet(validate(args.left), validate(args.right))))
    return 0


def _cmd_join(args) -> int:
    print(format_sequence(join(validate(args.left), validate(args.right), args.ceiling)))
    return 0


def _cmd_hasse(args) -> int:
    universe = hasse(args.n, args.ceiling)
    if args.dot:
        Path(args.dot).write_text(hasse_dot(universe))
    if args.json or not args.dot:
        print(hasse_json(universe))
    return 0


def _cmd_irreducibles(args) -> int:
    universe = enumerate_universe(args.n, args.ceiling)
    verdicts = {}
    for el in universe:
        votes = {
            "covers": is_join_irreducible_by_covers(el, universe),
            "balancing": is_join_irreducible_by_balancing(el),
            "decomposition": is_join_irreducible_by_decomposition(el),
        }
        if args.method == "all":
            if len(set(votes.values())) != 1:
                detail = ", ".join(f"{k}={v}" for k, v in votes.items())
                print(f"disagreement at {format_sequence(el)}: {detail}", file=sys.stderr)
                return 1
            verdicts[el] = votes["covers"]
        else:
            verdicts[el] = votes[args.method]
    for el in universe:
        if verdicts[el]:
            print(format_sequence(el))
    return 0


def _cmd_balance(args) -> int:
    l = validate(args.sequence)
    if args.at is not None:
        print(format_sequence(balancing_step(l, args.at)))
    else:
        for j in excess_indices(l):
            print(f"{j} {format_sequence(balancing_step(l, j))}")
    return 0


def _cmd_tree(args) -> int:
    tree = tree_from_sequence(validate(args.sequence))
    if args.dot:
        Path(args.dot).write_text(tree_dot(tree))
    print(tree_ascii(tree), end="")
    return 0


def _cmd_code(args) -> int:
    for word in canonical_code(validate(args.sequence)):
        print(word)
    return 0


def _cmd_verify(args) -> int:
    reports = run_checks(args.n, names=args.properties or None, ceiling=args.ceiling)
    for report in reports:
        print(report.to_json() if args.format == "json" else str(report))
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="imbalattice",
        description="Exact computations on the imbalance lattice of "
                    "binary-tree path-length sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        cmd = sub.add_parser(name, help=help_text)
        cmd.set_defaults(handler=handler)
        return cmd

    def add_ceiling(cmd):
        cmd.add_argument("--ceiling", type=_positive, default=DEFAULT_CEILING,
                         help="enumeration size ceiling (default %(default)s)")

    cmd = add("enumerate", _cmd_enumerate, "list every sequence of a given length")
    cmd.add_argument("n", type=_positive)
    cmd.add_argument("--count", action="store_true", help="print only the count")
    cmd.add_argument("--format", choices=("lines", "json"), default="lines")
    add_ceiling(cmd)

    cmd = add("compare", _cmd_compare, "compare two sequences in the balance order")
    cmd.add_argument("left", type=_components)
    cmd.add_argument("right", type=_components)

    cmd = add("meet", _cmd_meet, "greatest lower bound of two sequences")
    cmd.add_argument("left", type=_components)
    cmd.add_argument("right", type=_components)

    cmd = add("join", _cmd_join, "least upper bound of two sequences")
    cmd.add_argument("left", type=_components)
    cmd.add_argument("right", type=_components)
    add_ceiling(cmd)

    cmd = add("hasse", _cmd_hasse, "covering structure as JSON and optional DOT")
    cmd.add_argument("n", type=_positive)
    cmd.add_argument("--json", action="store_true",
                     help="print JSON even when --dot is given")
    cmd.add_argument("--dot", metavar="PATH", help="write a Graphviz file here")
    add_ceiling(cmd)

    cmd = add("irreducibles", _cmd_irreducibles, "join-irreducible elements")
    cmd.add_argument("n", type=_positive)
    cmd.add_argument("--method", default="all",
                     choices=("covers", "balancing", "decomposition", "all"),
                     help="'all' cross-checks the three tests (default)")
    add_ceiling(cmd)

    cmd = add("balance", _cmd_balance, "balancing moves available at a sequence")
    cmd.add_argument("sequence", type=_components)
    cmd.add_argument("--at", type=_positive, metavar="J",
                     help="apply only the move at excess index J")

    cmd = add("tree", _cmd_tree, "render the canonical tree")
    cmd.add_argument("sequence", type=_components)
    cmd.add_argument("--dot", metavar="PATH", help="write a Graphviz file here")

    cmd = add("code", _cmd_code, "canonical prefix code, one codeword per line")
    cmd.add_argument("sequence", type=_components)

    cmd = add("verify", _cmd_verify, "run the law suite up to a given length")
    cmd.add_argument("n", type=_positive)
    cmd.add_argument("--property", dest="properties", action="append",
                     choices=sorted(CHECKS), metavar="NAME",
                     help="run only the named checks (repeatable); "
                          "one of: " + ", ".join(sorted(CHECKS)))
    cmd.add_argument("--format", choices=("text", "json"), default="text")
    add_ceiling(cmd)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ImbalatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
