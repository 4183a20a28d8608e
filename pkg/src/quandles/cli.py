"""Command-line front end.

Matrices travel as text files (or '-' for stdin): optional '#' comment
lines, then n lines of n space-separated integers.  Exit codes: 0 success,
1 invalid matrix / semantic failure (including "not isomorphic"), 2 usage
error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import construct
from ._kernel import backend
from .enumeration import (
    EnumerationOptions,
    EnumerationReport,
    ResourceLimitError,
    enumerate_all,
    enumerate_classes,
)
from .matrix import QuandleMatrix, QuandleParseError, VerificationReport, parse_matrix
from .symmetry import (
    are_isomorphic,
    automorphism_group,
    canonical_form,
    determinant,
    identify_group,
    np_count,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _failure_text(report: VerificationReport) -> str:
    cond, w = report.failures[0]
    if cond == "diagonal":
        return f"diagonal condition fails: rows {w[0]} and {w[1]} share a diagonal value"
    if cond == "column":
        return f"column condition fails: column {w[2]} repeats a value in rows {w[0]} and {w[1]}"
    return f"distributivity fails at triple (i, j, k) = ({w[0]}, {w[1]}, {w[2]})"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


class _Invalid(Exception):
    def __init__(self, message: str):
        self.message = message


def _load(path: str) -> QuandleMatrix:
    """Parse, verify, and standardize one matrix argument."""
    try:
        m = parse_matrix(_read_text(path))
    except (OSError, QuandleParseError) as exc:
        raise _Invalid(f"{path}: {exc}") from exc
    report = m.verify()
    if not report.valid:
        raise _Invalid(f"{path}: invalid: {_failure_text(report)}")
    return m.standardized()


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _cmd_verify(args) -> int:
    try:
        m = parse_matrix(_read_text(args.file))
    except (OSError, QuandleParseError) as exc:
        print(f"invalid: {exc}")
        return EXIT_INVALID
    report = m.verify()
    if report.valid:
        print("valid")
        return EXIT_OK
    print(f"invalid: {_failure_text(report)}")
    return EXIT_INVALID


def _cmd_props(args) -> int:
    m = _load(args.file)
    aut = automorphism_group(m)
    print(f"n: {m.n}")
    print(f"trace: {m.trace()}")
    print(f"latin: {_yesno(m.is_latin())}")
    print(f"connected: {_yesno(m.is_connected())}")
    print("orbits: " + " ".join("{" + ",".join(map(str, b)) + "}" for b in m.orbits()))
    print(f"aut_order: {aut.order}")
    print(f"aut_label: {identify_group(aut).label}")
    print(f"np: {np_count(m)}")
    return EXIT_OK


def _cmd_iso(args) -> int:
    a = _load(args.file_a)
    b = _load(args.file_b)
    witness = are_isomorphic(a, b)
    if witness is None:
        print("not isomorphic")
        return EXIT_INVALID
    print(str(witness))
    return EXIT_OK


def _cmd_aut(args) -> int:
    m = _load(args.file)
    aut = automorphism_group(m)
    print(f"order: {aut.order}")
    print(f"label: {identify_group(aut).label}")
    for g in aut.elements():
        print(str(g))
    return EXIT_OK


def _cmd_canon(args) -> int:
    print(canonical_form(_load(args.file)).to_text())
    return EXIT_OK


def _cmd_np(args) -> int:
    print(np_count(_load(args.file)))
    return EXIT_OK


def _cmd_dual(args) -> int:
    print(_load(args.file).dual().to_text())
    return EXIT_OK


def _cmd_det(args) -> int:
    print(determinant(_load(args.file)))
    return EXIT_OK


def _cmd_make(args) -> int:
    try:
        m = construct.make(args.constructor)
    except ValueError as exc:
        raise _Invalid(str(exc)) from exc
    print(m.to_text())
    return EXIT_OK


def _print_classes_human(report: EnumerationReport) -> None:
    print(
        f"order {report.n}: {len(report.classes)} classes, "
        f"{report.total_valid_matrices} standard-form matrices "
        f"({report.strategy}, {report.elapsed:.2f}s)"
    )
    for k, rec in enumerate(report.classes, start=1):
        print()
        print(
            f"#{k}  Aut = {rec.aut_id.label} (order {rec.aut_order})  "
            f"N_p = {rec.np}  latin = {_yesno(rec.latin)}  "
            f"connected = {_yesno(rec.connected)}"
        )
        print(rec.representative.to_text())


def _print_classes_machine(report: EnumerationReport) -> None:
    for rec in report.classes:
        print(rec.representative.to_machine_line())
        print(
            f"aut={rec.aut_order}:{rec.aut_id.label} np={rec.np} "
            f"latin={int(rec.latin)} connected={int(rec.connected)}"
        )


def _cmd_enumerate(args) -> int:
    opts = EnumerationOptions(
        strategy=args.strategy,
        jobs=args.jobs,
        emit="all-matrices" if args.all else "classes",
        max_placements=args.cap,
    )
    if args.all:
        matrices = list(enumerate_all(args.n, opts))
        if args.machine:
            for m in matrices:
                print(m.to_machine_line())
        else:
            print(f"order {args.n}: {len(matrices)} standard-form matrices ({opts.strategy})")
            for m in matrices:
                print()
                print(m.to_text())
        return EXIT_OK
    report = enumerate_classes(args.n, opts)
    if args.machine:
        _print_classes_machine(report)
    else:
        _print_classes_human(report)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandle",
        description="Finite quandle tables: validation, invariants, isomorphism, enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the three quandle-table conditions")
    p.add_argument("file", help="matrix file, or - for stdin")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("props", help="print order, trace, latin/connected flags, orbits, Aut data")
    p.add_argument("file")
    p.set_defaults(func=_cmd_props)

    p = sub.add_parser("iso", help="find a relabelling witness between two tables")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("aut", help="print the automorphism group")
    p.add_argument("file")
    p.set_defaults(func=_cmd_aut)

    p = sub.add_parser("canon", help="print the canonical form")
    p.add_argument("file")
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("np", help="print the number of standard-form tables in the class")
    p.add_argument("file")
    p.set_defaults(func=_cmd_np)

    p = sub.add_parser("dual", help="print the dual table")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("det", help="print the exact determinant of the entry matrix")
    p.add_argument("file")
    p.set_defaults(func=_cmd_det)

    p = sub.add_parser("make", help="build a named quandle, e.g. trivial:3 or dihedral:5")
    p.add_argument(
        "constructor",
        help="trivial:<n> | dihedral:<n> | alexander:<m>:<coeffs> | "
        "conj:<degree>:<elements>[:<exponent>]",
    )
    p.set_defaults(func=_cmd_make)

    p = sub.add_parser("enumerate", help="classify all quandles of one order")
    p.add_argument("n", type=int)
    p.add_argument("--strategy", choices=("naive", "backtracking"), default="backtracking")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers (default 1)")
    p.add_argument("--all", action="store_true", help="emit every table instead of classes")
    p.add_argument("--machine", action="store_true", help="line-oriented machine format")
    p.add_argument("--cap", type=int, default=EnumerationOptions().max_placements,
                   help="abort after this many column placements")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("backend", help="report which scan kernel is active")
    p.set_defaults(func=lambda args: (print(backend()), EXIT_OK)[1])

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Invalid as exc:
        print(exc.message, file=sys.stderr)
        return EXIT_INVALID
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
