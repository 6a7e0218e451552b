"""Command-line front end: decide, verify, crosscheck and brute subcommands.

Exit codes are uniform across subcommands: 0 for existence or consistency,
1 for non-existence or a refutation, 2 for malformed input.  Outputs are
line-oriented and deterministic; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .cardinal import ALEPH0, Cardinal, MAX_ALEPH_INDEX
from .concrete import (
    ConcreteSet,
    FamilyEnumerationError,
    local_design_check,
)
from .descriptors import SpaceDescriptor, SubsetDescriptor, validate
from .designs import (
    ClassW,
    DescriptorError,
    DesignType,
    OddTail,
    Singleton,
    Verdict,
    decide,
    sweep,
)
from .finitebrute import brute_lambda, parse_instance

EXIT_EXISTS = 0
EXIT_NOT_EXISTS = 1
EXIT_INPUT_ERROR = 2


class QueryError(ValueError):
    """Malformed query file; the message carries line/field context."""


@dataclass(frozen=True)
class Query:
    space: SpaceDescriptor
    c: SubsetDescriptor
    d: SubsetDescriptor
    design_type: DesignType


def _parse_fields(text: str) -> dict[str, str]:
    fields: dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise QueryError(f"line {line_no}: expected 'key: value', got {raw!r}")
        key = key.strip()
        value = value.strip()
        if key in fields:
            raise QueryError(f"line {line_no}: duplicate key {key!r}")
        fields[key] = value
    return fields


_KNOWN_KEYS = {
    "space.size",
    "type",
    "C.size",
    "C.contains_b",
    "C.b",
    "C.cosize",
    "D.size",
    "D.contains_b",
    "D.b",
    "D.cosize",
}


def _parse_bool(key: str, value: str) -> bool:
    lowered = value.lower()
    if lowered not in ("true", "false"):
        raise QueryError(f"field {key}: expected true or false, got {value!r}")
    return lowered == "true"


def _parse_subset(
    name: str, fields: dict[str, str], space: SpaceDescriptor
) -> SubsetDescriptor:
    size_key = f"{name}.size"
    if size_key not in fields:
        raise QueryError(f"missing field {size_key}")
    try:
        size = Cardinal.parse(fields[size_key])
    except ValueError as exc:
        raise QueryError(f"field {size_key}: {exc}") from exc
    flag_key = f"{name}.contains_b" if f"{name}.contains_b" in fields else f"{name}.b"
    if flag_key not in fields:
        raise QueryError(f"missing field {name}.contains_b")
    contains_b = _parse_bool(flag_key, fields[flag_key])
    cosize_key = f"{name}.cosize"
    if cosize_key in fields:
        try:
            cosize = Cardinal.parse(fields[cosize_key])
        except ValueError as exc:
            raise QueryError(f"field {cosize_key}: {exc}") from exc
    elif size < space.size:
        cosize = space.size  # forced by the partition invariant
    else:
        raise QueryError(
            f"field {cosize_key} is required when {size_key} equals the space size"
        )
    return SubsetDescriptor(size, contains_b, cosize)


def parse_query(text: str) -> Query:
    fields = _parse_fields(text)
    unknown = sorted(set(fields) - _KNOWN_KEYS)
    if unknown:
        raise QueryError(f"unknown field(s): {', '.join(unknown)}")
    if "space.size" not in fields:
        raise QueryError("missing field space.size")
    try:
        space_size = Cardinal.parse(fields["space.size"])
        space = SpaceDescriptor(space_size)
    except ValueError as exc:
        raise QueryError(f"field space.size: {exc}") from exc
    if "type" not in fields:
        raise QueryError("missing field type")
    if fields["type"] not in ("1", "2", "3", "4"):
        raise QueryError(f"field type: expected 1..4, got {fields['type']!r}")
    design_type = DesignType(int(fields["type"]))
    c = _parse_subset("C", fields, space)
    d = _parse_subset("D", fields, space)
    for name, subset in (("C", c), ("D", d)):
        problems = validate(subset, space)
        if problems:
            raise QueryError(f"{name}: " + "; ".join(problems))
    return Query(space, c, d, design_type)


def _print_verdict(verdict: Verdict, design_type: DesignType, fmt: str) -> None:
    if fmt == "record":
        for key, value in verdict.to_record():
            print(f"{key}: {value}")
    else:
        t = int(design_type)
        if verdict.exists:
            print(
                f"type-{t} design exists: lambda = {verdict.lambda_}, "
                f"witness = {verdict.witness.to_text()} [case {verdict.case_tag}]"
            )
        else:
            print(f"no type-{t} design: {verdict.reason} [case {verdict.case_tag}]")


def _cmd_decide(args: argparse.Namespace) -> int:
    query = parse_query(_read_file(args.query))
    verdict = decide(query.design_type, query.c, query.d, query.space)
    _print_verdict(verdict, query.design_type, args.format)
    return EXIT_EXISTS if verdict.exists else EXIT_NOT_EXISTS


def _refutation_demo_report(cutoff: int):
    """The boundary scenario card(C) + 1 = card(D): counts cannot be uniform."""
    d = SubsetDescriptor(Cardinal.finite(3), True, ALEPH0)
    c = SubsetDescriptor(Cardinal.finite(2), True, ALEPH0)
    probes = [ConcreteSet.finite((0, 5)), ConcreteSet.finite((5, 6))]
    report = local_design_check(ClassW(d), c, d, probes, cutoff)
    return c, d, report


def _print_check_report(report, fmt: str) -> None:
    if fmt == "record":
        print(f"family: {report.family.to_text()}")
        print(f"blocks_checked: {report.blocks_checked}")
        print(f"block_failures: {len(report.block_failures)}")
        for failure in report.block_failures:
            print(f"block_failure: {failure}")
        for probe in report.probes:
            print(f"probe: {probe.probe.to_text()} count: {probe.count}")
        if report.refutation is None:
            print("refutation: none")
        else:
            first, second = report.refutation
            print(
                f"refutation: {first.probe.to_text()} {first.display_count()} "
                f"vs {second.probe.to_text()} {second.display_count()}"
            )
        print(f"consistent: {'true' if report.consistent else 'false'}")
    else:
        print(
            f"checked {report.blocks_checked} blocks of {report.family.to_text()}: "
            f"{len(report.block_failures)} shape failure(s)"
        )
        for probe in report.probes:
            print(f"  {probe.probe.to_text()} lies in {probe.count} blocks")
        if report.refutation is None:
            print("no refutation found: counts are consistent up to the cutoff")
        else:
            first, second = report.refutation
            print(
                f"refuted: {first.probe.to_text()} ({first.display_count()}) vs "
                f"{second.probe.to_text()} ({second.display_count()})"
            )


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.refutation_demo:
        _, _, report = _refutation_demo_report(args.cutoff)
        _print_check_report(report, args.format)
        return EXIT_EXISTS if report.consistent else EXIT_NOT_EXISTS
    if args.query is None:
        raise QueryError("a query file is required unless --refutation-demo is given")
    query = parse_query(_read_file(args.query))
    if query.space.size != ALEPH0:
        raise QueryError(
            "concrete verification runs over the countable model; "
            "space.size must be aleph0"
        )
    verdict = decide(query.design_type, query.c, query.d, query.space)
    if not verdict.exists:
        raise QueryError(
            f"nothing to verify: decision is NotExists [case {verdict.case_tag}]"
        )
    try:
        probes = [ConcreteSet.parse(text) for text in args.probes]
    except ValueError as exc:
        raise QueryError(str(exc)) from exc
    require_complement = query.design_type in (DesignType.TYPE1, DesignType.TYPE3)
    report = local_design_check(
        verdict.witness,
        query.c,
        query.d,
        probes,
        args.cutoff,
        require_complement=require_complement,
    )
    if report.rejected:
        names = ", ".join(p.to_text() for p in report.rejected)
        raise QueryError(f"probe(s) not shaped like C: {names}")
    _print_check_report(report, args.format)
    return EXIT_EXISTS if report.consistent else EXIT_NOT_EXISTS


def _cmd_crosscheck(args: argparse.Namespace) -> int:
    if not (0 <= args.grid_max_aleph <= MAX_ALEPH_INDEX):
        raise QueryError(
            f"--grid-max-aleph must lie in 0..{MAX_ALEPH_INDEX}"
        )
    if args.max_finite < 1:
        raise QueryError("--max-finite must be >= 1")
    report = sweep(
        max_aleph=args.grid_max_aleph,
        max_finite=args.max_finite,
        finite_sizes_only=args.finite_sizes_only,
        inject_fault=args.inject_fault,
    )
    for violation in report.violations:
        print(f"violation: {violation}")
    print(f"{len(report.violations)} violations / {report.cases} cases")
    return EXIT_EXISTS if report.consistent else EXIT_NOT_EXISTS


def _cmd_brute(args: argparse.Namespace) -> int:
    instance = parse_instance(_read_file(args.instance))
    if args.t is not None:
        if not (1 <= args.t <= instance.d_size):
            raise QueryError("--t must satisfy 1 <= t <= d_size")
        instance = type(instance)(
            n=instance.n,
            blocks=instance.blocks,
            c_size=args.t,
            d_size=instance.d_size,
        )
    outcome = brute_lambda(instance, DesignType(args.design_type))
    print(str(outcome))
    return EXIT_EXISTS if outcome.uniform else EXIT_NOT_EXISTS


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise QueryError(f"cannot read {path}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fortdesign",
        description="Decide and verify block designs over infinite Fort spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    decide_p = sub.add_parser("decide", help="decide existence for a query file")
    decide_p.add_argument("query", help="query file (key: value lines)")
    decide_p.add_argument(
        "--format", choices=("text", "record"), default="record"
    )
    decide_p.set_defaults(handler=_cmd_decide)

    verify_p = sub.add_parser(
        "verify", help="check a witness family against concrete probes"
    )
    verify_p.add_argument("query", nargs="?", help="query file")
    verify_p.add_argument(
        "probes", nargs="*", help="probes as fin:... / cofin:... strings"
    )
    verify_p.add_argument("--cutoff", type=int, default=50)
    verify_p.add_argument(
        "--refutation-demo",
        action="store_true",
        help="run the canned card(C)+1 = card(D) non-uniformity scenario",
    )
    verify_p.add_argument(
        "--format", choices=("text", "record"), default="record"
    )
    verify_p.set_defaults(handler=_cmd_verify)

    cross_p = sub.add_parser(
        "crosscheck", help="sweep the descriptor grid for consistency"
    )
    cross_p.add_argument("--grid-max-aleph", type=int, default=1)
    cross_p.add_argument("--max-finite", type=int, default=6)
    cross_p.add_argument("--finite-sizes-only", action="store_true")
    cross_p.add_argument(
        "--inject-fault",
        action="store_true",
        help="self-test: flip one statement to prove the sweep detects faults",
    )
    cross_p.set_defaults(handler=_cmd_crosscheck)

    brute_p = sub.add_parser(
        "brute", help="brute-force a finite instance file"
    )
    brute_p.add_argument("instance", help="instance file (n, c_size, d_size header)")
    brute_p.add_argument("--t", type=int, default=None, help="override the probe size")
    brute_p.add_argument(
        "--design-type", type=int, choices=(1, 2, 3, 4), default=2
    )
    brute_p.set_defaults(handler=_cmd_brute)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (QueryError, DescriptorError, FamilyEnumerationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def entrypoint() -> None:
    sys.exit(main())
