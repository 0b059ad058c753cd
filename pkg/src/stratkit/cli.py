"""Command-line interface.

Exit codes: 0 success or verdict as expected; 1 verdict mismatch or a
theorem precondition failure; 2 input or parse error; 3 internal
equivalence disagreement (a library defect, never bad input). Document
arguments are file paths, with ``-`` meaning stdin. Output carries no
timestamps, so identical invocations are byte-identical.

The environment variable STRATKIT_MAX_POINTS raises the guards on the
subset-enumerating operations and on ``verify --points``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import topology
from .decomposition import (
    Decomposition,
    PosetStratification,
    as_poset_stratified,
    classify,
    stratification_from_open_map,
)
from .documents import Document, load, payload_of, save
from .dot import export_dot
from .errors import InternalInvariantError, ParseError, PreconditionError, ValidationError
from .fixtures import fixture, fixture_names
from .generate import generate
from .oracle import exhaustive_verify
from .order import Poset, Proset

LADDER = ("decomposition", "alexandrov", "poset-stratified", "stratification")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stratkit",
        description="Classify decompositions of finite spaces and verify the "
        "order-theoretic characterizations behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="full classification report for a decomposition")
    p.add_argument("document")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("classify", help="ladder verdict for a decomposition")
    p.add_argument("document")
    p.add_argument("--expect", choices=LADDER)

    p = sub.add_parser("quotient", help="decomposition space as a space document")
    p.add_argument("document")

    p = sub.add_parser("preorder", help="decomposition preorder as a proset document")
    p.add_argument("document")
    p.add_argument("--dot", action="store_true")

    p = sub.add_parser("coarsen", help="merge strata along preorder equivalence classes")
    p.add_argument("document")

    p = sub.add_parser(
        "theorem-a", help="frontier partial order of a stratification (errors if not one)"
    )
    p.add_argument("document")

    p = sub.add_parser(
        "theorem-b",
        help="confirm a stratification from an open quotient map over a given order",
    )
    p.add_argument("document")
    p.add_argument("order")

    p = sub.add_parser("verify", help="exhaustive sweep over all small instances")
    p.add_argument("--exhaustive", action="store_true", required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("gen", help="seeded random preorder or partition document")
    p.add_argument("--kind", choices=("preorder", "partition"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--density", type=float)
    p.add_argument("--blocks", type=int)
    p.add_argument("--space")

    p = sub.add_parser("fixture", help="list the catalog or show one entry")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")

    p = sub.add_parser("export-dot", help="DOT rendering of an order or decomposition")
    p.add_argument("document")

    return parser


def _read_document(path: str) -> Document:
    if path == "-":
        return load(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as handle:
            return load(handle.read())
    except OSError as exc:
        raise ValidationError(f"cannot read {path!r}: {exc.strerror}") from None


def _as_decomposition(doc: Document) -> Decomposition:
    if not isinstance(doc.value, Decomposition):
        raise ValidationError(f"expected a decomposition document, got kind {doc.kind!r}")
    return doc.value


def _as_order(doc: Document) -> Poset:
    if not isinstance(doc.value, Poset):
        raise ValidationError(
            f"expected a poset or order-on-strata document, got kind {doc.kind!r}"
        )
    return doc.value


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _report_text(report) -> str:
    lines = [f"verdict: {report.verdict()}"]
    for group_name, group in (
        ("alexandrov", report.alexandrov),
        ("frontier", report.frontier),
        ("poset_stratified", report.poset_stratified),
    ):
        flags = " ".join(
            f"{label}={str(value).lower()}" for label, value in zip(group.labels, group.values)
        )
        lines.append(f"{group_name}: {flags}")
    lines.append(f"locally_finite: {str(report.locally_finite).lower()}")
    lines.append(
        "locally_closed: "
        + " ".join(f"{sid}={str(v).lower()}" for sid, v in report.locally_closed)
    )
    strat = report.stratification
    lines.append(f"stratification: {str(strat.holds).lower()}")
    for reason in strat.reasons:
        lines.append(f"  - {reason}")
    semi = report.semicontinuity
    lines.append(
        "semicontinuity: "
        f"sat_open_open={str(semi.sat_open_open).lower()} "
        f"sat_closed_closed={str(semi.sat_closed_closed).lower()} "
        f"pi_open={str(semi.pi_open).lower()} "
        f"pi_closed={str(semi.pi_closed).lower()} "
        f"label={semi.label}"
    )
    if report.witnesses:
        lines.append("witnesses:")
        for label, text in report.witnesses:
            lines.append(f"  {label}: {text}")
    return "\n".join(lines) + "\n"


def _cmd_check(args) -> int:
    report = classify(_as_decomposition(_read_document(args.document)))
    if args.format == "json":
        _emit(_dump_json(report.to_json_dict()))
    else:
        _emit(_report_text(report))
    return 0


def _cmd_classify(args) -> int:
    dec = _as_decomposition(_read_document(args.document))
    report = classify(dec)
    verdict = report.verdict()
    _emit(f"verdict: {verdict}\n")
    if args.expect is None or args.expect == verdict:
        return 0
    _emit(f"expected: {args.expect}\n")
    if LADDER.index(verdict) < LADDER.index("stratification") and args.expect == "stratification":
        for reason in report.stratification.reasons:
            _emit(f"reason: {reason}\n")
    elif args.expect == "poset-stratified" and not report.poset_stratified.value:
        _emit("reason: no partial order on the strata makes the quotient map continuous\n")
    return 1


def _cmd_quotient(args) -> int:
    dec = _as_decomposition(_read_document(args.document))
    _emit(save(Document("space", dec.quotient_space)))
    return 0


def _cmd_preorder(args) -> int:
    dec = _as_decomposition(_read_document(args.document))
    if args.dot:
        _emit(export_dot(dec.preorder))
    else:
        _emit(save(Document("proset", dec.preorder)))
    return 0


def _cmd_coarsen(args) -> int:
    dec = _as_decomposition(_read_document(args.document))
    merged, ps = dec.coarsen()
    _emit(
        _dump_json(
            {
                "decomposition": payload_of(merged),
                "order": payload_of(ps.order, kind="order-on-strata"),
            }
        )
    )
    return 0


def _cmd_theorem_a(args) -> int:
    dec = _as_decomposition(_read_document(args.document))
    ps = as_poset_stratified(dec)
    _emit(save(Document("order-on-strata", ps.order)))
    return 0


def _cmd_theorem_b(args) -> int:
    dec = _as_decomposition(_read_document(args.document))
    order = _as_order(_read_document(args.order))
    check = dec.check_against_order(order)
    if not check.continuous:
        _emit(
            "precondition failed: decomposition map is not continuous for the "
            f"supplied order (open set {sorted(check.continuity_witness)} has a "
            "non-open preimage)\n"
        )
        return 1
    report = stratification_from_open_map(PosetStratification(dec, order))
    _emit("stratification confirmed\n")
    _emit(
        "order space locally finite: "
        f"{str(report.order_space_locally_finite).lower()}\n"
        f"quotient map open: {str(report.pi_open).lower()}\n"
        "supplied order refines the decomposition preorder: "
        f"{str(report.order_refines_decomposition_preorder).lower()}\n"
    )
    return 0


def _cmd_verify(args, max_points_override: int | None) -> int:
    max_n = 4 if max_points_override is None else max(4, max_points_override)
    report = exhaustive_verify(args.points, max_n=max_n)
    if args.format == "json":
        _emit(report.to_json())
    else:
        for name, tally in report.tallies:
            _emit(f"{name}: {tally.passed} passed, {tally.failed} failed\n")
        _emit(report.summary() + "\n")
    return 0 if report.failures == 0 else 3


def _cmd_gen(args) -> int:
    params = {}
    if args.density is not None:
        params["density"] = args.density
    if args.blocks is not None:
        params["blocks"] = args.blocks
    if args.space is not None:
        params["space"] = args.space
    doc = generate(args.kind, args.n, params, args.seed)
    _emit(save(doc))
    return 0


def _cmd_fixture(args) -> int:
    if args.action == "list":
        for name in fixture_names():
            _emit(name + "\n")
        return 0
    if not args.name:
        raise ValidationError("fixture show needs a name")
    _emit(save(fixture(args.name).document))
    return 0


def _cmd_export_dot(args) -> int:
    doc = _read_document(args.document)
    if not isinstance(doc.value, (Decomposition, Proset)):
        raise ValidationError(f"cannot render document kind {doc.kind!r} as DOT")
    _emit(export_dot(doc.value))
    return 0


def _max_points_override() -> int | None:
    raw = os.environ.get("STRATKIT_MAX_POINTS")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError("STRATKIT_MAX_POINTS must be an integer") from None
    if value < 0:
        raise ValidationError("STRATKIT_MAX_POINTS must be nonnegative")
    topology.MAX_POINTS = value
    return value


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        override = _max_points_override()
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "quotient":
            return _cmd_quotient(args)
        if args.command == "preorder":
            return _cmd_preorder(args)
        if args.command == "coarsen":
            return _cmd_coarsen(args)
        if args.command == "theorem-a":
            return _cmd_theorem_a(args)
        if args.command == "theorem-b":
            return _cmd_theorem_b(args)
        if args.command == "verify":
            return _cmd_verify(args, override)
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "fixture":
            return _cmd_fixture(args)
        if args.command == "export-dot":
            return _cmd_export_dot(args)
        raise ValidationError(f"unknown command: {args.command!r}")
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        for reason in exc.reasons:
            print(f"reason: {reason}", file=sys.stderr)
        return 1
    except InternalInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
