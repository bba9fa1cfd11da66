"""Command-line front end: ``braidkit <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .alexander import alexander_burau, alexander_from_homfly, to_lspace_form
from .braid import closure_summary, is_positive, parse_braid, positive_braid_genus
from .dataset import load_dataset
from .errors import BraidkitError, NotLSpaceForm, ResourceLimit
from .graphmanifold import genus2_obstruction, parse_regina
from .homfly import Budget, homfly_az, homfly_vz, mfw_bound
from .polynomial import format_laurent
from .verify import SCHEMA_VERSION, default_budget_seconds, verify_records

__all__ = ["main", "build_parser", "VERIFY_CSV_COLUMNS"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

# column order of `verify --format csv`
VERIFY_CSV_COLUMNS = ("record", "check", "status", "expected", "got", "reason", "seconds")


def _emit(fmt: str, payload: dict, text: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(payload))
        writer.writerow([v if isinstance(v, (str, int, float)) or v is None else json.dumps(v)
                         for v in payload.values()])
        out.write(buf.getvalue())
    else:
        out.write(text + "\n")


def _budget(args) -> Budget:
    seconds = getattr(args, "budget_seconds", None)
    return Budget(seconds=default_budget_seconds() if seconds is None else seconds)


def _word(args):
    return parse_braid(args.braid, args.strands)


def cmd_invariants(args, out) -> int:
    w = _word(args)
    summary = closure_summary(w)
    info = {
        "word_length": w.word_length,
        "strands": w.strands,
        "components": summary.components,
        "writhe": summary.writhe,
        "positive": is_positive(w),
        "genus": None,
        "alexander": None,
        "lspace_form": None,
        "homfly": None,
        "mfw": None,
        "note": None,
    }
    if summary.is_knot and info["positive"]:
        info["genus"] = positive_braid_genus(w)
    if summary.is_knot:
        delta = alexander_burau(w)
        info["alexander"] = format_laurent(delta)
        try:
            info["lspace_form"] = str(to_lspace_form(delta))
        except NotLSpaceForm:
            pass
    try:
        p = homfly_vz(w, _budget(args))
        info["homfly"] = format_laurent(p)
        info["mfw"] = mfw_bound(p)
    except ResourceLimit as exc:
        info["note"] = f"HOMFLY skipped: {exc.reason}"
    text = "\n".join(f"{k}: {v}" for k, v in info.items() if v is not None)
    _emit(args.format, info, text, out)
    return EXIT_OK


def cmd_homfly(args, out) -> int:
    w = _word(args)
    p = homfly_az(w, _budget(args)) if args.az else homfly_vz(w, _budget(args))
    text = format_laurent(p)
    _emit(args.format, {"braid": str(w), "variables": "".join(p.variables), "homfly": text}, text, out)
    return EXIT_OK


def cmd_alexander(args, out) -> int:
    w = _word(args)
    if args.method == "homfly":
        delta = alexander_from_homfly(homfly_vz(w, _budget(args)))
    else:
        delta = alexander_burau(w)
    text = format_laurent(delta)
    _emit(args.format, {"braid": str(w), "method": args.method, "alexander": text}, text, out)
    return EXIT_OK


def cmd_mfw(args, out) -> int:
    w = _word(args)
    bound = mfw_bound(homfly_vz(w, _budget(args)))
    _emit(args.format, {"braid": str(w), "mfw": bound}, str(bound), out)
    return EXIT_OK


def cmd_obstruct(args, out) -> int:
    g = parse_regina(args.sfs)
    verdict = genus2_obstruction(g)
    if args.format == "json":
        payload = {
            "presentation": {
                "pieces": [{"base": p.base.value, "fibers": [list(f) for f in p.fibers]} for p in g.pieces],
                "gluings": [[m.a, m.b, m.c, m.d] for m in g.gluings],
            },
            **verdict.to_dict(),
        }
        _emit("json", payload, "", out)
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["verdict", "criterion", "joint", "applicable", "passed", "reason"])
        for c in verdict.criteria:
            writer.writerow([verdict.kind.value, c.name, c.joint, c.applicable, c.passed, c.reason])
    else:
        lines = [f"piece {k + 1}: {p}" for k, p in enumerate(g.pieces)]
        lines += [f"gluing {k + 1}: {m}" for k, m in enumerate(g.gluings)]
        lines.append(f"verdict: {verdict.kind.value} ({verdict.summary})")
        for c in verdict.criteria:
            state = "n/a" if not c.applicable else ("pass" if c.passed else "fail")
            lines.append(f"  [{state}] {c.name} @{c.joint}: {c.reason}")
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    cohort = None if args.cohort == "all" else args.cohort
    records = load_dataset(args.dataset, cohort)
    reports = verify_records(records, _budget(args), args.parallel)
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "reports": [r.to_dict() for r in reports]}
        out.write(json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(VERIFY_CSV_COLUMNS)
        for rep in reports:
            for c in rep.checks:
                writer.writerow([rep.record, c.name, c.status,
                                 json.dumps(c.expected), json.dumps(c.got), c.reason or "", f"{c.seconds:.3f}"])
    else:
        for rep in reports:
            marks = " ".join(f"{c.name}={c.status}" for c in rep.checks)
            out.write(f"{rep.record}: {'PASS' if rep.ok else 'FAIL'}  {marks}\n")
            for c in rep.checks:
                if c.status != "pass":
                    detail = c.reason or f"expected {c.expected!r}, got {c.got!r}"
                    out.write(f"    {c.name}: {c.status}: {detail}\n")
        failed = sum(not r.ok for r in reports)
        out.write(f"{len(reports)} records, {failed} failed\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    formats = ("text", "json", "csv")
    parser = argparse.ArgumentParser(prog="braidkit", description="Braid closure invariants and census checks.")
    parser.add_argument("--format", choices=formats, default="text", help="output format (default: text)")
    # the same flag is accepted after the subcommand too
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=formats, default=argparse.SUPPRESS)

    braid = argparse.ArgumentParser(add_help=False)
    braid.add_argument("--braid", required=True, help='braid word, e.g. "1,1,1" or "1 -2 1 -2"')
    braid.add_argument("--strands", type=int, default=None, help="strand count (default: max letter + 1)")
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--budget-seconds", type=float, default=None,
                        help="HOMFLY wall-clock cap (default: $BRAIDKIT_BUDGET_SECONDS or 600)")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("invariants", parents=[common, braid, budget], help="all invariants of a braid closure")
    p.set_defaults(func=cmd_invariants)
    p = sub.add_parser("homfly", parents=[common, braid, budget], help="HOMFLY-PT polynomial")
    p.add_argument("--az", action="store_true", help="print P(a, z) with a = 1/v")
    p.set_defaults(func=cmd_homfly)
    p = sub.add_parser("alexander", parents=[common, braid, budget], help="Alexander polynomial")
    p.add_argument("--method", choices=("burau", "homfly"), default="burau")
    p.set_defaults(func=cmd_alexander)
    p = sub.add_parser("mfw", parents=[common, braid, budget], help="MFW braid index lower bound")
    p.set_defaults(func=cmd_mfw)
    p = sub.add_parser("obstruct", parents=[common], help="genus-2 obstruction for a Regina graph manifold")
    p.add_argument("--sfs", required=True, help="Regina string, quoted")
    p.set_defaults(func=cmd_obstruct)
    p = sub.add_parser("verify", parents=[common, budget], help="verify dataset records")
    p.add_argument("--dataset", default="t2", help="builtin name or JSON path (default: t2)")
    p.add_argument("--cohort", choices=("A", "T2minusA", "all"), default="all")
    p.add_argument("--parallel", type=int, default=1, metavar="K", help="worker processes")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except ResourceLimit as exc:
        print(f"braidkit: resource limit: {exc.reason}", file=sys.stderr)
        return EXIT_RESOURCE
    except BraidkitError as exc:
        print(f"braidkit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE

