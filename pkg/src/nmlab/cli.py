"""Command-line front end.

Exit codes: 0 all checks as expected, 1 counterexample found where none
was expected, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import NmlabError, cn, format_formula, fset, language, parse_formula
from .extension import ExtensionKind, extend
from .ops import OpConfigError, op_cn, op_cwa, op_from_config, op_gcwa
from .properties import (
    COUNTEREXAMPLE,
    PropertyKind,
    check_all,
    check_property,
    make_universe,
)
from .reporting import (
    canonical_json,
    run_report,
    verdict_to_dict,
    write_report_dir,
)
from .representations import ReprKind, represent
from .scenarios import list_scenarios, run_scenario, run_fuzz

USAGE_ERROR = 2

_BUILTINS = {"cn": op_cn, "cwa": op_cwa, "gcwa": op_gcwa}


class CliError(Exception):
    pass


def _build_lang(spec):
    atoms = tuple(a.strip() for a in spec.split(",") if a.strip())
    try:
        return language(*atoms)
    except ValueError as exc:
        raise CliError(f"bad --atoms: {exc}") from exc


def _build_op(spec, lang):
    if spec in _BUILTINS:
        return _BUILTINS[spec](lang)
    if spec == "two-variable":
        from .ops import two_variable_separation_op
        if lang.n != 2:
            raise CliError("the two-variable operation needs exactly 2 atoms")
        return two_variable_separation_op(lang)
    path = Path(spec)
    if not path.exists():
        raise CliError(f"unknown builtin operation or missing config file: {spec}")
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise CliError(f"config {spec}: invalid JSON: {exc}") from exc
    try:
        return op_from_config(doc, lang)
    except (OpConfigError, NmlabError, KeyError) as exc:
        raise CliError(f"config {spec}: {exc}") from exc


def _parse_props(spec):
    if spec == "all":
        return list(PropertyKind)
    out = []
    for name in spec.split(","):
        name = name.strip()
        try:
            out.append(PropertyKind(name))
        except ValueError:
            raise CliError(f"unknown property {name!r}") from None
    return out


def _parse_input(text, lang):
    parts = [s for s in (p.strip() for p in text.split(",")) if s]
    return fset(*(parse_formula(s, lang) for s in parts))


def _emit(report, fmt):
    if fmt == "structured":
        sys.stdout.write(canonical_json(report))
        return
    for v in report.get("verdicts", []):
        line = f"{v['operation']:<24} {v['property']:<32} {v['outcome']}"
        if v.get("witness"):
            w = v["witness"]
            bits = ["X={" + ", ".join(w.get("X", [])) + "}"]
            if "Y" in w:
                bits.append("Y={" + ", ".join(w["Y"]) + "}")
            if "formula" in w:
                bits.append("formula=" + w["formula"])
            line += "  " + " ".join(bits)
        if v.get("triviality_flags"):
            line += "  [" + ", ".join(v["triviality_flags"]) + "]"
        print(line)
    if "as_expected" in report:
        print("as_expected:", report["as_expected"])


def _cmd_check(args):
    lang = _build_lang(args.atoms)
    op = _build_op(args.op, lang)
    U = make_universe(lang, max_set_size=args.max_set_size, cap=args.cap)
    props = _parse_props(args.props)
    if set(props) == set(PropertyKind):
        verdicts = check_all(op, U)
    else:
        verdicts = [check_property(op, p, U) for p in props]
    dicts = [verdict_to_dict(v) for v in verdicts]
    found = any(v["outcome"] == COUNTEREXAMPLE for v in dicts)
    report = run_report(f"check[{op.name}]", dicts, 0.0, as_expected=not found)
    if args.report_dir:
        write_report_dir(f"check-{op.name.replace('/', '_')}", dicts,
                         args.report_dir, title=f"property checks: {op.name}")
    _emit(report, args.format)
    return 1 if found else 0


def _cmd_represent(args):
    lang = _build_lang(args.atoms)
    op = _build_op(args.op, lang)
    kind = ReprKind(args.kind.replace("-", "_"))
    X = _parse_input(args.input, lang)
    U = make_universe(lang, max_set_size=args.max_set_size)
    S = represent(op, X, kind, U)
    result = {
        "operation": op.name,
        "kind": kind.value,
        "input": [format_formula(f) for f in X],
        "assumptions": format_formula(S.axiom()),
        "value": format_formula(op.apply(X).axiom()),
    }
    if args.format == "structured":
        sys.stdout.write(canonical_json(result))
    else:
        print(f"S({{{', '.join(result['input'])}}}) = {result['assumptions']}")
        print(f"C({{{', '.join(result['input'])}}}) = {result['value']}")
    return 0


def _cmd_extend(args):
    lang = _build_lang(args.atoms)
    op = _build_op(args.op, lang)
    kind = ExtensionKind.PLAIN if args.kind == "plain" else ExtensionKind.RIGHT_ABSORBING
    ext = extend(op, kind)
    X = _parse_input(args.input, lang)
    result = {
        "operation": op.name,
        "kind": args.kind,
        "input": [format_formula(f) for f in X],
        "base_value": format_formula(op.apply(X).axiom()),
        "extended_value": format_formula(ext.apply(X).axiom()),
    }
    if args.format == "structured":
        sys.stdout.write(canonical_json(result))
    else:
        print(f"F({{{', '.join(result['input'])}}}) = {result['base_value']}")
        print(f"C({{{', '.join(result['input'])}}}) = {result['extended_value']}")
    return 0


def _cmd_scenario(args):
    if args.action == "list":
        rows = list_scenarios()
        if args.format == "structured":
            sys.stdout.write(canonical_json(rows))
        else:
            for row in rows:
                print(f"{row['id']:<34} {row['title']}")
        return 0
    try:
        report = run_scenario(args.id)
    except KeyError as exc:
        raise CliError(str(exc.args[0])) from exc
    if args.report_dir:
        write_report_dir(args.id, report["verdicts"], args.report_dir,
                         title=args.id)
    _emit(report, args.format)
    return 0 if report["as_expected"] else 1


def _cmd_fuzz(args):
    lang = _build_lang(args.atoms)
    report = run_fuzz(args.seed, args.count, lang=lang)
    _emit(report, args.format)
    if args.format == "text":
        print(f"ops_checked: {report['ops_checked']}  violations: {report['violations']}")
    return 0 if report["as_expected"] else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nmlab",
        description="Bounded verification lab for nonmonotonic inference operations")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_op=True):
        if with_op:
            p.add_argument("--op", required=True,
                           help="builtin (cn, cwa, gcwa, two-variable) or JSON config path")
        p.add_argument("--atoms", default="p,q", help="comma-separated atom names")
        p.add_argument("--format", choices=("text", "structured"), default="text")

    p = sub.add_parser("check", help="run property checks over a universe")
    common(p)
    p.add_argument("--props", default="all",
                   help="'all' or comma-separated property names")
    p.add_argument("--max-set-size", type=int, default=2)
    p.add_argument("--cap", type=int, default=10 ** 6)
    p.add_argument("--report-dir", help="write CSV and figure here")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("represent", help="compute an assumption representation")
    common(p)
    p.add_argument("--kind", required=True,
                   choices=("largest", "trace", "cumulative-trace"))
    p.add_argument("--input", required=True,
                   help="comma-separated formulas (a single canonical formula "
                        "denotes a closed theory)")
    p.add_argument("--max-set-size", type=int, default=2)
    p.set_defaults(fn=_cmd_represent)

    p = sub.add_parser("extend", help="canonically extend a finitary operation")
    common(p)
    p.add_argument("--kind", required=True, choices=("plain", "ra"))
    p.add_argument("--input", required=True)
    p.set_defaults(fn=_cmd_extend)

    p = sub.add_parser("scenario", help="run or list registered scenarios")
    scen_sub = p.add_subparsers(dest="action", required=True)
    run_p = scen_sub.add_parser("run")
    run_p.add_argument("id")
    run_p.add_argument("--format", choices=("text", "structured"), default="text")
    run_p.add_argument("--report-dir", help="write CSV and figure here")
    run_p.set_defaults(fn=_cmd_scenario, action="run")
    list_p = scen_sub.add_parser("list")
    list_p.add_argument("--format", choices=("text", "structured"), default="text")
    list_p.set_defaults(fn=_cmd_scenario, action="list")

    p = sub.add_parser("fuzz", help="seeded biconditional fuzzing on table ops")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--atoms", default="p,q")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(fn=_cmd_fuzz)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except NmlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
