"""Command line front end.

Exit codes: 0 success, 1 usage or parse error, 2 invalid diagram,
3 invariant violation reported by ``sweep``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .dsl import ParseError, parse_set, parse_spec
from .fibration import NotFundamental, PsiNotSubset, fiber_over, fundamental_reduction, reduction_diagram, weak_reduction
from .oracles import sweep_consistency
from .parabolic import CrossedDiagram, analyze
from .render import diagram_dict, dumps, render_diagram, report_dict
from .rootcore import MalformedGraph
from .satake import FAMILIES, OutOfRange, UnknownForm, ValidationError, classify_root, family_members

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_VIOLATION = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def _b(x: bool) -> str:
    return "true" if x else "false"


def _fmt_set(s) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


def _title(cd: CrossedDiagram) -> str:
    return f"{cd.satake.name or cd.satake.graph.type_string() or 'trivial'} cross {_fmt_set(cd.crosses)}"


def _cmd_classify(args, out):
    cd = parse_spec(args.spec)
    a = analyze(cd)
    if args.format == "json":
        out.write(dumps({"diagram": diagram_dict(cd), **report_dict(a)}) + "\n")
        return EXIT_OK
    out.write(f"form: {_title(cd)}\n{render_diagram(cd)}\n")
    for key, value in report_dict(a).items():
        out.write(f"{key}={_b(value) if isinstance(value, bool) else value}\n")
    return EXIT_OK


def _cmd_fiber(args, out):
    cd = parse_spec(args.spec)
    rep = fiber_over(cd, parse_set(args.psi))
    if args.format == "json":
        out.write(dumps({"diagram": diagram_dict(cd), **report_dict(rep)}) + "\n")
        return EXIT_OK
    out.write(f"total: {_title(cd)}\n{render_diagram(cd)}\n")
    out.write(f"base: cross {_fmt_set(rep.psi)}\n")
    out.write(f"fiber nodes: {_fmt_set(rep.Bsecond)}  |R''|={len(rep.Rsecond)}  |Q''|={len(rep.Qsecond)}\n")
    out.write(f"fiber diagram:\n{render_diagram(rep.fiber_diagram)}\n")
    out.write(f"effective fiber:\n{render_diagram(rep.effective_fiber)}\n")
    out.write(f"is_cr_fibration={_b(rep.is_cr_fibration)}\n")
    return EXIT_OK


def _cmd_reduce(args, out):
    cd = parse_spec(args.spec)
    if args.mode == "fundamental":
        psi, base, fiber = fundamental_reduction(cd)
        n = analyze(base).cr_dim
        if args.format == "json":
            out.write(dumps({
                "psi": sorted(psi),
                "base": diagram_dict(base),
                "base_cr_dim": n,
                "fiber": diagram_dict(fiber),
            }) + "\n")
            return EXIT_OK
        out.write(f"psi={_fmt_set(psi)}\nbase: cross {_fmt_set(psi)} (n={n}, totally_real={_b(n == 0)})\n")
        out.write(f"{render_diagram(base)}\nfiber:\n{render_diagram(fiber)}\n")
        return EXIT_OK
    if args.mode == "weak":
        removed, base, fiber = weak_reduction(cd)
        if args.format == "json":
            out.write(dumps({
                "removed": sorted(removed),
                "base": diagram_dict(base),
                "fiber": diagram_dict(fiber),
                "fiber_cr_codim": analyze(fiber).cr_codim,
            }) + "\n")
            return EXIT_OK
        out.write(f"removed={_fmt_set(removed)}\nbase:\n{render_diagram(base)}\n")
        out.write(f"fiber (k={analyze(fiber).cr_codim}):\n{render_diagram(fiber)}\n")
        return EXIT_OK
    rep = reduction_diagram(cd)
    if args.format == "json":
        out.write(dumps(report_dict(rep)) + "\n")
        return EXIT_OK
    for key, corner in rep.composite.items():
        out.write(f"{key}: cross {_fmt_set(corner.crosses)}\n{render_diagram(corner)}\n")
    out.write(f"fundamental psi={_fmt_set(rep.fundamental_psi)} weak removed={_fmt_set(rep.weak_removed)}\n")
    out.write(f"weak fiber:\n{render_diagram(rep.weak_fiber)}\n")
    for note in rep.diagnostics:
        out.write(f"diagnostic: {note}\n")
    return EXIT_OK


TABLE_COLUMNS = ("family", "params", "cross_bitmask", "n", "k", "effective", "fundamental", "weak", "strict", "ideal")


def table_rows(family: str, rank_max: int) -> list[dict]:
    """One row per (parameters, cross set) of ``family`` up to ``rank_max``."""
    rows = []
    for params, d in family_members(family, rank_max):
        for mask in range(1 << d.rootsys.rank):
            crosses = frozenset(d.labels[i] for i in range(d.rootsys.rank) if mask >> i & 1)
            a = analyze(CrossedDiagram(d, crosses))
            rows.append({
                "family": family,
                "params": ";".join(str(p) for p in params),
                "cross_bitmask": mask,
                "n": a.cr_dim,
                "k": a.cr_codim,
                "effective": a.effective,
                "fundamental": a.fundamental,
                "weak": a.weakly_nondeg,
                "strict": a.strictly_nondeg,
                "ideal": a.ideal_nondeg,
            })
    return rows


def _cmd_table(args, out):
    rows = table_rows(args.family, args.rank_max)
    if args.format == "json":
        out.write(json.dumps(rows, indent=1) + "\n")
        return EXIT_OK
    buf = io.StringIO()
    w = csv.writer(buf, quoting=csv.QUOTE_NONE, lineterminator="\n")
    w.writerow(TABLE_COLUMNS)
    for r in rows:
        w.writerow([_b(v) if isinstance(v, bool) else v for v in (r[c] for c in TABLE_COLUMNS)])
    out.write(buf.getvalue())
    return EXIT_OK


def _cmd_sweep(args, out):
    report = sweep_consistency(args.rank_max)
    out.write(report.to_json() + "\n")
    return EXIT_VIOLATION if report.mismatches else EXIT_OK


def _cmd_validate(args, out):
    cd = parse_spec(args.spec)
    d = cd.satake
    c = d.conjugation
    rs = d.rootsys
    kinds = {"real": 0, "imaginary": 0, "complex": 0}
    for b in rs.all_roots:
        kinds[classify_root(c, b)] += 1
    out.write(f"valid: {d.name or d.graph.type_string()}\n")
    out.write(f"epsilon: {' '.join(f'{a}->{c.epsilon[a]}' for a in d.labels)}\n")
    for a in d.labels:
        out.write(f"sigma(alpha_{a}) = {list(c(rs.simple(a)))}\n")
    out.write(f"roots: {len(rs.all_roots)} (real {kinds['real']}, imaginary {kinds['imaginary']}, complex {kinds['complex']})\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="crsatake", description="CR invariants of minimal orbits from cross-marked Satake diagrams.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("classify", help="CR type and nondegeneracy flags")
    s.add_argument("spec")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=_cmd_classify)

    s = sub.add_parser("fiber", help="fiber of (g, q_Phi) -> (g, q_Psi)")
    s.add_argument("spec")
    s.add_argument("--psi", required=True, help="node set such as {1}")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=_cmd_fiber)

    s = sub.add_parser("reduce", help="fundamental / weakly nondegenerate reductions")
    s.add_argument("spec")
    s.add_argument("--mode", choices=("fundamental", "weak", "full"), default="full")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=_cmd_reduce)

    s = sub.add_parser("table", help="flags for every cross set of a family")
    s.add_argument("--family", required=True, choices=FAMILIES)
    s.add_argument("--rank-max", type=int, required=True)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=_cmd_table)

    s = sub.add_parser("sweep", help="criterion/oracle consistency sweep")
    s.add_argument("--rank-max", type=int, required=True)
    s.set_defaults(func=_cmd_sweep)

    s = sub.add_parser("validate", help="check that a diagram is a Satake diagram")
    s.add_argument("spec")
    s.set_defaults(func=_cmd_validate)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        return args.func(args, out)
    except (ValidationError, MalformedGraph) as exc:
        err.write(f"invalid diagram: {exc}\n")
        return EXIT_INVALID
    except (ParseError, UnknownForm, OutOfRange, PsiNotSubset, NotFundamental, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
