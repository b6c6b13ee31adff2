"""Command line interface: exact tables as csv, json or plain text.

Exit codes: 0 success, 1 usage error, 2 verification failure,
3 computational limit reached.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import __version__
from .asymptotics import (
    density_limits,
    finite_vs_asymptote,
    growth_constant,
    growth_constant_residual,
    variance_limit,
)
from .catalog import count_gf, cross_gf
from .crossrun import cross_report_table
from .ensembles import (
    DEFAULT_ORACLE_BOUND,
    StringClass,
    iter_strings,
    run_stats,
    to_composition,
)
from .errors import BitrunsError, NonUnitConstantTerm, OracleBoundExceeded
from .jointdp import (
    fewones_closed_form,
    fewones_count,
    joint_rs_report,
    joint_table,
    layer_builder,
)
from .moments import run_variance_report
from .render import format_float, format_fraction, signed_sqrt_ratio
from .verify import available_scopes, run_checks

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_LIMIT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def _emit(args, command: str, params: dict, header: list, rows: list) -> None:
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    elif args.format == "json":
        doc = {
            "command": command,
            "parameters": params,
            "version": __version__,
            "rows": [dict(zip(header, row)) for row in rows],
        }
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        widths = [
            max(len(str(header[i])), max((len(str(r[i])) for r in rows), default=0))
            for i in range(len(header))
        ]
        print("  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip())
        for r in rows:
            print("  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip())


def _class_arg(p, choices=None) -> None:
    p.add_argument(
        "--class",
        dest="string_class",
        required=True,
        choices=choices or [c.value for c in StringClass],
        help="string ensemble",
    )


def _lengths(text: str) -> list:
    try:
        out = [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad length list {text!r}") from None
    if not out or any(n < 0 for n in out):
        raise argparse.ArgumentTypeError(f"bad length list {text!r}")
    return out


def _frac(q: Fraction, places: int) -> str:
    return format_fraction(q, places)


# -- subcommands ------------------------------------------------------------


def _cmd_counts(args) -> int:
    cls = StringClass.from_name(args.string_class)
    series = count_gf(cls).expand(args.nmax)
    rows = [[n, series[n]] for n in range(args.nmax + 1)]
    _emit(args, "counts", {"class": cls.value, "nmax": args.nmax}, ["n", "count"], rows)
    return EXIT_OK


def _cmd_moments(args) -> int:
    cls = StringClass.from_name(args.string_class)
    p = args.precision
    rows = []
    for n in args.lengths:
        r = run_variance_report(n, cls, args.bit)
        rows.append(
            [
                n,
                _frac(r.mean, p),
                _frac(r.variance, p),
                _frac(r.second_moment, p),
                _frac(r.third_moment, p),
                _frac(r.fourth_moment, p),
            ]
        )
    _emit(
        args,
        "moments",
        {"class": cls.value, "bit": args.bit, "lengths": args.lengths},
        ["n", "mean", "variance", "second", "third", "fourth"],
        rows,
    )
    return EXIT_OK


def _cmd_table1(args) -> int:
    p = args.precision
    cols = {
        cls: cross_report_table(args.lengths, cls)
        for cls in (StringClass.UNCONSTRAINED, StringClass.MULTUS)
    }
    rows = []
    for i, n in enumerate(args.lengths):
        row = [n]
        for cls in (StringClass.UNCONSTRAINED, StringClass.MULTUS):
            r = cols[cls][i]
            row.append(signed_sqrt_ratio(r.covariance, r.var_r0 * r.var_r1, p))
        rows.append(row)
    _emit(
        args,
        "table1",
        {"lengths": args.lengths},
        ["n", "rho_unconstrained", "rho_multus"],
        rows,
    )
    return EXIT_OK


def _cmd_table2(args) -> int:
    p = args.precision
    classes = (StringClass.UNCONSTRAINED, StringClass.SOLUS)
    if args.resume and args.cache_dir:
        for cls in classes:
            layer_builder(cls).load(args.cache_dir)
    rows = []
    reports = {}
    for cls in classes:
        for n in sorted(args.lengths):
            reports[(cls, n)] = joint_rs_report(n, cls)
    for n in args.lengths:
        row = [n]
        for cls in classes:
            r = reports[(cls, n)]
            row.append(signed_sqrt_ratio(r.covariance, r.var_run * r.var_bitsum, p))
        rows.append(row)
    if args.cache_dir:
        for cls in classes:
            layer_builder(cls).save(args.cache_dir)
    _emit(
        args,
        "table2",
        {"lengths": args.lengths},
        ["n", "rho_unconstrained", "rho_solus"],
        rows,
    )
    return EXIT_OK


def _cmd_joint(args) -> int:
    cls = StringClass.from_name(args.string_class)
    table = joint_table(args.n, cls)
    rows = [
        [x, y, c]
        for x, row in enumerate(table.rows)
        for y, c in enumerate(row)
        if c
    ]
    _emit(
        args,
        "joint",
        {"class": cls.value, "n": args.n},
        ["zeros", "longest_zero_run", "count"],
        rows,
    )
    return EXIT_OK


def _cmd_fewones(args) -> int:
    rows = []
    closed_ok = 2 <= args.ones < 6 and args.run >= 2
    for n in range(1, args.nmax + 1):
        row = [n, fewones_count(n, args.ones, args.run)]
        if closed_ok:
            row.append(fewones_closed_form(n, args.ones, args.run))
        rows.append(row)
    header = ["n", "count"] + (["closed_form"] if closed_ok else [])
    _emit(
        args,
        "fewones",
        {"ones": args.ones, "run": args.run, "nmax": args.nmax},
        header,
        rows,
    )
    return EXIT_OK


def _cmd_crossgf(args) -> int:
    cls = StringClass.from_name(args.string_class)
    series = cross_gf(cls, args.i, args.j).expand(args.order)
    rows = [[n, series[n]] for n in range(args.order + 1)]
    _emit(
        args,
        "crossgf",
        {"class": cls.value, "i": args.i, "j": args.j, "order": args.order},
        ["n", "count"],
        rows,
    )
    return EXIT_OK


def _cmd_compositions(args) -> int:
    if args.n > DEFAULT_ORACLE_BOUND:
        raise OracleBoundExceeded(
            f"n={args.n} exceeds the enumeration bound {DEFAULT_ORACLE_BOUND}"
        )
    rows = []
    for bits in iter_strings(args.n):
        r0, _, s = run_stats(bits)
        parts = to_composition(bits)
        rows.append(
            [
                "".join(map(str, bits)),
                "+".join(map(str, parts)),
                len(parts),
                max(parts),
                s,
                r0,
            ]
        )
    _emit(
        args,
        "compositions",
        {"n": args.n},
        ["string", "composition", "parts", "max_part", "bitsum", "longest_zero_run"],
        rows,
    )
    return EXIT_OK


def _cmd_asymptotics(args) -> int:
    cls = StringClass.from_name(args.string_class)
    p = args.precision
    rows = []
    for r in finite_vs_asymptote(args.lengths, cls, args.bit):
        rows.append(
            [
                r.n,
                _frac(r.mean, p),
                format_float(r.mean_asymptote, p),
                format_float(r.mean_gap, p),
                _frac(r.variance, p),
                format_float(r.variance_limit, p),
                format_float(r.variance_gap, p),
            ]
        )
    params = {
        "class": cls.value,
        "bit": args.bit,
        "lengths": args.lengths,
        "growth_constant": format_float(growth_constant(cls), 10),
        "growth_residual": format_float(growth_constant_residual(cls), 40),
        "variance_limit": format_float(variance_limit(cls), 10),
    }
    if cls in (StringClass.BIMULTUS, StringClass.PERSOLUS):
        d = density_limits(cls)
        params["density_mean"] = format_float(d.mean, 10)
        params["density_variance"] = format_float(d.variance, 10)
    _emit(
        args,
        "asymptotics",
        params,
        ["n", "mean", "asymptote", "mean_gap", "variance", "limit", "variance_gap"],
        rows,
    )
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = run_checks(args.scope, args.nmax)
    rows = [[r.name, "pass" if r.passed else "fail", r.detail] for r in results]
    _emit(
        args,
        "verify",
        {"scope": args.scope, "nmax": args.nmax},
        ["check", "status", "detail"],
        rows,
    )
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


# -- parser -----------------------------------------------------------------


def build_parser() -> _Parser:
    # SUPPRESS keeps a subcommand's copy of a shared flag from clobbering
    # a value given before the subcommand; defaults are seeded in main().
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--format",
        choices=("plain", "csv", "json"),
        default=argparse.SUPPRESS,
    )
    shared.add_argument(
        "--precision",
        type=int,
        default=argparse.SUPPRESS,
        help="decimal places in rendered values",
    )
    shared.add_argument(
        "--threads",
        type=int,
        default=argparse.SUPPRESS,
        help="accepted for interface stability; execution is sequential",
    )

    parser = _Parser(prog="bitruns", description=__doc__, parents=[shared])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[shared], **kw)

    p = add_parser("counts", help="class counts d_n")
    _class_arg(p)
    p.add_argument("--nmax", type=int, default=20)
    p.set_defaults(fn=_cmd_counts)

    p = add_parser("moments", help="longest-run moments")
    _class_arg(p)
    p.add_argument("--bit", type=int, choices=(0, 1), default=0)
    p.add_argument("--lengths", type=_lengths, default=[10, 20, 50])
    p.set_defaults(fn=_cmd_moments)

    p = add_parser("table1", help="correlation of the two longest runs")
    p.add_argument(
        "--lengths", type=_lengths, default=[10, 20, 30, 40, 50, 60, 70]
    )
    p.set_defaults(fn=_cmd_table1)

    p = add_parser("table2", help="correlation of longest zero run and bitsum")
    p.add_argument("--lengths", type=_lengths, default=[100, 200, 300, 400])
    p.add_argument("--cache-dir", help="directory for table layer files")
    p.add_argument(
        "--resume", action="store_true", help="load cached layers before computing"
    )
    p.set_defaults(fn=_cmd_table2)

    p = add_parser("joint", help="(zeros, longest zero run) table")
    _class_arg(p, choices=["unconstrained", "solus"])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_joint)

    p = add_parser("fewones", help="counts with few ones and short zero runs")
    p.add_argument("--ones", type=int, required=True, help="bitsum strictly below")
    p.add_argument("--run", type=int, required=True, help="zero runs strictly below")
    p.add_argument("--nmax", type=int, default=40)
    p.set_defaults(fn=_cmd_fewones)

    p = add_parser("crossgf", help="two-run generating function coefficients")
    _class_arg(p, choices=["unconstrained", "multus"])
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--order", type=int, default=20)
    p.set_defaults(fn=_cmd_crossgf)

    p = add_parser("compositions", help="waiting-time compositions")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_compositions)

    p = add_parser("asymptotics", help="finite n against the conjectured limits")
    _class_arg(p)
    p.add_argument("--bit", type=int, choices=(0, 1), default=0)
    p.add_argument("--lengths", type=_lengths, default=[10, 20, 50, 100])
    p.set_defaults(fn=_cmd_asymptotics)

    p = add_parser("verify", help="cross-check formulas against brute force")
    p.add_argument("--scope", choices=available_scopes(), default="all")
    p.add_argument("--nmax", type=int, default=10)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    # shared flags live on the root and every subparser with a SUPPRESS
    # default; seeding the namespace keeps a value given before the
    # subcommand from being clobbered by the subparser's copy
    defaults = argparse.Namespace(format="plain", precision=6, threads=1)
    args = build_parser().parse_args(argv, namespace=defaults)
    try:
        return args.fn(args)
    except (OracleBoundExceeded, NonUnitConstantTerm) as exc:
        sys.stderr.write(f"bitruns: {exc}\n")
        return EXIT_LIMIT
    except BitrunsError as exc:
        sys.stderr.write(f"bitruns: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
