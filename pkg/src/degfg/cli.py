"""Command-line front end.

    degfg table  --family poly-fg --k 1 --u -1 --lambda 1/3 --x 0 --n-max 4
    degfg audit  --seed 42 --n-max 10 --samples 3
    degfg limits --family genocchi-deg --n-max 8
    degfg series --family deg-log-series --lambda 1/3 --order 6

All numbers are printed as exact ``p/q`` text.  Exit status: 0 on success,
1 when a hard audit invariant or a classical limit fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .arith import format_rational, format_scalar, parse_rational
from .audit import FAILS, audit_all, limit_check, limit_families
from .families import FAMILIES, FAMILY_IDS
from .series import default_order
from .special import ParamSet, ParameterError

TABLE_HEADER = ("family", "n", "k", "lambda", "u", "x", "y", "value")

_VALUE_FLAGS = ("--k", "--lambda", "--u", "--x", "--y", "--seed")
_NEGATIVE = re.compile(r"^-\d")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid rational {text!r} (expected p or p/q)") from None


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int, default=1, help="polyexponential (or Stirling) index")
    p.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(1, 2), metavar="LAMBDA")
    p.add_argument("--u", type=_rational, default=Fraction(-1))
    p.add_argument("--x", type=_rational, default=Fraction(0))
    p.add_argument("--y", type=_rational, default=Fraction(0))


def _add_output(p: argparse.ArgumentParser, formats=("json", "csv")) -> None:
    p.add_argument("--format", choices=formats, default="json")
    p.add_argument("--out", default=None, help="output path (default: stdout)")


def _attach_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-2/3" as an option; "--u -2/3" becomes "--u=-2/3"
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and _NEGATIVE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="degfg", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="family values for n = 0..n_max")
    table.add_argument("--family", required=True, choices=FAMILY_IDS, metavar="FAMILY")
    table.add_argument("--n-max", type=_nonnegative, default=10)
    table.add_argument("--order", type=_nonnegative, default=None)
    _add_params(table)
    _add_output(table)

    audit = sub.add_parser("audit", help="run the identity audit")
    audit.add_argument("--seed", type=int, default=42)
    audit.add_argument("--n-max", type=_nonnegative, default=10)
    audit.add_argument("--samples", type=int, default=3)
    _add_output(audit, ("json", "csv", "text"))

    limits = sub.add_parser("limits", help="check lambda -> 0 limits against the classical families")
    limits.add_argument("--family", action="append", choices=limit_families(), metavar="FAMILY",
                        help="repeatable; default: every degenerate family")
    limits.add_argument("--n-max", type=_nonnegative, default=8)
    _add_params(limits)
    _add_output(limits)

    series = sub.add_parser("series", help="raw ordinary coefficients of a generating series")
    series.add_argument("--family", required=True, choices=FAMILY_IDS, metavar="FAMILY")
    series.add_argument("--n-max", type=_nonnegative, default=10)
    series.add_argument("--order", type=_nonnegative, default=None)
    _add_params(series)
    _add_output(series)
    return parser


def _params(args, n_max: int) -> ParamSet:
    return ParamSet(lam=args.lam, u=args.u, x=args.x, y=args.y, k=args.k, n_max=n_max)


def _check_family_params(parser, family: str, params: ParamSet) -> None:
    fam = FAMILIES[family]
    if fam.degenerate and params.lam == 0:
        parser.error(f"argument --lambda: must be nonzero for family {family}")
    if "u" in fam.uses and params.u == 1:
        parser.error(f"argument --u: must differ from 1 for family {family}")
    if family.startswith(("stirling", "classical-stirling")) and params.k < 0:
        parser.error(f"argument --k: Stirling index must be nonnegative for family {family}")


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def table_rows(family: str, params: ParamSet, order: int | None = None) -> list[dict]:
    values = FAMILIES[family].values(params, order)
    common = {
        "family": family,
        "k": params.k,
        "lambda": format_rational(params.lam),
        "u": format_rational(params.u),
        "x": format_rational(params.x),
        "y": format_rational(params.y),
    }
    return [dict(common, n=n, value=format_scalar(v)) for n, v in enumerate(values)]


def _run_table(args, parser) -> tuple[str, int]:
    params = _params(args, args.n_max)
    _check_family_params(parser, args.family, params)
    rows = table_rows(args.family, params, args.order)
    if args.format == "csv":
        return _csv_text(TABLE_HEADER, ([r[h] for h in TABLE_HEADER] for r in rows)), 0
    return _json_text(rows), 0


def _run_audit(args, parser) -> tuple[str, int]:
    if args.samples < 1:
        parser.error("argument --samples: must be at least 1")
    report = audit_all(seed=args.seed, n_max=args.n_max, sample_count=args.samples)
    status = 1 if report.hard_failures else 0
    if args.format == "text":
        return report.render_text(), status
    if args.format == "csv":
        rows = []
        for c in report.cases:
            for v in c.variants:
                w = v.witness or {}
                rows.append([c.id, v.name, v.reading, "hard" if v.hard else "audit", v.verdict,
                             w.get("n", ""), w.get("lhs", ""), w.get("rhs", "")])
        header = ("case", "variant", "reading", "kind", "verdict", "n", "lhs", "rhs")
        return _csv_text(header, rows), status
    return report.dumps(), status


def _run_limits(args, parser) -> tuple[str, int]:
    families = sorted(set(args.family)) if args.family else list(limit_families())
    params = _params(args, args.n_max)
    for f in families:
        if "u" in FAMILIES[f].uses and params.u == 1:
            parser.error(f"argument --u: must differ from 1 for family {f}")
        if f.startswith("stirling") and params.k < 0:
            parser.error(f"argument --k: Stirling index must be nonnegative for family {f}")
    results = [limit_check(f, args.n_max, params) for f in families]
    status = 1 if any(r.verdict == FAILS for r in results) else 0
    if args.format == "csv":
        rows = [[r.family, r.classical, v["n"], v["limit"], v["classical"], r.verdict]
                for r in results for v in r.values]
        return _csv_text(("family", "classical", "n", "limit", "classical_value", "verdict"), rows), status
    doc = {"n_max": args.n_max, "params": params.to_json(), "results": [r.to_json() for r in results]}
    return _json_text(doc), status


def _run_series(args, parser) -> tuple[str, int]:
    params = _params(args, args.n_max)
    _check_family_params(parser, args.family, params)
    order = default_order(args.n_max) if args.order is None else args.order
    coeffs = [format_scalar(c) for c in FAMILIES[args.family].series(params, order)]
    if args.format == "csv":
        return _csv_text(("power", "coefficient"), enumerate(coeffs)), 0
    return _json_text(coeffs), 0


_COMMANDS = {"table": _run_table, "audit": _run_audit, "limits": _run_limits, "series": _run_series}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_attach_negative_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        text, status = _COMMANDS[args.command](args, parser)
    except ParameterError as exc:
        parser.error(str(exc))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
