"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from .askey import askey_data
from .checks import DEFAULT_MAX_DEEP_D, run_checks
from .families import FamilyError, QRacahParams, krawtchouk_array, q_racah_array
from .field import Field, FieldParseError, FieldZeroDivisionError
from .labels import BasisLabel, LabelError
from .matrix import Matrix
from .params import ParameterArray, ParameterFileError, format_parameter_file, parse_parameter_file, validate
from .system_rep import representation
from .transitions import EpsilonConfig, transition_any


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    pass


def _read_text(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str, stdin: TextIO) -> ParameterArray:
    try:
        return parse_parameter_file(_read_text(path, stdin))
    except ParameterFileError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_valid(path: str, stdin: TextIO) -> ParameterArray:
    pa = _load(path, stdin)
    report = validate(pa)
    if not report.ok:
        raise CheckFailed("invalid parameter array:\n" + "\n".join(f"  {v}" for v in report.violations))
    return pa


def _label(text: str) -> BasisLabel:
    try:
        return BasisLabel.parse(text)
    except LabelError as exc:
        raise UsageError(str(exc)) from None


def _field(text: str) -> Field:
    try:
        return Field.parse_header(text)
    except FieldParseError as exc:
        raise UsageError(str(exc)) from None


def _scalar(field: Field, text: str, what: str):
    try:
        return field.parse(text)
    except FieldParseError as exc:
        raise UsageError(f"--{what}: {exc}") from None


def _emit_matrix(out: TextIO, title: str, m: Matrix, pretty: bool) -> None:
    out.write(f"{title}:\n{m.format(pretty)}\n")


def cmd_validate(args, out: TextIO, stdin: TextIO) -> int:
    pa = _load(args.file, stdin)
    report = validate(pa)
    if report.ok:
        out.write(f"valid (d={pa.d}, field {pa.field})\n")
        return 0
    out.write("invalid\n")
    for v in report.violations:
        out.write(f"  {v}\n")
    return 1


def cmd_family(args, out: TextIO, stdin: TextIO) -> int:
    field = _field(args.field)
    if args.d < 0:
        raise UsageError("--d must be nonnegative")
    try:
        if args.family == "krawtchouk":
            pa = krawtchouk_array(args.d, field)
        else:
            vals = {k: _scalar(field, getattr(args, k), k.replace("_", ""))
                    for k in ("q", "h", "hs", "s", "ss", "r1", "theta0", "thetas0")}
            qp = QRacahParams(args.d, vals["q"], vals["h"], vals["hs"], vals["s"], vals["ss"],
                              vals["r1"], vals["theta0"], vals["thetas0"])
            pa = q_racah_array(qp)
    except (FamilyError, FieldZeroDivisionError) as exc:
        raise CheckFailed(str(exc)) from None
    out.write(format_parameter_file(pa))
    return 0


def cmd_rep(args, out: TextIO, stdin: TextIO) -> int:
    g = _label(args.basis)
    pa = _load_valid(args.file, stdin)
    rep = representation(pa, g)
    _emit_matrix(out, "A", rep.A, args.pretty)
    out.write("\n")
    _emit_matrix(out, "A*", rep.A_star, args.pretty)
    return 0


def cmd_transition(args, out: TextIO, stdin: TextIO) -> int:
    g, h = _label(args.source), _label(args.target)
    pa = _load_valid(args.file, stdin)
    eps = None
    if args.eps is not None:
        parts = args.eps.split(",")
        if len(parts) != 4:
            raise UsageError("--eps needs four comma-separated scalars")
        values = [_scalar(pa.field, p, "eps") for p in parts]
        try:
            eps = EpsilonConfig(*values)
        except ValueError as exc:
            raise UsageError(f"--eps: {exc}") from None
    out.write(transition_any(pa, g, h, eps).format(args.pretty) + "\n")
    return 0


def cmd_askey(args, out: TextIO, stdin: TextIO) -> int:
    pa = _load_valid(args.file, stdin)
    data = askey_data(pa)
    _emit_matrix(out, "P", data.P, args.pretty)
    out.write("\n")
    _emit_matrix(out, "P*", data.P_star, args.pretty)
    out.write("\n")
    out.write("k: " + " ".join(map(str, data.k)) + "\n")
    out.write("k*: " + " ".join(map(str, data.k_star)) + "\n")
    out.write(f"nu: {data.nu}\n")
    return 0


def cmd_verify(args, out: TextIO, stdin: TextIO) -> int:
    pa = _load(args.file, stdin)
    if args.max_d < 0:
        raise UsageError("--max-d must be nonnegative")
    results = run_checks(pa, deep=args.deep, max_d=args.max_d)
    for r in results:
        out.write(r.line() + "\n")
        if not r.ok and r.detail:
            sys.stderr.write(f"{r.name} {r.labels}: {r.detail}\n")
    if args.deep and pa.d > args.max_d and results[0].ok:
        sys.stderr.write(f"note: oracle checks skipped for d={pa.d} (raise --max-d to run them)\n")
    failed = sum(not r.ok for r in results)
    out.write(f"{len(results) - failed} passed, {failed} failed\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="leonard", description="Exact computations with Leonard systems.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check a parameter file")
    v.add_argument("file", help="parameter file, or - for stdin")
    v.set_defaults(func=cmd_validate)

    f = sub.add_parser("family", help="write the parameter file of a named family")
    fam = f.add_subparsers(dest="family", required=True)
    k = fam.add_parser("krawtchouk")
    k.add_argument("--d", type=int, required=True)
    k.add_argument("--field", default="Q", help="Q or GF(p) (default Q)")
    qr = fam.add_parser("q-racah")
    qr.add_argument("--d", type=int, required=True)
    qr.add_argument("--field", default="Q")
    for name in ("q", "h", "hs", "s", "ss", "r1"):
        qr.add_argument(f"--{name}", required=True)
    qr.add_argument("--theta0", default="0")
    qr.add_argument("--thetas0", default="0")
    f.set_defaults(func=cmd_family)

    r = sub.add_parser("rep", help="print the matrices of A and A* in a labelled basis")
    r.add_argument("file")
    r.add_argument("--basis", required=True, help="label such as d*00*d or d*,0,0*,d")
    r.add_argument("--pretty", action="store_true", help="align columns")
    r.set_defaults(func=cmd_rep)

    t = sub.add_parser("transition", help="print the transition matrix between two bases")
    t.add_argument("file")
    t.add_argument("--from", dest="source", required=True)
    t.add_argument("--to", dest="target", required=True)
    t.add_argument("--eps", help="eps_0,eps_d,eps*_0,eps*_d (default all 1)")
    t.add_argument("--pretty", action="store_true")
    t.set_defaults(func=cmd_transition)

    a = sub.add_parser("askey", help="print P, P*, k, k* and nu")
    a.add_argument("file")
    a.add_argument("--pretty", action="store_true")
    a.set_defaults(func=cmd_askey)

    c = sub.add_parser("verify", help="run the invariant suite")
    c.add_argument("file")
    c.add_argument("--deep", action="store_true", help="also cross-check against the brute-force oracle")
    c.add_argument("--max-d", type=int, default=DEFAULT_MAX_DEEP_D,
                   help=f"largest d for oracle checks (default {DEFAULT_MAX_DEEP_D})")
    c.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, stdin)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except CheckFailed as exc:
        sys.stderr.write(f"{exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
