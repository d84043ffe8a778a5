"""Command-line front end.

    corravg gen       --function KIND --N N [--seed S] [--out PATH]
    corravg compute   --function F --N N --H H --quantity {deviation,selberg,modified}
    corravg verify    --function F --N N --H H [--identity {I,II,III}]
    corravg scan      --function F --N N --H-grid GRID [--csv PATH]
    corravg gallagher --function F --N N --H h [--variant {i,ii}] [--threshold T]
    corravg theorem   --function F --N N --H H --variant {i,ii} --A A

``--function`` is a built-in kind or ``file:PATH``. Every subcommand takes
``--json`` and ``--out PATH``. Exit status: 0 success, 1 a checked bound
failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import dataclasses
import io
import json
import sys
from contextlib import redirect_stderr

from corravg import __version__
from corravg.arith import KINDS, SampledFunction, generate, load, save
from corravg.bounds import VARIANTS, gallagher_check, theorem_report
from corravg.correlation import deviation
from corravg.errors import CorravgError
from corravg.scan import parse_grid, scan, write_csv
from corravg.selberg import modified_selberg_integral, selberg_integral
from corravg.spectral import IDENTITIES, verify_identity

QUANTITIES = {
    "deviation": lambda f, h: deviation(f, h),
    "selberg": lambda f, h: selberg_integral(f, h).value,
    "modified": lambda f, h: modified_selberg_integral(f, h).value,
}


class UsageError(Exception):
    pass


def fmt(x) -> str:
    """Fixed 12-significant-digit rendering; -0 prints as 0."""
    if isinstance(x, bool) or not isinstance(x, float):
        return str(x)
    return f"{x + 0.0:.12g}"


def _round(obj):
    """Round floats to 12 significant digits for byte-stable JSON."""
    if isinstance(obj, float):
        return float(fmt(obj))
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _function_spec(text: str) -> str:
    if text in KINDS or (text.startswith("file:") and len(text) > 5):
        return text
    raise argparse.ArgumentTypeError(f"expected one of {', '.join(KINDS)} or file:PATH, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="corravg", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--function", type=_function_spec, required=True)
    common.add_argument("--N", dest="big_n", type=_positive_int)
    common.add_argument("--seed", type=int)
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--out", help="write output here instead of stdout")

    sub.add_parser("gen", parents=[common], help="write a function file")

    p = sub.add_parser("compute", parents=[common], help="deviation or (modified) Selberg integral")
    p.add_argument("--H", dest="cap_h", type=_positive_int, required=True)
    p.add_argument("--quantity", choices=list(QUANTITIES), required=True)

    p = sub.add_parser("verify", parents=[common], help="spectral identities I, II, III")
    p.add_argument("--H", dest="cap_h", type=_positive_int, required=True)
    p.add_argument("--identity", choices=IDENTITIES, help="default: all three")

    p = sub.add_parser("scan", parents=[common], help="all quantities over an H grid")
    p.add_argument("--H-grid", dest="h_grid", required=True, help="geom:start:stop:count or list:a,b,c")
    p.add_argument("--csv", help="also write the rows as CSV to this path")
    p.add_argument("--variant", choices=VARIANTS, default="i", help="Gallagher variant")
    p.add_argument("--threshold", type=float, default=100.0)

    p = sub.add_parser("gallagher", parents=[common], help="band energy against J + h^3")
    p.add_argument("--H", dest="cap_h", type=_positive_int, required=True)
    p.add_argument("--variant", choices=VARIANTS, default="i")
    p.add_argument("--threshold", type=float, default=100.0)

    p = sub.add_parser("theorem", parents=[common], help="exponent bookkeeping report")
    p.add_argument("--H", dest="cap_h", type=_positive_int, required=True)
    p.add_argument("--variant", choices=VARIANTS, required=True)
    p.add_argument("--A", dest="a_exp", type=float, required=True)
    return parser


def _resolve_function(args) -> SampledFunction:
    spec = args.function
    if spec.startswith("file:"):
        f = load(spec[5:])
        if args.big_n is not None and args.big_n != f.big_n:
            raise UsageError(f"--N {args.big_n} disagrees with the file (N = {f.big_n})")
        return f
    if args.big_n is None:
        raise UsageError("--N is required for built-in functions")
    seed = args.seed if spec == "rademacher" else None
    if spec == "rademacher" and seed is None:
        raise UsageError("rademacher needs --seed")
    return generate(spec, args.big_n, seed)


def _meta(args, f: SampledFunction) -> dict:
    return {
        "function": args.function,
        "N": f.big_n,
        "seed": args.seed if args.function == "rademacher" else None,
        "version": __version__,
    }


def _dump(args, f, results) -> str:
    doc = {"meta": _meta(args, f), "results": _round(results)}
    return json.dumps(doc, indent=2) + "\n"


def _lines(pairs) -> str:
    return "".join(f"{k}={fmt(v)}\n" for k, v in pairs)


def _command(args, out, err) -> int:
    f = _resolve_function(args)
    status = 0

    if args.command == "gen":
        if args.json:
            text = _dump(args, f, [{"n": n, "value": float(f.values[n])} for n in range(1, f.n_max + 1)])
        else:
            buf = io.StringIO()
            save(f, buf)
            text = buf.getvalue()

    elif args.command == "compute":
        value = QUANTITIES[args.quantity](f, args.cap_h)
        if args.json:
            text = _dump(args, f, [{"quantity": args.quantity, "H": args.cap_h, "value": value}])
        else:
            text = fmt(value) + "\n"

    elif args.command == "verify":
        which = [args.identity] if args.identity else list(IDENTITIES)
        reports = [verify_identity(f, args.cap_h, w) for w in which]
        if any(not r.ok for r in reports):
            status = 1
        if args.json:
            text = _dump(args, f, [dataclasses.asdict(r) for r in reports])
        else:
            text = "".join(
                _lines([("identity", r.which), ("H", r.cap_h), ("lhs", r.lhs), ("main_term", r.main_term),
                        ("residual", r.residual), ("bound", r.bound), ("ratio", r.ratio)])
                for r in reports
            )

    elif args.command == "scan":
        rows = scan(f, parse_grid(args.h_grid), gallagher_variant=args.variant)
        if any(r > 1.0 for row in rows for r in row.identity_ratios):
            status = 1
        if any(row.gallagher_ratio > args.threshold for row in rows):
            status = 1
        if args.csv:
            with open(args.csv, "w", newline="", encoding="utf-8") as fh:
                write_csv(rows, fh, fmt)
        if args.json:
            text = _dump(args, f, [dataclasses.asdict(r) for r in rows])
        else:
            buf = io.StringIO()
            write_csv(rows, buf, fmt)
            text = buf.getvalue()

    elif args.command == "gallagher":
        r = gallagher_check(f, args.cap_h, args.variant, args.threshold)
        if not r.passed:
            status = 1
        if args.json:
            text = _dump(args, f, [{**dataclasses.asdict(r), "passed": r.passed}])
        else:
            text = _lines([("h", r.h), ("variant", r.variant), ("lhs", r.lhs), ("rhs_core", r.rhs_core),
                           ("ratio", r.ratio), ("threshold", r.threshold), ("passed", r.passed)])

    else:  # theorem
        r = theorem_report(f, args.cap_h, args.variant, args.a_exp)
        record = dataclasses.asdict(r)
        if args.json:
            text = _dump(args, f, [record])
        else:
            params = record.pop("params")
            text = _lines([*params.items(), *record.items()])

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    if status:
        print("corravg: a checked bound was exceeded", file=err)
    return status


def run(argv, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return _command(args, out, err)
    except (UsageError, CorravgError, OSError) as exc:
        print(f"corravg {args.command}: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
