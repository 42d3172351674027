"""Command-line interface.

Subcommands
-----------
eval       one (nu, p, a) evaluation; direct sum, expansion, or both
scan       geometric a-grid of evaluations, CSV or JSON
terminant  one generalised terminant value (scaled, e^z T_w(kappa; z))
slope      envelope slope fit of ln|r_obs| vs X_1 from a scan CSV

Exit codes: 0 success, 2 invalid parameters, 3 convergence/oracle failure,
4 insufficient data.

Flags override a flat-JSON config file given with --config.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .errors import (
    DomainError,
    InsufficientDataError,
    OracleError,
    OutOfRegimeError,
    ScaledResultError,
    ToleranceError,
)
from .harness import (
    compare_run,
    parse_rows_csv,
    render_json,
    render_rows_csv,
    row_from_breakdown,
    scan_grid,
    slope_fit,
)
from .sums import SumParams
from .terminant import TerminantMethod, TerminantQuery, terminant_gen

EXIT_OK = 0
EXIT_BAD_PARAMS = 2
EXIT_NO_CONVERGENCE = 3
EXIT_NO_DATA = 4


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="besselsum")
    ap.add_argument("--config", type=Path, default=None,
                    help="flat JSON config; explicit flags win")
    sub = ap.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one (nu, p, a)")
    ev.add_argument("--nu", type=float, required=True)
    ev.add_argument("--p", type=int, required=True)
    ev.add_argument("--a", type=float, required=True)
    ev.add_argument("--method", choices=("direct", "asym", "both"), default="both")
    ev.add_argument("--M", type=int, default=1)
    ev.add_argument("--K", type=int, default=None)
    ev.add_argument("--format", choices=("csv", "json"), default="json")

    sc = sub.add_parser("scan", help="geometric a-grid scan")
    sc.add_argument("--nu", type=float, required=True)
    sc.add_argument("--p", type=int, required=True)
    sc.add_argument("--a-start", type=float, required=True)
    sc.add_argument("--a-stop", type=float, required=True)
    sc.add_argument("--points", type=int, required=True)
    sc.add_argument("--M", type=int, default=1)
    sc.add_argument("--K", type=int, default=None)
    sc.add_argument("--workers", type=int, default=1)
    sc.add_argument("--format", choices=("csv", "json"), default="csv")
    sc.add_argument("--out", type=Path, default=None)

    tm = sub.add_parser("terminant", help="generalised terminant value")
    tm.add_argument("--omega", type=float, required=True)
    tm.add_argument("--kappa", type=int, required=True)
    tm.add_argument("--z-mod", type=float, required=True)
    tm.add_argument("--z-arg", type=float, required=True)
    tm.add_argument("--method", choices=("asym", "oracle"), default="asym")

    sl = sub.add_parser("slope", help="slope fit from a scan CSV")
    sl.add_argument("--input", type=Path, required=True)

    return ap


def _apply_config(ap: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    args = ap.parse_args(argv)
    if args.config is not None:
        overrides = json.loads(args.config.read_text(encoding="utf-8"))
        if not isinstance(overrides, dict):
            raise DomainError("config must be a flat JSON object")
        # explicit flags win: re-parse with config values as defaults
        given = {a.split("=")[0].lstrip("-").replace("-", "_")
                 for a in argv if a.startswith("--")}
        for key, val in overrides.items():
            attr = key.replace("-", "_")
            if hasattr(args, attr) and attr not in given and attr != "config":
                setattr(args, attr, type(getattr(args, attr))(val)
                        if getattr(args, attr) is not None else val)
    return args


def _cmd_eval(args) -> int:
    params = SumParams(args.nu, args.p, args.a)
    bd = compare_run(params, K=args.K, M=args.M,
                     skip_oracle=(args.method == "asym"))
    if args.method == "direct":
        from .sums import direct_sum

        oracle = direct_sum(params)
        payload = {"params": {"nu": params.nu, "p": params.p, "a": params.a},
                   "oracle": {"value": oracle.value,
                              "terms_used": oracle.terms_used,
                              "tail_bound": oracle.tail_bound,
                              "rel_tol_achieved": oracle.rel_tol_achieved}}
        sys.stdout.buffer.write(render_json(payload))
        return EXIT_OK
    if args.format == "csv":
        if args.method != "both":
            raise DomainError("CSV output requires --method both")
        sys.stdout.buffer.write(render_rows_csv([row_from_breakdown(bd)]))
    else:
        sys.stdout.buffer.write(render_json(bd))
    if bd.degraded:
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def _cmd_scan(args) -> int:
    rows = scan_grid(args.nu, args.p, args.a_start, args.a_stop, args.points,
                     workers=args.workers, K=args.K, M=args.M)
    blob = render_rows_csv(rows) if args.format == "csv" else render_json(rows)
    if args.out is not None:
        args.out.write_bytes(blob)
    else:
        sys.stdout.buffer.write(blob)
    if any(r.degraded for r in rows):
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def _cmd_terminant(args) -> int:
    method = (TerminantMethod.ORACLE if args.method == "oracle"
              else TerminantMethod.ASYMPTOTIC)
    q = TerminantQuery(args.omega, args.kappa, args.z_mod, args.z_arg, method)
    val = terminant_gen(q)
    payload = {"omega": args.omega, "kappa": args.kappa, "z_mod": args.z_mod,
               "z_arg": args.z_arg, "method": args.method,
               "scaled_by": "exp(z)", "re": val.real, "im": val.imag}
    sys.stdout.buffer.write(render_json(payload))
    return EXIT_OK


def _cmd_slope(args) -> int:
    rows = parse_rows_csv(args.input.read_bytes())
    slope, stderr = slope_fit(rows)
    payload = {"slope": slope, "stderr": stderr, "rows": len(rows)}
    sys.stdout.buffer.write(render_json(payload))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    ap = build_parser()
    try:
        args = _apply_config(ap, argv)
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "scan":
            return _cmd_scan(args)
        if args.command == "terminant":
            return _cmd_terminant(args)
        if args.command == "slope":
            return _cmd_slope(args)
        return EXIT_BAD_PARAMS
    except InsufficientDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_DATA
    except (OracleError, ToleranceError, OutOfRegimeError, ScaledResultError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS


if __name__ == "__main__":
    sys.exit(main())
