"""Command-line driver.

Subcommands: table1, table2, figures, experiment3, verify, report.
Exit codes: 0 all good, 1 verification failure, 2 configuration error,
3 numerical non-convergence.  Output is CSV (header row always present)
or JSON, to stdout or --out, and is byte-stable for a fixed configuration.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .bounds import bound_report
from .eigenvalues import MatchFailure
from .experiments import (EXP3_HEADER, FIGURE_HEADER, TABLE1_HEADER,
                          TABLE2_HEADER, VERIFY_HEADER, RunConfig,
                          decay_figure_rows, experiment1, experiment2,
                          experiment3, failed_rows, rows_to_csv, rows_to_json,
                          threshold_records_to_rows, verify_all)
from .spectrum import ProlateContext, TruncationNotConverged


def _parse_c_list(text):
    try:
        values = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad band-limit list: {text!r}")
    if any(not (v > 0 and math.isfinite(v)) for v in values):
        raise argparse.ArgumentTypeError("band limits must be positive finite")
    return values


def _parse_eps_list(text):
    """Accept 'e-50' style exponents or plain floats; store natural logs."""
    logs = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            if tok.startswith("e"):
                logs.append(float(tok[1:]))
            else:
                v = float(tok)
                if not 0.0 < v < 1.0:
                    raise ValueError
                logs.append(math.log(v))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad eps value: {tok!r}")
    return tuple(logs)


def _parse_int_list(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list: {text!r}")


def _parse_n_range(text):
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("n-range must look like START:STOP")


def _add_common(sub):
    sub.add_argument("--c", type=_parse_c_list, default=None,
                     help="comma-separated band limits")
    sub.add_argument("--out", default=None, help="output path (default stdout)")
    sub.add_argument("--format", dest="fmt", choices=("csv", "json"), default=None)
    sub.add_argument("--large", action="store_true",
                     help="include c = 1e5 (multi-minute budget)")
    sub.add_argument("--parallel", type=int, default=None, metavar="N")
    sub.add_argument("--truncation-dim", type=int, default=None, metavar="N",
                     help="pin the matrix dimension instead of auto-doubling")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="prolate",
        description="Prolate spheroidal eigenvalue tables, bounds, and checks.")
    parser.add_argument("--config", default=None,
                        help="JSON file with defaults for the flags below")
    subs = parser.add_subparsers(dest="command", required=True)

    for name, desc in (("table1", "eigenvalue magnitudes at n ~ 0, c/pi, 2c/pi"),
                       ("table2", "threshold indices n1/n2 for target eps"),
                       ("figures", "decay-curve rows over the plunge window"),
                       ("experiment3", "bound ordering at large band limit"),
                       ("verify", "run every verification suite"),
                       ("report", "full bound report at given (c, n)")):
        sub = subs.add_parser(name, help=desc)
        _add_common(sub)
        if name == "table2":
            sub.add_argument("--eps", type=_parse_eps_list, default=None,
                             help="targets, e.g. 'e-50,e-100' or plain floats")
        if name == "figures":
            sub.add_argument("--n-range", type=_parse_n_range, default=None,
                             help="restrict rows to START:STOP in n")
        if name == "verify":
            sub.add_argument("--quick", action="store_true",
                             help="reduced grids for a fast smoke check")
        if name == "report":
            sub.add_argument("--n", type=_parse_int_list, required=True,
                             help="comma-separated mode indices")
            sub.add_argument("--delta", type=float, default=None,
                             help="pin the depth parameter for the chi-free bound")
    return parser


def _apply_config(args, parser):
    if args.config is None:
        return args
    try:
        with open(args.config) as fh:
            data = json.load(fh)
    except (OSError, ValueError) as err:
        parser.error(f"cannot read config file: {err}")
    mapping = {
        "c_list": ("c", lambda v: tuple(float(x) for x in v)),
        "eps": ("eps", lambda v: _parse_eps_list(v if isinstance(v, str) else ",".join(map(str, v)))),
        "format": ("fmt", str),
        "out": ("out", str),
        "truncation_dim": ("truncation_dim", int),
        "parallel": ("parallel", int),
        "large": ("large", bool),
    }
    for key, (attr, conv) in mapping.items():
        if key in data and getattr(args, attr, None) in (None, False):
            setattr(args, attr, conv(data[key]))
    return args


def _emit(rows, header, args):
    text = rows_to_csv(rows, header) if args.fmt == "csv" else rows_to_json(rows, header)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config_from_args(args, default_c):
    return RunConfig(
        c_list=args.c if args.c is not None else default_c,
        eps_logs=getattr(args, "eps", None) or RunConfig.eps_logs,
        fmt=args.fmt,
        out=args.out,
        truncation_dim=args.truncation_dim,
        parallel=args.parallel,
        large=args.large,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args = _apply_config(args, parser)
    args.fmt = args.fmt or "csv"
    args.parallel = args.parallel or 1
    try:
        if args.command == "table1":
            cfg = _config_from_args(args, RunConfig.c_list)
            rows, _ = experiment1(cfg)
            _emit(rows, TABLE1_HEADER, args)
            bad = failed_rows(rows)
            if bad:
                print(f"numerical non-convergence in {len(bad)} row(s): "
                      f"{bad[0]['error']}", file=sys.stderr)
                return 3
        elif args.command == "table2":
            cfg = _config_from_args(args, (10.0, 1.0e2, 1.0e3, 1.0e4))
            records, _ = experiment2(cfg)
            _emit(threshold_records_to_rows(records), TABLE2_HEADER, args)
        elif args.command == "figures":
            cfg = _config_from_args(args, (100.0,))
            rows = []
            for ctx in cfg.contexts():
                rows.extend(decay_figure_rows(ctx, parallel=cfg.parallel))
            if args.n_range is not None:
                lo, hi = args.n_range
                rows = [r for r in rows if lo <= r["n"] <= hi]
            _emit(rows, FIGURE_HEADER, args)
        elif args.command == "experiment3":
            cfg = _config_from_args(args, (1.0e4,))
            rows = experiment3(cfg)
            _emit(rows, EXP3_HEADER, args)
            bad = failed_rows(rows)
            if bad:
                print(f"numerical non-convergence in {len(bad)} row(s): "
                      f"{bad[0]['error']}", file=sys.stderr)
                return 3
            if not all(r["ordered"] for r in rows):
                return 1
        elif args.command == "verify":
            cfg = _config_from_args(args, (10.0, 100.0, 1000.0))
            checks = verify_all(cfg, quick=args.quick)
            _emit(checks, VERIFY_HEADER, args)
            failed = sum(not c["passed"] for c in checks)
            print(f"# {len(checks) - failed}/{len(checks)} checks passed",
                  file=sys.stderr)
            if failed:
                return 1
        elif args.command == "report":
            cfg = _config_from_args(args, (100.0,))
            rows = []
            for c in cfg.c_list:
                ctx = ProlateContext(c, truncation_dim=cfg.truncation_dim)
                for n in args.n:
                    rep = bound_report(ctx, n, delta=args.delta)
                    rows.append({
                        "c": c,
                        "n": n,
                        "chi": rep.chi,
                        "log_abs_lambda": rep.lambda_abs.log_abs,
                        "log_nu": rep.nu.log_abs,
                        "log_zeta": None if rep.zeta is None else rep.zeta.log_abs,
                        "log_eta": None if rep.eta is None else rep.eta.log_abs,
                        "log_xi": None if rep.xi is None else rep.xi.log_abs,
                        "log_p0": None if rep.p0 is None else rep.p0.log_abs,
                        "delta_n": rep.delta_n,
                        "flags": ";".join(k for k, v in sorted(rep.hypotheses.items()) if v),
                    })
            header = ["c", "n", "chi", "log_abs_lambda", "log_nu", "log_zeta",
                      "log_eta", "log_xi", "log_p0", "delta_n", "flags"]
            _emit(rows, header, args)
    except (TruncationNotConverged, MatchFailure) as err:
        print(f"numerical non-convergence: {err}", file=sys.stderr)
        return 3
    except ValueError as err:
        print(f"configuration error: {err}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
