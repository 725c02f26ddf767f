"""Command-line front end: ``spinfid fidelity | sweep | verify``.

Exit status: 0 success, 1 usage error, 2 numerical failure,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .config import ConfigError, build_config, parse_config_text
from .errors import DomainError, SpinFidError
from .fidelity import closed_form_fidelity
from .moments import compute_moments
from .oracle import build_momentum_grid, oracle_fidelity
from .verify import all_passed, format_table, run_verification

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _num(x):
    return float(format(x, ".12g"))


def _column(state, corr):
    return f"F_{state.value}_{corr.value}"


def fidelity_records(cfg):
    """One record per requested (state, corr) at a single boost."""
    eta = cfg.single_eta()
    support = cfg.momentum_support
    moments = compute_moments(cfg.gamma, eta, cfg.theta, cfg.quadrature, support)
    grid = build_momentum_grid(cfg.gamma, cfg.oracle_nodes, support) if cfg.with_oracle else None
    records = []
    for state in cfg.states:
        for corr in cfg.corrs:
            rec = {
                "state": state.value,
                "corr": corr.value,
                "gamma": cfg.gamma,
                "eta": eta,
                "theta": cfg.theta,
                "support": support.value,
                "m1": moments.m1,
                "m2": moments.m2,
                "m3": moments.m3,
                "closed_form": closed_form_fidelity(state, corr, moments),
            }
            if grid is not None:
                value = oracle_fidelity(state, corr, grid, eta, cfg.theta)
                rec["oracle"] = value
                rec["discrepancy"] = value - rec["closed_form"]
            records.append(rec)
    return records


def sweep_records(cfg):
    """Closed-form fidelities along the eta grid, ascending in eta."""
    support = cfg.momentum_support
    rows = []
    for eta in cfg.eta_grid():
        moments = compute_moments(cfg.gamma, eta, cfg.theta, cfg.quadrature, support)
        row = {"eta": eta}
        for state in cfg.states:
            for corr in cfg.corrs:
                row[_column(state, corr)] = closed_form_fidelity(state, corr, moments)
        rows.append(row)
    return rows


def render(records, fmt):
    clean = [{k: _num(v) if isinstance(v, float) else v for k, v in r.items()}
             for r in records]
    if fmt == "json":
        return json.dumps(clean, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(clean[0]), lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow({k: format(v, ".12g") if isinstance(v, float) else v
                         for k, v in r.items()})
    return buf.getvalue()


def _scenario_flags(p):
    p.add_argument("--config", metavar="PATH", help="key = value scenario file")
    p.add_argument("--state", choices=["ghz", "w", "all"])
    p.add_argument("--corr", choices=["product", "pair", "triple", "all"])
    p.add_argument("--gamma", type=float, help="momentum width alpha/mc")
    p.add_argument("--theta", type=float, help="boost polar angle [rad]")
    p.add_argument("--support", choices=["symmetric", "positive"])
    p.add_argument("--eta", type=float, help="boost rapidity")
    p.add_argument("--beta", type=float, help="boost speed V/c")
    p.add_argument("--eta-min", type=float)
    p.add_argument("--eta-max", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--with-oracle", action="store_const", const=True)
    p.add_argument("--oracle-nodes", type=int)
    p.add_argument("--output", choices=["csv", "json"])
    p.add_argument("--figure", type=int, choices=[1, 2],
                   help="preset reproducing the GHZ (1) or W (2) sweep")
    p.add_argument("--dump-config", action="store_true",
                   help="print the resolved configuration and exit")


_CONFIG_KEYS = ("state", "corr", "gamma", "theta", "support", "eta", "beta",
                "eta_min", "eta_max", "steps", "with_oracle", "oracle_nodes",
                "output", "figure")


def make_parser():
    parser = _Parser(prog="spinfid",
                     description="Spin fidelity of GHZ and W states under boosts.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _scenario_flags(sub.add_parser("fidelity", help="evaluate one boost"))
    _scenario_flags(sub.add_parser("sweep", help="fidelity versus eta"))
    v = sub.add_parser("verify", help="oracle vs closed-form suite")
    v.add_argument("--oracle-nodes", type=int, default=128)
    v.add_argument("--output", choices=["table", "json"], default="table")
    return parser


def _load_config(args):
    file_values = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                file_values = parse_config_text(fh.read())
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from None
    overrides = {k: getattr(args, k) for k in _CONFIG_KEYS if getattr(args, k) is not None}
    return build_config(file_values, overrides)


def main(argv=None, stdout=None):
    out = stdout or sys.stdout
    try:
        args = make_parser().parse_args(argv)
        if args.command == "verify":
            if args.oracle_nodes < 16:
                raise UsageError("verify needs --oracle-nodes >= 16")
            results = run_verification(args.oracle_nodes)
            if args.output == "json":
                out.write(json.dumps([r.as_dict() for r in results], indent=1) + "\n")
            else:
                out.write(format_table(results))
            return EXIT_OK if all_passed(results) else EXIT_VERIFY
        cfg = _load_config(args)
        if args.dump_config:
            out.write(cfg.dump())
            return EXIT_OK
        if args.command == "fidelity":
            records = fidelity_records(cfg)
        else:
            records = sweep_records(cfg)
        out.write(render(records, cfg.output))
        return EXIT_OK
    except (UsageError, ConfigError, DomainError) as exc:
        print(f"spinfid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SpinFidError, ArithmeticError) as exc:
        print(f"spinfid: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
