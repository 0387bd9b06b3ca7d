"""Command line front end: coefficient listings, table export, verification.

Output is deterministic for a fixed invocation; table rows are emitted with
the left index ascending, then the right index.  Integer values in JSON are
decimal strings so that consumers without big integers stay exact.
"""

import argparse
import inspect
import json
import sys
from dataclasses import dataclass, field

from . import verify as verification
from .beta_one import (
    bounce_free_ab_beta1,
    f_ab_via_fuss_catalan,
    nhc_nrb_series,
    nhc_prefix_series,
    nhc_series,
    rational_dyck_series,
)
from .bounce import (
    bounce_free_ab,
    bounce_free_prefix,
    bounce_free_total,
    bounce_table,
    g_b_series,
    no_left_bounce_total,
    nrb_series,
)
from .closed_forms import (
    Restriction,
    Slope,
    Step,
    fuss_catalan,
    g_ab_series,
    g_prefix_series,
    g_series,
)
from .series import Series

FORMATS = ("table", "csv", "json", "oeis-bfile")
ROUTES = ("general", "fuss-catalan", "beta1")


@dataclass
class RunConfig:
    command: str
    alpha: int | None = None
    beta: int | None = None
    order: int = 8
    series: str | None = None
    restriction: Restriction = Restriction.ALL
    max_left: int | None = None
    max_right: int | None = None
    output_format: str = "table"
    bounces: int = 0
    include_k0: bool = False
    route: str = "general"
    suites: list[str] = field(default_factory=list)
    threads: int = 1
    options: dict = field(default_factory=dict)

    def slope(self) -> Slope:
        return Slope(self.alpha, self.beta)


class CliError(Exception):
    pass


# ------------------------------------------------------------------ registry


def _ab(name: str) -> Restriction:
    return Restriction(name[-2:])


def _general_f_ab(cfg: RunConfig, restriction: Restriction) -> Series:
    if cfg.route == "general":
        return bounce_free_ab(cfg.slope(), restriction, cfg.order)
    _need_beta1(cfg, f"route {cfg.route}")
    if cfg.route == "fuss-catalan":
        return f_ab_via_fuss_catalan(cfg.alpha, restriction, cfg.order)
    return bounce_free_ab_beta1(cfg.alpha, restriction, cfg.order)


def _need_beta1(cfg: RunConfig, what: str):
    if cfg.beta != 1:
        raise CliError(f"{what} requires a slope with beta = 1")


def _need_diagonal(cfg: RunConfig, what: str):
    if cfg.alpha != 1 or cfg.beta != 1:
        raise CliError(f"{what} requires the diagonal slope alpha = beta = 1")


def _need_general_route(cfg: RunConfig):
    if cfg.route != "general":
        raise CliError(f"series {cfg.series!r} has no {cfg.route!r} route")


def _build_series(cfg: RunConfig) -> Series:
    name = cfg.series
    if name in ("g", "g_ee", "g_en", "g_ne", "g_nn", "g_estar", "g_nstar"):
        _need_general_route(cfg)
        slope = cfg.slope()
        if name == "g":
            return g_series(slope, cfg.order)
        if name == "g_estar":
            return g_prefix_series(slope, Step.E, cfg.order)
        if name == "g_nstar":
            return g_prefix_series(slope, Step.N, cfg.order)
        restriction = _ab(name)
        return g_ab_series(slope, restriction.first, restriction.last, cfg.order)
    if name in ("f_ee", "f_en", "f_ne", "f_nn"):
        return _general_f_ab(cfg, _ab(name))
    if name in ("f", "f_estar", "f_nstar", "nlb", "nrb_ee", "nrb_en", "nrb_nn"):
        _need_general_route(cfg)
        slope = cfg.slope()
        if name == "f":
            return bounce_free_total(slope, cfg.order)
        if name == "f_estar":
            return bounce_free_prefix(slope, Step.E, cfg.order)
        if name == "f_nstar":
            return bounce_free_prefix(slope, Step.N, cfg.order)
        if name == "nlb":
            return no_left_bounce_total(slope, cfg.order)
        return nrb_series(slope, _ab(name), cfg.order)
    if name in ("c_alpha", "nhc_ee", "nhc_en", "nhc_ne", "h", "H", "H_ne"):
        _need_general_route(cfg)
        _need_beta1(cfg, f"series {name!r}")
        if name == "c_alpha":
            return fuss_catalan(cfg.alpha, cfg.order)
        if name == "h":
            return nhc_prefix_series(cfg.alpha, cfg.order)
        if name == "H":
            return nhc_nrb_series(cfg.alpha, cfg.order)
        if name == "H_ne":
            return rational_dyck_series(cfg.alpha, cfg.order)
        return nhc_series(cfg.alpha, _ab(name), cfg.order)
    if name == "g_b":
        _need_general_route(cfg)
        _need_diagonal(cfg, "series 'g_b'")
        return g_b_series(cfg.bounces, cfg.order)
    raise CliError(f"unknown series {name!r}; see --help for the catalogue")


SERIES_NAMES = (
    "g, g_ee, g_en, g_ne, g_nn, g_estar, g_nstar, c_alpha, "
    "f, f_ee, f_en, f_ne, f_nn, f_estar, f_nstar, nrb_ee, nrb_en, nrb_nn, "
    "nlb, g_b, nhc_ee, nhc_en, nhc_ne, h, H, H_ne"
)


# ------------------------------------------------------------------ commands


def cmd_coeffs(cfg: RunConfig, out) -> int:
    series = _build_series(cfg)
    start = 0 if cfg.include_k0 else 1
    pairs = [(k, series.coefficient(k)) for k in range(start, cfg.order + 1)]
    if cfg.output_format == "table":
        print(" ".join(str(v) for _, v in pairs), file=out)
    elif cfg.output_format == "csv":
        print("k,value", file=out)
        for k, v in pairs:
            print(f"{k},{v}", file=out)
    elif cfg.output_format == "oeis-bfile":
        for k, v in pairs:
            print(f"{k} {v}", file=out)
    else:
        payload = {
            "slope": [cfg.alpha, cfg.beta],
            "order": cfg.order,
            "series": {cfg.series: [str(v) for _, v in pairs]},
        }
        print(json.dumps(payload, indent=2), file=out)
    return 0


def cmd_bounce_table(cfg: RunConfig, out) -> int:
    if cfg.output_format == "oeis-bfile":
        raise CliError("the b-file format applies to single sequences; use coeffs")
    max_left = cfg.max_left if cfg.max_left is not None else max(cfg.order - 1, 0)
    max_right = cfg.max_right if cfg.max_right is not None else max(cfg.order - 1, 0)
    table = bounce_table(cfg.slope(), cfg.restriction, max_left, max_right, cfg.order)
    if cfg.output_format == "table":
        for l in range(max_left + 1):
            for r in range(max_right + 1):
                coeffs = table.entry(l, r).coeffs[1:]
                print(f"{l} {r} : " + " ".join(str(v) for v in coeffs), file=out)
    elif cfg.output_format == "csv":
        print("l,r,k,count", file=out)
        for l in range(max_left + 1):
            for r in range(max_right + 1):
                for k in range(1, cfg.order + 1):
                    print(f"{l},{r},{k},{table.entry(l, r).coefficient(k)}", file=out)
    else:
        payload = {
            "slope": [cfg.alpha, cfg.beta],
            "order": cfg.order,
            "restriction": cfg.restriction.value,
            "table": [
                [
                    [str(v) for v in table.entry(l, r).coeffs[1:]]
                    for r in range(max_right + 1)
                ]
                for l in range(max_left + 1)
            ],
        }
        print(json.dumps(payload, indent=2), file=out)
    return 0


def cmd_verify(cfg: RunConfig, out) -> int:
    names = cfg.suites or list(verification.SUITES)
    unknown = [n for n in names if n not in verification.SUITES]
    if unknown:
        raise CliError(
            f"unknown suite(s) {', '.join(unknown)}; "
            f"available: {', '.join(verification.SUITES)}"
        )
    failures = 0
    for name in names:
        suite = verification.SUITES[name]
        accepted = inspect.signature(suite).parameters
        kwargs = {
            key: value
            for key, value in cfg.options.items()
            if key in accepted and value is not None
        }
        print(f"suite {name}:", file=out)
        for result in suite(**kwargs):
            print(f"  {result}", file=out)
            if not result.passed:
                failures += 1
    print(
        f"verify: {'all suites passed' if not failures else f'{failures} check(s) failed'}",
        file=out,
    )
    return 0 if failures == 0 else 1


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bouncepaths",
        description="Exact lattice-path bounce statistics on rational slopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coeffs = sub.add_parser("coeffs", help="print coefficients of one series")
    coeffs.add_argument("--series", required=True, help=f"one of: {SERIES_NAMES}")
    coeffs.add_argument("--alpha", type=int, required=True)
    coeffs.add_argument("--beta", type=int, default=1)
    coeffs.add_argument("--order", type=int, required=True)
    coeffs.add_argument("--format", choices=FORMATS, default="table")
    coeffs.add_argument("--bounces", type=int, default=0, help="bounce count for g_b")
    coeffs.add_argument(
        "--include-k0", action="store_true", help="also print the k=0 coefficient"
    )
    coeffs.add_argument(
        "--route",
        choices=ROUTES,
        default="general",
        help="alternative computation for f_ab when beta = 1",
    )

    table = sub.add_parser("bounce-table", help="print the (left, right) grid")
    table.add_argument("--alpha", type=int, required=True)
    table.add_argument("--beta", type=int, default=1)
    table.add_argument("--order", type=int, required=True)
    table.add_argument(
        "--restriction", choices=[r.value for r in Restriction], default="all"
    )
    table.add_argument("--max-left", type=int, default=None)
    table.add_argument("--max-right", type=int, default=None)
    table.add_argument("--format", choices=FORMATS[:3], default="table")

    ver = sub.add_parser("verify", help="run named identity suites")
    ver.add_argument(
        "--suite",
        action="append",
        default=None,
        help="suite name, repeatable; default runs everything "
        f"({', '.join(verification.SUITES)})",
    )
    ver.add_argument("--alpha", type=int, default=None)
    ver.add_argument("--beta", type=int, default=None)
    ver.add_argument("--order", type=int, default=None)
    ver.add_argument("--max-slope-sum", type=int, default=None)
    ver.add_argument("--max-steps", type=int, default=None)
    ver.add_argument("--max-left", type=int, default=None)
    ver.add_argument("--max-right", type=int, default=None)
    ver.add_argument("--alpha-max", type=int, default=None)
    ver.add_argument("--b-max", type=int, default=None)
    ver.add_argument("--n-max", type=int, default=None)
    ver.add_argument("--count", type=int, default=None, help="randomized inputs")
    ver.add_argument("--seed", type=int, default=None)
    ver.add_argument("--threads", type=int, default=1)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    cfg.alpha = getattr(args, "alpha", None)
    cfg.beta = getattr(args, "beta", None)
    if args.command == "coeffs":
        cfg.series = args.series
        cfg.order = args.order
        cfg.output_format = args.format
        cfg.bounces = args.bounces
        cfg.include_k0 = args.include_k0
        cfg.route = args.route
        cfg.slope()  # validates coprimality at parse time
    elif args.command == "bounce-table":
        cfg.order = args.order
        cfg.restriction = Restriction(args.restriction)
        cfg.max_left = args.max_left
        cfg.max_right = args.max_right
        cfg.output_format = args.format
        cfg.slope()
    else:
        cfg.suites = args.suite or []
        cfg.threads = args.threads
        if cfg.alpha is not None and cfg.beta is not None:
            cfg.slope()
        cfg.options = {
            "alpha": args.alpha,
            "beta": args.beta,
            "order": args.order,
            "max_slope_sum": args.max_slope_sum,
            "max_steps": args.max_steps,
            "max_left": args.max_left,
            "max_right": args.max_right,
            "alpha_max": args.alpha_max,
            "b_max": args.b_max,
            "n_max": args.n_max,
            "count": args.count,
            "seed": args.seed,
            "processes": args.threads,
        }
    return cfg


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        if cfg.command == "coeffs":
            return cmd_coeffs(cfg, out)
        if cfg.command == "bounce-table":
            return cmd_bounce_table(cfg, out)
        return cmd_verify(cfg, out)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
