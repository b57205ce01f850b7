"""``dlthroughput`` command line."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import records, sweeps
from .config import EvalConfig, FlavorKind, UlMode
from .errors import ModelError, TableParseError
from .frames import AmpduPlan, msdu_profile
from .montecarlo import TrialSpec, simulate_goodput
from .optimizer import closed_form_for, cross_validate, optimize_exhaustive
from .params import TABLES_ENV_VAR, Standard, check_tables, default_table_path
from .throughput import evaluate

APPROX_GRID = [(64, 9, ber, msdu) for ber in (0.0, 1e-5) for msdu in (1500, 512, 64)]


def _floats(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def _ints(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


def _names(text: str) -> list[str]:
    return [v.strip() for v in text.split(",") if v.strip()]


def _emit(text: str, output: str | None) -> None:
    if output and output != "-":
        with open(output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args) -> EvalConfig:
    std = Standard(args.std.upper())
    if args.flavor == "su":
        kind, n = FlavorKind.SU, 1
    elif std is Standard.AC:
        kind, n = FlavorKind.MU_AC4, args.n or 4
    else:
        kind, n = FlavorKind.MU_AX, args.n or 4
    ul = args.ul_mode.replace("-", "_").upper() if args.ul_mode else None
    return EvalConfig(std, kind, n, args.mcs, args.ber, args.msdu, window=args.window, ul_mode=ul,
                      reserve_tf_slot=not args.no_tf_reserve)


def cmd_eval(args) -> int:
    cfg = _config(args)
    if args.plan:
        res = evaluate(cfg, AmpduPlan.from_profile_string(args.plan))
        searched = 0
    else:
        opt = optimize_exhaustive(cfg)
        res, searched = opt.best, opt.searched
    out = {
        "flavor": f"{args.m}*{cfg.label}",
        "mcs": cfg.mcs,
        "ber": cfg.ber,
        "msdu_bytes": cfg.msdu_bytes,
        "window": cfg.window.value,
        "ul_mode": cfg.ul_mode.value,
        "throughput_mbps": round(res.throughput_mbps, 1),
        "cycle_us": round(res.cycle_us, 1),
        "access_delay_us": round(args.m * res.cycle_us, 1),
        "x_mpdus": res.plan.x_mpdus,
        "msdus_per_ampdu": res.plan.total_msdus,
        "y_profile": res.plan.profile_string(),
        "data_symbols": res.data_symbols,
        "searched": searched,
        "timing_us": {k: round(v, 1) for k, v in res.timing.as_dict().items()},
    }
    if args.format == "json":
        print(json.dumps(out, indent=1))
        return 0
    for k, v in out.items():
        if k == "timing_us":
            for name, val in v.items():
                print(f"  {name:<16} {val:.1f}")
        else:
            print(f"{k:<18} {v}")
    return 0


def _write(recs, cls, args) -> int:
    _emit(records.dump(recs, args.format, cls), args.output)
    return 0


def cmd_sweep(args) -> int:
    recs = sweeps.sweep(args.stations, args.ber, args.msdu, flavors=args.flavors, mcs=args.mcs, jobs=args.jobs)
    return _write(recs, records.SweepRecord, args)


def cmd_fig5(args) -> int:
    return _write(sweeps.fig5(jobs=args.jobs), records.SweepRecord, args)


def cmd_fig6(args) -> int:
    return _write(sweeps.fig6(jobs=args.jobs), records.SweepRecord, args)


def cmd_fig7(args) -> int:
    return _write(sweeps.fig7(jobs=args.jobs), records.MpduCountRecord, args)


def cmd_validate_tables(args) -> int:
    path = args.path or default_table_path()
    try:
        problems = check_tables(path)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        print(f"FAIL: {len(problems)} problem(s) in {path}", file=sys.stderr)
        return 1
    print(f"PASS: {path}")
    return 0


def cmd_approx(args) -> int:
    grid = APPROX_GRID if args.mcs is None else [(args.n, args.mcs, args.ber, args.msdu)]
    bad = 0
    print("n,mcs,ber,msdu_bytes,y_opt_real,x_opt_real,y_int,x_closed_form,x_exhaustive,"
          "throughput_ratio,flagged")
    for n, mcs, ber, msdu in grid:
        cfg = EvalConfig(Standard.AX, FlavorKind.MU_AX, n, mcs, ber, msdu, window=args.window)
        est = closed_form_for(cfg)
        rep = cross_validate(optimize_exhaustive(cfg), est)
        bad += rep.flagged
        print(f"{n},{mcs},{ber!r},{msdu},{est.y_opt_real:.3f},{est.x_opt_real:.3f},{est.y_int},"
              f"{rep.x_closed_form},{rep.x_exhaustive},{rep.throughput_ratio:.4f},{int(rep.flagged)}")
    return 1 if bad and args.strict else 0


def cmd_mc(args) -> int:
    plan = AmpduPlan.from_profile_string(args.plan)
    spec = TrialSpec(plan, msdu_profile(args.msdu), args.ber, args.trials, args.seed)
    mean, se = simulate_goodput(spec)
    print(f"mean={mean:.3f} stderr={se:.3f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dlthroughput",
                                description="DL throughput bounds for 11ac/11ax with two-level aggregation.")
    p.add_argument("--tables", help=f"PHY table CSV (default: ${TABLES_ENV_VAR} or the bundled file)")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    e = sub.add_parser("eval", help="optimize (or evaluate a given plan for) one configuration")
    e.add_argument("--std", choices=["ac", "ax"], required=True, type=str.lower)
    e.add_argument("--flavor", choices=["su", "mu"], required=True, type=str.lower)
    e.add_argument("--n", type=int, help="stations per MU group (default 4)")
    e.add_argument("--m", type=int, default=1, help="cycles per round, for access delay")
    e.add_argument("--mcs", type=int, required=True)
    e.add_argument("--ber", type=float, default=0.0)
    e.add_argument("--msdu", type=int, default=1500)
    e.add_argument("--window", choices=["64", "256"])
    e.add_argument("--ul-mode", choices=["mu-mimo", "ofdma"], type=str.lower)
    e.add_argument("--no-tf-reserve", action="store_true",
                   help="let MU data MPDUs use the whole BAck window")
    e.add_argument("--plan", help="evaluate this plan instead of searching, e.g. 72*7+3*6")
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.set_defaults(func=cmd_eval)

    def out_opts(sp, jobs=True):
        sp.add_argument("--format", choices=["csv", "json"], default="csv")
        sp.add_argument("--output", "-o", help="output file (default stdout)")
        if jobs:
            sp.add_argument("--jobs", "-j", type=int, default=1)

    s = sub.add_parser("sweep", help="grid of (S, flavor, MCS, BER, MSDU) records")
    s.add_argument("--stations", type=_ints, default=[1, 4, 8, 16, 32, 64])
    s.add_argument("--ber", type=_floats, default=[0.0])
    s.add_argument("--msdu", type=_ints, default=[1500])
    s.add_argument("--flavors", type=_names, help="e.g. MU_AX or MU_AX(8),SU_AC")
    s.add_argument("--mcs", type=_ints)
    out_opts(s)
    s.set_defaults(func=cmd_sweep)

    for name, fn, text in (("fig5", cmd_fig5, "best throughput and access delay per flavor"),
                           ("fig6", cmd_fig6, "MU_AX(4)/MU_AX(64) per MCS and variant"),
                           ("fig7", cmd_fig7, "throughput against MPDU count")):
        f = sub.add_parser(name, help=text)
        out_opts(f)
        f.set_defaults(func=fn)

    v = sub.add_parser("validate-tables", help="check a PHY table file")
    v.add_argument("path", nargs="?")
    v.set_defaults(func=cmd_validate_tables)

    a = sub.add_parser("approx", help="closed-form estimate against exhaustive search")
    a.add_argument("--n", type=int, default=64)
    a.add_argument("--mcs", type=int)
    a.add_argument("--ber", type=float, default=0.0)
    a.add_argument("--msdu", type=int, default=1500)
    a.add_argument("--window", choices=["64", "256"], default="256")
    a.add_argument("--strict", action="store_true", help="exit 1 when a case is flagged")
    a.set_defaults(func=cmd_approx)

    mc = sub.add_parser("mc")  # debugging aid, not listed
    mc.add_argument("--plan", default="1*1")
    mc.add_argument("--msdu", type=int, default=1500)
    mc.add_argument("--ber", type=float, default=1e-5)
    mc.add_argument("--trials", type=int, default=100000)
    mc.add_argument("--seed", type=int, default=0)
    mc.set_defaults(func=cmd_mc)
    sub._choices_actions = [c for c in sub._choices_actions if c.dest != "mc"]
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.tables:
        os.environ[TABLES_ENV_VAR] = args.tables
    try:
        return args.func(args)
    except TableParseError as exc:
        for line in exc.problems:
            print(line, file=sys.stderr)
        return 1
    except ModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
