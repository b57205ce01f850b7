"""Parameter sweeps and the figure presets, with optional process fan-out.

Searches are farmed out per configuration; records are then assembled in a
fixed order in the parent, so output does not depend on the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from .config import EvalConfig, FlavorKind, UlMode
from .errors import Unavailable
from .frames import Window
from .optimizer import per_x_best
from .airtime import resolve
from .params import STATION_COUNTS, Standard
from .planner import (
    _CACHE,
    Flavor,
    applicable_mcs,
    best_per_flavor,
    enumerate_flavors,
    evaluate_flavor,
    flavor_families,
    prime_cache,
    solve,
)
from .records import MpduCountRecord, SweepRecord

FIG_BERS = (0.0, 1e-6, 1e-5)
FIG_MSDUS = (64, 512, 1500)
FIG7_CASES = ((4, 11), (64, 9))


def _map(fn, items: list, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [fn(i) for i in items]


def precompute(configs: Iterable[EvalConfig], jobs: int = 1) -> None:
    todo = [c for c in dict.fromkeys(configs) if c not in _CACHE]
    prime_cache(dict(zip(todo, _map(solve, todo, jobs))))


def _variants(stations: int, flavors: Sequence[str] | None) -> list[Flavor]:
    out = enumerate_flavors(stations)
    if flavors:
        out = [f for f in out if any(f.matches(p) for p in flavors)]
    return out


def sweep(stations: Sequence[int], bers: Sequence[float], msdus: Sequence[int],
          flavors: Sequence[str] | None = None, mcs: Sequence[int] | None = None,
          jobs: int = 1) -> list[SweepRecord]:
    """One record per (S, flavor variant, MCS, BER, MSDU); N/A MCS are skipped."""
    tasks = []
    for s in stations:
        for f in _variants(s, flavors):
            for m in (mcs if mcs is not None else applicable_mcs(f)):
                if m not in applicable_mcs(f):
                    continue
                for ber in bers:
                    for msdu in msdus:
                        tasks.append((s, f, m, ber, msdu))
    precompute((f.config(m, ber, msdu) for _, f, m, ber, msdu in tasks), jobs)
    out = []
    for s, f, m, ber, msdu in tasks:
        try:
            rep = evaluate_flavor(f, m, ber, msdu)
        except Unavailable:
            continue
        out.append(SweepRecord.from_report(s, ber, msdu, rep))
    return out


def fig5(jobs: int = 1, msdu_bytes: int = 1500) -> list[SweepRecord]:
    """Best throughput per flavor family and station count, with access delay."""
    families = [(s, fam, ber) for s in STATION_COUNTS for ber in FIG_BERS for fam in flavor_families(s)]
    precompute((v.config(m, ber, msdu_bytes) for _, fam, ber in families
                for v in fam.variants() for m in applicable_mcs(fam)), jobs)
    return [SweepRecord.from_report(s, ber, msdu_bytes, best_per_flavor(fam, ber, msdu_bytes))
            for s, fam, ber in families]


def fig6(jobs: int = 1, msdu_bytes: int = 1500) -> list[SweepRecord]:
    """Per-MCS curves of MU_AX(4) and MU_AX(64) for every window/UL mode."""
    out = []
    for n in (4, 64):
        out += sweep([n], FIG_BERS, [msdu_bytes], flavors=[f"MU_AX({n})"], jobs=jobs)
    return out


def mpdu_count_curve(config: EvalConfig) -> list[MpduCountRecord]:
    path = resolve(config)
    table = per_x_best(path)
    out = []
    for x in table.x.tolist():
        if not table.feasible(x):
            continue
        out.append(MpduCountRecord(
            n=config.n, mcs=config.mcs, ber=config.ber, msdu_bytes=config.msdu_bytes,
            window=config.window.value, ul_mode=config.ul_mode.value, x=x,
            total_msdus=int(table.total_msdus[x - 1]),
            y_profile=table.plan(x, path).profile_string(),
            throughput_mbps=round(float(table.throughput_mbps[x - 1]), 1)))
    return out


def fig7(jobs: int = 1) -> list[MpduCountRecord]:
    """Throughput against the number of MPDUs, W256 with UL MU-MIMO."""
    configs = [EvalConfig(Standard.AX, FlavorKind.MU_AX, n, mcs, ber, msdu,
                          window=Window.W256, ul_mode=UlMode.MU_MIMO)
               for n, mcs in FIG7_CASES for ber in FIG_BERS for msdu in FIG_MSDUS]
    return [r for curve in _map(mpdu_count_curve, configs, jobs) for r in curve]
