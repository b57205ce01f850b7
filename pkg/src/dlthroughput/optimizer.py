"""A-MPDU structure search.

The exhaustive search covers every near-equal plan: X MPDUs carrying N MSDUs
in total, with N mod X of them holding one MSDU more than the rest.  Rather
than walking the (X, N) grid directly, it walks (X, data-symbol count): for a
given X and symbol budget the largest N that fits is found in closed form,
then capped at X times the per-MPDU goodput peak.  Every plan on the grid is
dominated by one of those candidates (same X, no more airtime, no less
goodput), so the argmax is the same as a full scan at a fraction of the cost.

The closed-form estimates drop symbol rounding and treat the cycle as a
continuous function of Y and X.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .airtime import PhyPath, resolve
from .config import EvalConfig
from .errors import Infeasible, InvalidValue, MsduTooLarge, OracleLimit
from .frames import (
    AmpduPlan,
    MsduProfile,
    check_ber,
    max_msdus_per_mpdu,
    mpdu_bits,
    mpdu_success_probability,
)
from .params import FramingLimits, ParameterSet
from .throughput import ThroughputResult, evaluate_path

BER_ZERO_GUARD = 1e-12
ORACLE_MAX_X = 5
ORACLE_MAX_TOTAL = 12


@dataclass(frozen=True)
class OptimizerResult:
    best: ThroughputResult
    x_opt: int
    y_base: int
    y_plus_one_count: int
    searched: int


@dataclass(frozen=True)
class PerXBest:
    """Best near-equal plan for each MPDU count; N is 0 where X does not fit."""

    x: np.ndarray
    total_msdus: np.ndarray
    throughput_mbps: np.ndarray

    def feasible(self, x: int) -> bool:
        return 1 <= x <= len(self.x) and self.total_msdus[x - 1] > 0

    def plan(self, x: int, path: PhyPath) -> AmpduPlan:
        return AmpduPlan.near_equal(x, int(self.total_msdus[x - 1]),
                                    window=path.config.window, standard=path.config.standard)


@dataclass
class _Grid:
    path: PhyPath
    x: np.ndarray       # (nx, 1)
    n: np.ndarray       # (nx, ns) candidate MSDU totals
    valid: np.ndarray
    thr: np.ndarray     # throughput, -inf where invalid


def _tables(path: PhyPath):
    lim = path.params.limits
    try:
        ymax = max_msdus_per_mpdu(path.profile, lim)
    except MsduTooLarge as exc:
        raise Infeasible(str(exc)) from exc
    c = np.zeros(ymax + 2, dtype=np.int64)
    g = np.zeros(ymax + 2)
    for y in range(1, ymax + 1):
        c[y] = mpdu_bits(path.profile, y, lim)
        g[y] = 8 * y * path.profile.l_data_bytes * mpdu_success_probability(int(c[y]), path.config.ber)
    c[ymax + 1] = c[ymax]
    return ymax, c, g


def _grid(path: PhyPath) -> _Grid:
    params = path.params
    ymax, c, g = _tables(path)
    # MPDU length is affine in Y (Len and the overhead are both 4-byte multiples),
    # so the bits of a near-equal (X, N) plan are X*base + N*per_msdu
    per_msdu = 8 * path.profile.len_bytes
    base = int(c[1]) - per_msdu
    if not np.array_equal(c[1:ymax + 1], base + per_msdu * np.arange(1, ymax + 1)):
        raise AssertionError("MPDU length is not affine in the MSDU count")
    y_peak = int(np.argmax(g[1:ymax + 1])) + 1
    s_air = path.max_data_symbols()
    if s_air < 1:
        raise Infeasible(f"the preamble alone exhausts the airtime limit ({path.config.label})")

    cap = path.data_symbol_bits()
    num, den = cap.numerator, cap.denominator
    x = np.arange(1, path.max_mpdus + 1, dtype=np.int64)[:, None]
    s = np.arange(1, s_air + 1, dtype=np.int64)[None, :]
    sig = np.array([path.signaling_bits(int(v)) for v in x[:, 0]], dtype=np.int64)[:, None]
    fixed = x * base + sig + path.tail_bits

    budget = np.minimum((s * num) // den, 8 * params.limits.ampdu_max_bytes(path.config.standard) + path.tail_bits)
    n = np.minimum((budget - fixed) // per_msdu, x * min(ymax, y_peak))
    valid = n >= x
    n = np.where(valid, n, x)

    yb, k = n // x, n % x
    goodput = (x - k) * g[yb] + k * g[yb + 1]
    symbols = -((-(fixed + n * per_msdu) * den) // num)
    cycle = path.fixed_overhead_us() + symbols * path.dl_sym_us
    thr = np.where(valid, path.multiplier * goodput / cycle, -np.inf)
    return _Grid(path, x, np.where(valid, n, 0), valid, thr)


def _searched(grid: _Grid) -> int:
    # N is nondecreasing along each row, so distinct plans are where it steps
    n = np.where(grid.valid, grid.n, -1)
    steps = np.diff(n, axis=1, prepend=-1) != 0
    return int((steps & grid.valid).sum())


def optimize_path(path: PhyPath) -> OptimizerResult:
    grid = _grid(path)
    if not grid.valid.any():
        raise Infeasible(f"no plan fits the airtime limit ({path.config.label}, MCS{path.config.mcs})")
    # row-major argmax: smallest X first, then the smallest N reaching the maximum
    i, j = np.unravel_index(int(np.argmax(grid.thr)), grid.thr.shape)
    x_opt, total = int(grid.x[i, 0]), int(grid.n[i, j])
    plan = AmpduPlan.near_equal(x_opt, total, window=path.config.window, standard=path.config.standard)
    best = evaluate_path(path, plan)
    y_base, extra = divmod(total, x_opt)
    return OptimizerResult(best=best, x_opt=x_opt, y_base=y_base, y_plus_one_count=extra,
                           searched=_searched(grid))


def optimize_exhaustive(config: EvalConfig, params: ParameterSet | None = None) -> OptimizerResult:
    """Throughput-maximizing near-equal plan; ties go to the smallest X, then the smallest Y."""
    return optimize_path(resolve(config, params))


def per_x_best(path: PhyPath) -> PerXBest:
    grid = _grid(path)
    j = np.argmax(grid.thr, axis=1)
    rows = np.arange(grid.thr.shape[0])
    thr = grid.thr[rows, j]
    ok = np.isfinite(thr)
    return PerXBest(x=grid.x[:, 0].copy(), total_msdus=np.where(ok, grid.n[rows, j], 0),
                    throughput_mbps=np.where(ok, thr, 0.0))


# -- closed form -------------------------------------------------------------

@dataclass(frozen=True)
class ClosedFormEstimate:
    y_opt_real: float
    x_opt_real: float
    y_candidates: frozenset
    y_int: int
    x_opt_int: int
    throughput_mbps: Optional[float] = None
    plan: Optional[AmpduPlan] = None


def y_objective(y: int, len_bytes: int, overhead_bytes: int, ber: float) -> float:
    """Payload share of one MPDU's bits times its survival probability."""
    c = 8 * (y * len_bytes + overhead_bytes)
    return y / c * mpdu_success_probability(c, ber)


def y_opt_real(len_bytes: int, ber: float, overhead_bytes: int = 36) -> float:
    """Stationary point of the per-MPDU objective; requires ber > 0."""
    ln = math.log1p(-ber)
    o = overhead_bytes
    return o * (math.sqrt(1 - 4 / (8 * o * ln)) - 1) / (2 * len_bytes)


def x_opt_real(y: int, len_bytes: int, r_dl: float, p_dl: float, airtime_cap: float,
               overhead_bytes: int = 36) -> float:
    return r_dl * (airtime_cap - p_dl) / (8 * (y * len_bytes + overhead_bytes))


def closed_form(profile: MsduProfile, ber: float, r_dl: float, p_dl: float, airtime_cap: float = 5484.0,
                *, limits: FramingLimits = FramingLimits(),
                score: Callable[[int], Optional[float]] | None = None) -> ClosedFormEstimate:
    """Closed-form estimate of (Y, X) without symbol rounding.

    ``score(x)`` should return the true throughput of the best plan with x
    MPDUs, or None if none fits; it settles floor vs ceil of the real X.
    Without it the floor is taken.
    """
    ber = check_ber(ber)
    if r_dl <= 0:
        raise InvalidValue("rate must be positive")
    if airtime_cap <= p_dl:
        raise InvalidValue("airtime limit must exceed the preamble")
    o = limits.mpdu_overhead_bytes
    ymax = max_msdus_per_mpdu(profile, limits)

    if ber < BER_ZERO_GUARD:
        y_real = float(ymax)
        cands = frozenset({ymax})
    else:
        y_real = y_opt_real(profile.len_bytes, ber, o)
        cands = frozenset(min(ymax, max(1, v)) for v in (math.floor(y_real), math.ceil(y_real)))
    y_int = max(sorted(cands), key=lambda y: y_objective(y, profile.len_bytes, o, ber))
    x_real = x_opt_real(y_int, profile.len_bytes, r_dl, p_dl, airtime_cap, o)

    lo = max(1, math.floor(x_real))
    if score is None:
        return ClosedFormEstimate(y_real, x_real, cands, y_int, lo)
    options = {x: score(x) for x in sorted({lo, max(1, math.ceil(x_real))})}
    options = {x: v for x, v in options.items() if v is not None}
    x = lo
    while not options and x > 1:
        x -= 1
        v = score(x)
        if v is not None:
            options[x] = v
    if not options:
        raise Infeasible("no integer MPDU count near the closed-form estimate fits")
    x_int = max(sorted(options), key=lambda k: options[k])
    return ClosedFormEstimate(y_real, x_real, cands, y_int, x_int, throughput_mbps=options[x_int])


def closed_form_for(config: EvalConfig, params: ParameterSet | None = None) -> ClosedFormEstimate:
    """Closed form with the configuration's rate and preamble, integer X settled
    by the best plan the search finds for that exact MPDU count."""
    path = resolve(config, params)
    table = per_x_best(path)

    def score(x: int):
        return float(table.throughput_mbps[x - 1]) if table.feasible(x) else None

    est = closed_form(path.profile, config.ber, path.dl.rate_mbps, path.dl.preamble_us,
                      path.params.limits.ppdu_max_us, limits=path.params.limits, score=score)
    return ClosedFormEstimate(est.y_opt_real, est.x_opt_real, est.y_candidates, est.y_int,
                              est.x_opt_int, est.throughput_mbps, table.plan(est.x_opt_int, path))


@dataclass(frozen=True)
class ValidationReport:
    x_exhaustive: int
    x_closed_form: int
    x_gap: int
    throughput_ratio: float
    flagged: bool


def cross_validate(exhaustive: OptimizerResult, estimate: ClosedFormEstimate,
                   threshold: float = 0.97) -> ValidationReport:
    best = exhaustive.best.throughput_mbps
    ratio = (estimate.throughput_mbps or 0.0) / best if best > 0 else 0.0
    return ValidationReport(
        x_exhaustive=exhaustive.x_opt,
        x_closed_form=estimate.x_opt_int,
        x_gap=abs(exhaustive.x_opt - estimate.x_opt_int),
        throughput_ratio=ratio,
        flagged=ratio < threshold,
    )


# -- composition oracle ------------------------------------------------------

@dataclass(frozen=True)
class OracleResult:
    best: tuple
    value: float
    near_equal: tuple
    near_equal_value: float
    compositions: int


def _partitions(total: int, parts: int, largest: int):
    """Non-increasing tuples of ``parts`` positive ints summing to ``total``."""
    if parts == 1:
        if 1 <= total <= largest:
            yield (total,)
        return
    for first in range(min(largest, total - parts + 1), 0, -1):
        if first * parts < total:
            break
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def unrounded_throughput(path: PhyPath, ys) -> float:
    """Throughput with T(DATA) taken as bits/rate, without symbol rounding."""
    lim = path.params.limits
    bits = [mpdu_bits(path.profile, y, lim) for y in ys]
    goodput = sum(8 * y * path.profile.l_data_bytes * mpdu_success_probability(c, path.config.ber)
                  for y, c in zip(ys, bits))
    t_data = (sum(bits) + path.signaling_bits(len(ys)) + path.tail_bits) / path.dl.rate_mbps
    return path.multiplier * goodput / (path.fixed_overhead_us() + t_data)


def brute_force_composition_oracle(x: int, total_msdus: int, config: EvalConfig,
                                   params: ParameterSet | None = None) -> OracleResult:
    """Score every way to split ``total_msdus`` over ``x`` MPDUs (order is
    irrelevant to the objective, so only sorted splits are scored)."""
    if x > ORACLE_MAX_X or total_msdus > ORACLE_MAX_TOTAL:
        raise OracleLimit(f"oracle handles x <= {ORACLE_MAX_X}, total <= {ORACLE_MAX_TOTAL}")
    if x < 1 or total_msdus < x:
        raise InvalidValue(f"cannot split {total_msdus} MSDUs over {x} MPDUs")
    path = resolve(config, params)
    ymax = max_msdus_per_mpdu(path.profile, path.params.limits)
    scored = [(unrounded_throughput(path, ys), ys) for ys in _partitions(total_msdus, x, ymax)]
    if not scored:
        raise Infeasible("no split respects the MPDU size limit")
    value, best = max(scored, key=lambda t: t[0])
    ne = AmpduPlan.near_equal(x, total_msdus).y_per_mpdu
    return OracleResult(best, value, ne, unrounded_throughput(path, ne), len(scored))
