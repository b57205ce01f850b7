"""DL service scheduling flavors m*MODE(n) for a station count S."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .config import EvalConfig, FlavorKind, UlMode
from .errors import DomainError, Unavailable
from .frames import Window
from .optimizer import OptimizerResult, optimize_exhaustive
from .params import MCS_RANGE, STATION_COUNTS, ParameterSet, Standard, default_parameters
from .throughput import ThroughputResult

AX_MU_GROUPS = (4, 8, 16, 32, 64)


@dataclass(frozen=True)
class Flavor:
    """m sequential cycles, each serving a disjoint group of n stations.

    ``window``/``ul_mode`` set to None stands for the whole family: the best
    variant is picked when evaluating.
    """

    standard: Standard
    kind: FlavorKind
    n: int
    m: int
    window: Optional[Window] = None
    ul_mode: Optional[UlMode] = None

    @property
    def stations(self) -> int:
        return self.m * self.n

    @property
    def family(self) -> "Flavor":
        return Flavor(self.standard, self.kind, self.n, self.m)

    @property
    def mode(self) -> str:
        return {FlavorKind.SU: f"SU_{self.standard.value}", FlavorKind.MU_AC4: "MU_AC"}.get(self.kind, "MU_AX")

    @property
    def name(self) -> str:
        return f"{self.mode}({self.n})"

    @property
    def label(self) -> str:
        return f"{self.m}*{self.name}"

    def matches(self, pattern: str) -> bool:
        """``MU_AX`` matches every group size, ``MU_AX(8)`` only n=8."""
        pattern = pattern.strip().upper()
        return pattern in (self.mode, self.name)

    @property
    def variant(self) -> str:
        parts = [p.value for p in (self.window, self.ul_mode) if p is not None]
        return "/".join(parts) if parts else "best"

    def variants(self) -> list["Flavor"]:
        if self.window is not None and self.ul_mode is not None:
            return [self]
        if self.kind is FlavorKind.MU_AX:
            windows, modes = [Window.W64, Window.W256], [UlMode.MU_MIMO, UlMode.OFDMA]
        elif self.standard is Standard.AX:
            windows, modes = [Window.W64, Window.W256], [UlMode.LEGACY]
        else:
            windows, modes = [Window.W64], [UlMode.LEGACY]
        if self.window is not None:
            windows = [self.window]
        if self.ul_mode is not None:
            modes = [self.ul_mode]
        return [Flavor(self.standard, self.kind, self.n, self.m, w, u) for w in windows for u in modes]

    def config(self, mcs: int, ber: float, msdu_bytes: int) -> EvalConfig:
        return EvalConfig(self.standard, self.kind, self.n, mcs, ber, msdu_bytes,
                          window=self.window, ul_mode=self.ul_mode)


@dataclass(frozen=True)
class PlanReport:
    flavor: Flavor
    mcs: int
    result: ThroughputResult
    searched: int = 0

    @property
    def access_delay_us(self) -> float:
        return self.flavor.m * self.result.cycle_us

    @property
    def throughput_mbps(self) -> float:
        return self.result.throughput_mbps


def _check_stations(s: int) -> int:
    if s not in STATION_COUNTS:
        raise DomainError(f"station count must be one of {STATION_COUNTS}, got {s}")
    return s


def flavor_families(s: int) -> list[Flavor]:
    """The scheduling flavors for S stations, one entry per family."""
    _check_stations(s)
    out = [Flavor(Standard.AC, FlavorKind.SU, 1, s)]
    if s >= 4:
        out.append(Flavor(Standard.AC, FlavorKind.MU_AC4, 4, s // 4))
    out.append(Flavor(Standard.AX, FlavorKind.SU, 1, s))
    out.extend(Flavor(Standard.AX, FlavorKind.MU_AX, n, s // n) for n in AX_MU_GROUPS if n <= s)
    return out


def enumerate_flavors(s: int) -> list[Flavor]:
    """Every concrete flavor variant for S stations (window x UL mode expanded)."""
    return [v for fam in flavor_families(s) for v in fam.variants()]


def applicable_mcs(flavor: Flavor) -> range:
    return range(10) if flavor.standard is Standard.AC else MCS_RANGE


_CACHE: dict = {}


def optimize_cached(config: EvalConfig, params: ParameterSet | None = None) -> OptimizerResult:
    """Memoized search for the default tables; throughput does not depend on m,
    so one search serves every repeat count."""
    if params is not None and params is not default_parameters():
        return optimize_exhaustive(config, params)
    hit = _CACHE.get(config)
    if hit is None:
        hit = solve(config)
        _CACHE[config] = hit
    if isinstance(hit, Unavailable):
        raise hit
    return hit


def solve(config: EvalConfig):
    """Search result, or the Unavailable error as a value (picklable for workers)."""
    try:
        return optimize_exhaustive(config)
    except Unavailable as exc:
        return exc


def prime_cache(results: dict) -> None:
    _CACHE.update(results)


def clear_cache() -> None:
    _CACHE.clear()


def evaluate_flavor(flavor: Flavor, mcs: int, ber: float, msdu_bytes: int,
                    params: ParameterSet | None = None) -> PlanReport:
    """Best plan for one concrete variant at one MCS."""
    res = optimize_cached(flavor.config(mcs, ber, msdu_bytes), params)
    return PlanReport(flavor, mcs, res.best, res.searched)


def _better(a: PlanReport, b: Optional[PlanReport]) -> bool:
    if b is None:
        return True
    if a.throughput_mbps != b.throughput_mbps:
        return a.throughput_mbps > b.throughput_mbps
    return a.access_delay_us < b.access_delay_us


def _best_of(reports: Iterable[PlanReport]) -> Optional[PlanReport]:
    best = None
    for r in reports:
        if _better(r, best):
            best = r
    return best


def _reports(flavor: Flavor, ber: float, msdu_bytes: int, params, mcs_list=None):
    for variant in flavor.variants():
        for mcs in mcs_list if mcs_list is not None else applicable_mcs(flavor):
            try:
                yield evaluate_flavor(variant, mcs, ber, msdu_bytes, params)
            except Unavailable:
                continue


def best_per_flavor(flavor: Flavor, ber: float, msdu_bytes: int = 1500,
                    params: ParameterSet | None = None, mcs_list=None) -> PlanReport:
    """Maximize over MCS, and over window/UL mode when the flavor leaves them open."""
    best = _best_of(_reports(flavor, ber, msdu_bytes, params, mcs_list))
    if best is None:
        raise Unavailable(f"no MCS available for {flavor.label}")
    return best


def best_overall(s: int, ber: float, msdu_bytes: int = 1500,
                 params: ParameterSet | None = None) -> PlanReport:
    return _best_of(best_per_flavor(f, ber, msdu_bytes, params) for f in flavor_families(s))


def ranking(s: int, ber: float, msdu_bytes: int = 1500,
            params: ParameterSet | None = None) -> list[PlanReport]:
    """Best report per family, highest throughput first."""
    reports = [best_per_flavor(f, ber, msdu_bytes, params) for f in flavor_families(s)]
    return sorted(reports, key=lambda r: (-r.throughput_mbps, r.access_delay_us))
