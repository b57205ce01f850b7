"""Frame airtimes with OFDM-symbol rounding, and full cycle timings.

Symbol counts are computed with exact rational arithmetic (rates and symbol
durations are decimal table values), so a frame that exactly fills its last
symbol never spills into a spurious extra one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from fractions import Fraction

from .config import EvalConfig, FlavorKind, UlMode
from .errors import InvalidValue, Unavailable
from .frames import AmpduPlan, MsduProfile, Window, msdu_profile, plan_bits
from .params import (
    ControlFrameSizes,
    FramingLimits,
    Link,
    Mode,
    ParameterSet,
    PhyEntry,
    Standard,
    default_parameters,
    lookup,
)

SERVICE_TAIL_BITS = 22


def exact(value: float) -> Fraction:
    """Decimal value of a float as printed, e.g. 13.6 -> 68/5."""
    return Fraction(repr(float(value)))


def bits_per_symbol(rate_mbps: float, sym_us: float) -> Fraction:
    return exact(rate_mbps) * exact(sym_us)


def symbols_for(bits: int, rate_mbps: float, sym_us: float) -> int:
    """OFDM symbols needed for ``bits`` (tail bits already included)."""
    if rate_mbps is None or rate_mbps <= 0:
        raise InvalidValue(f"rate must be positive, got {rate_mbps}")
    if sym_us <= 0:
        raise InvalidValue(f"symbol duration must be positive, got {sym_us}")
    cap = bits_per_symbol(rate_mbps, sym_us)
    return math.ceil(Fraction(int(bits)) / cap)


def tx_time(bits: int, rate_mbps: float, sym_us: float, tail_bits: int = SERVICE_TAIL_BITS) -> float:
    """sym * ceil((bits + tail) / (sym * rate)), in microseconds."""
    if bits < 0:
        raise InvalidValue("bit count must be >= 0")
    return symbols_for(bits + tail_bits, rate_mbps, sym_us) * sym_us


def _require(entry: PhyEntry) -> PhyEntry:
    if not entry.available:
        std, mode, link, n, mcs = entry.key
        raise Unavailable(f"MCS{mcs} unavailable at n={n} ({std.value} {mode.value} {link.value})")
    return entry


def t_data_su_mu_ac(total_bits: int, entry: PhyEntry, sym_us: float = 13.6,
                    tail_bits: int = SERVICE_TAIL_BITS) -> float:
    """A-MPDU airtime with no UL-allocation signaling (SU and 11ac MU)."""
    _require(entry)
    return tx_time(total_bits, entry.rate_mbps, sym_us, tail_bits)


def ul_signaling_bits(x_mpdus: int, frames: ControlFrameSizes = ControlFrameSizes(),
                      limits: FramingLimits = FramingLimits()) -> int:
    """Bits spent telling stations their UL RU: one TF MPDU, or an HE control
    element in every data MPDU when there are fewer than ``frames.tf_min_mpdus``."""
    if x_mpdus >= frames.tf_min_mpdus:
        return 8 * (limits.mpdu_overhead_bytes + frames.tf_mpdu_overhead_bytes)
    return 8 * frames.he_ctrl_elem_bytes * x_mpdus


def t_data_ax_mu(plan: AmpduPlan, profile: MsduProfile, entry: PhyEntry, sym_us: float = 13.6,
                 frames: ControlFrameSizes = ControlFrameSizes(),
                 limits: FramingLimits = FramingLimits(),
                 tail_bits: int = SERVICE_TAIL_BITS) -> float:
    _require(entry)
    bits = sum(plan_bits(plan, profile, limits)) + ul_signaling_bits(plan.x_mpdus, frames, limits)
    return tx_time(bits, entry.rate_mbps, sym_us, tail_bits)


def back_bytes(window: Window, frames: ControlFrameSizes = ControlFrameSizes()) -> int:
    return frames.back_256_bytes if Window.parse(window) is Window.W256 else frames.back_64_bytes


def t_back(window: Window, entry: PhyEntry, sym_us: float,
           frames: ControlFrameSizes = ControlFrameSizes(), tail_bits: int = SERVICE_TAIL_BITS) -> float:
    _require(entry)
    return tx_time(8 * back_bytes(window, frames), entry.rate_mbps, sym_us, tail_bits)


@dataclass(frozen=True)
class CycleTiming:
    aifs_us: float
    backoff_us: float
    p_dl_us: float
    t_data_us: float
    pe_dl_us: float
    sifs_total_us: float
    p_ul_total_us: float
    t_back_total_us: float
    t_bar_total_us: float
    pe_ul_us: float

    @property
    def total_us(self) -> float:
        return sum(getattr(self, f.name) for f in fields(self))

    def as_dict(self) -> dict:
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["total_us"] = self.total_us
        return d


@dataclass(frozen=True)
class PhyPath:
    """A configuration resolved against the tables: every number one cycle needs."""

    config: EvalConfig
    params: ParameterSet
    profile: MsduProfile
    dl: PhyEntry
    ul: PhyEntry
    dl_sym_us: float
    ul_sym_us: float
    pe_us: float
    multiplier: int
    max_mpdus: int
    back_count: int
    bar_count: int
    ul_exchanges: int  # SIFS + UL preamble pairs per cycle

    @property
    def signals_ul(self) -> bool:
        return self.config.kind is FlavorKind.MU_AX

    def signaling_bits(self, x_mpdus: int) -> int:
        if not self.signals_ul:
            return 0
        return ul_signaling_bits(x_mpdus, self.params.frames, self.params.limits)

    def signaling_bytes(self, x_mpdus: int) -> int:
        return self.signaling_bits(x_mpdus) // 8

    @property
    def tail_bits(self) -> int:
        return self.params.timing.service_tail_bits

    @property
    def access_us(self) -> float:
        t = self.params.timing
        return t.aifs_us + t.backoff_avg_us

    def max_data_symbols(self) -> int:
        """Largest DL data symbol count the PPDU airtime limit allows."""
        lim = self.params.limits
        budget = exact(lim.ppdu_max_us) - exact(self.dl.preamble_us)
        if lim.cap_includes_access:
            t = self.params.timing
            budget -= exact(t.aifs_us) + exact(t.backoff_avg_us)
        if budget < 0:
            return 0
        return math.floor(budget / exact(self.dl_sym_us))

    def data_symbol_bits(self) -> Fraction:
        return bits_per_symbol(self.dl.rate_mbps, self.dl_sym_us)

    def data_symbols(self, payload_bits: int, x_mpdus: int) -> int:
        return symbols_for(payload_bits + self.signaling_bits(x_mpdus) + self.tail_bits,
                           self.dl.rate_mbps, self.dl_sym_us)

    def t_back_us(self) -> float:
        return t_back(self.config.window, self.ul, self.ul_sym_us, self.params.frames, self.tail_bits)

    def t_bar_us(self) -> float:
        return tx_time(8 * self.params.frames.bar_bytes, self.ul.rate_mbps, self.ul_sym_us, self.tail_bits)

    def fixed_overhead_us(self) -> float:
        """Cycle time not spent on DL data symbols."""
        return cycle_timing(self, t_data_us=0.0).total_us


def resolve(config: EvalConfig, params: ParameterSet | None = None) -> PhyPath:
    """Bind a configuration to its table cells; raises Unavailable for N/A cells."""
    params = params or default_parameters()
    kind, std, n, mcs = config.kind, config.standard, config.n, config.mcs
    sym = params.symbols
    if kind is FlavorKind.SU:
        dl = lookup(params, (std, Mode.SU, Link.DL_DATA, 1, mcs))
        ul = lookup(params, (std, Mode.SU, Link.UL_BACK_LEGACY, 1, mcs))
    elif kind is FlavorKind.MU_AC4:
        dl = lookup(params, (Standard.AC, Mode.MU, Link.DL_DATA, 4, mcs))
        ul = lookup(params, (Standard.AC, Mode.MU, Link.UL_BACK_LEGACY, 4, mcs))
    else:
        link = Link.UL_BACK_OFDMA if config.ul_mode is UlMode.OFDMA else Link.UL_BACK_MUMIMO
        dl = lookup(params, (Standard.AX, Mode.MU, Link.DL_DATA, n, mcs))
        ul = lookup(params, (Standard.AX, Mode.MU, link, n, mcs))
    _require(dl)
    _require(ul)

    legacy_ul = config.ul_mode is UlMode.LEGACY
    max_mpdus = config.window.size
    if kind is FlavorKind.MU_AX and config.reserve_tf_slot:
        max_mpdus -= 1
    return PhyPath(
        config=config,
        params=params,
        profile=msdu_profile(config.msdu_bytes, params.limits),
        dl=dl,
        ul=ul,
        dl_sym_us=sym.dl_sym_us,
        ul_sym_us=sym.legacy_sym_us if legacy_ul else sym.ul_sym_us,
        pe_us=params.timing.pe_mu_us if kind is FlavorKind.MU_AX else params.timing.pe_su_us,
        multiplier={FlavorKind.SU: 1, FlavorKind.MU_AC4: 4}.get(kind, n),
        max_mpdus=max_mpdus,
        back_count=4 if kind is FlavorKind.MU_AC4 else 1,
        bar_count=3 if kind is FlavorKind.MU_AC4 else 0,
        ul_exchanges=7 if kind is FlavorKind.MU_AC4 else 1,
    )


def cycle_timing(path: PhyPath, t_data_us: float) -> CycleTiming:
    """Assemble the cycle denominator around a given DL data airtime.

    SU:    AIFS+BO+P_DL+T(DATA)+SIFS+P_UL+T(BAck)
    MU_AC: AIFS+BO+P_DL+T(DATA)+7(SIFS+P_UL)+4T(BAck)+3T(BAR)
    MU_AX: AIFS+BO+P_DL+T'(DATA)+PE+SIFS+P_UL+T'(BAck)+PE
    """
    t = path.params.timing
    return CycleTiming(
        aifs_us=t.aifs_us,
        backoff_us=t.backoff_avg_us,
        p_dl_us=path.dl.preamble_us,
        t_data_us=t_data_us,
        pe_dl_us=path.pe_us,
        sifs_total_us=path.ul_exchanges * t.sifs_us,
        p_ul_total_us=path.ul_exchanges * path.ul.preamble_us,
        t_back_total_us=path.back_count * path.t_back_us(),
        t_bar_total_us=path.bar_count * path.t_bar_us() if path.bar_count else 0.0,
        pe_ul_us=path.pe_us,
    )


def plan_cycle_timing(path: PhyPath, plan: AmpduPlan) -> CycleTiming:
    bits = sum(plan_bits(plan, path.profile, path.params.limits))
    return cycle_timing(path, path.data_symbols(bits, plan.x_mpdus) * path.dl_sym_us)
