"""Per-cycle throughput for SU, 11ac MU and 11ax MU downlink cycles."""

from __future__ import annotations

from dataclasses import dataclass

from .airtime import CycleTiming, PhyPath, cycle_timing, resolve
from .config import EvalConfig, FlavorKind
from .errors import InfeasiblePlan, InvalidValue
from .frames import AmpduPlan, check_plan_framing, expected_goodput_bits
from .params import ParameterSet


@dataclass(frozen=True)
class ThroughputResult:
    throughput_mbps: float
    cycle_us: float
    goodput_bits_per_cycle: float  # expected payload bits of one station's A-MPDU
    plan: AmpduPlan
    msdus_per_cycle: int           # over all stations served in the cycle
    timing: CycleTiming
    config: EvalConfig
    data_symbols: int

    @property
    def msdus_per_ampdu(self) -> int:
        return self.plan.total_msdus

    @property
    def stations(self) -> int:
        return self.msdus_per_cycle // self.plan.total_msdus


def evaluate_path(path: PhyPath, plan: AmpduPlan) -> ThroughputResult:
    """Throughput of ``plan`` on an already resolved path.

    The plan must respect the MPDU count, MPDU size, A-MPDU size and PPDU
    airtime limits; otherwise InfeasiblePlan is raised.
    """
    params = path.params
    cfg = path.config
    if (plan.window, plan.standard) != (cfg.window, cfg.standard):
        plan = AmpduPlan(plan.y_per_mpdu, window=cfg.window, standard=cfg.standard)
    sig_bytes = path.signaling_bytes(plan.x_mpdus)
    bits = check_plan_framing(plan, path.profile, path.max_mpdus, params.limits, extra_bytes=sig_bytes)
    symbols = path.data_symbols(sum(bits), plan.x_mpdus)
    if symbols > path.max_data_symbols():
        raise InfeasiblePlan(
            f"{plan.x_mpdus} MPDUs / {plan.total_msdus} MSDUs need {symbols} data symbols, "
            f"airtime limit allows {path.max_data_symbols()}")
    goodput = expected_goodput_bits(plan, path.profile, path.config.ber, params.limits)
    timing = cycle_timing(path, symbols * path.dl_sym_us)
    cycle = timing.total_us
    return ThroughputResult(
        throughput_mbps=path.multiplier * goodput / cycle,
        cycle_us=cycle,
        goodput_bits_per_cycle=goodput,
        plan=plan,
        msdus_per_cycle=path.multiplier * plan.total_msdus,
        timing=timing,
        config=path.config,
        data_symbols=symbols,
    )


def evaluate(config: EvalConfig, plan: AmpduPlan, params: ParameterSet | None = None) -> ThroughputResult:
    return evaluate_path(resolve(config, params), plan)


def _expect(config: EvalConfig, kind: FlavorKind):
    if config.kind is not kind:
        raise InvalidValue(f"expected a {kind.value} configuration, got {config.kind.value}")


def eval_su(config: EvalConfig, plan: AmpduPlan, params: ParameterSet | None = None) -> ThroughputResult:
    _expect(config, FlavorKind.SU)
    return evaluate(config, plan, params)


def eval_mu_ac(config: EvalConfig, plan: AmpduPlan, params: ParameterSet | None = None) -> ThroughputResult:
    _expect(config, FlavorKind.MU_AC4)
    return evaluate(config, plan, params)


def eval_mu_ax(config: EvalConfig, plan: AmpduPlan, params: ParameterSet | None = None) -> ThroughputResult:
    _expect(config, FlavorKind.MU_AX)
    return evaluate(config, plan, params)
