import math

import pytest
from hypothesis import given, settings, strategies as st

from dlthroughput.airtime import resolve
from dlthroughput.config import EvalConfig
from dlthroughput.errors import InfeasiblePlan, InvalidValue
from dlthroughput.frames import AmpduPlan
from dlthroughput.params import lookup
from dlthroughput.throughput import eval_mu_ac, eval_mu_ax, eval_su, evaluate


def test_mu_ac_single_msdu_by_hand(params):
    cfg = EvalConfig("AC", "MU_AC4", 4, 0)
    res = eval_mu_ac(cfg, AmpduPlan((1,)))
    dl = lookup(params, ("AC", "MU", "DL_DATA", 4, 0))
    t_data = 13.6 * math.ceil((12416 + 22) / (13.6 * dl.rate_mbps))
    cycle = 43 + 67.5 + dl.preamble_us + t_data + 7 * (16 + 20.0) + 4 * 8 + 3 * 8
    assert res.cycle_us == pytest.approx(cycle)
    assert res.throughput_mbps == pytest.approx(4 * 12000 / cycle)
    assert res.msdus_per_cycle == 4


def test_su_known_plan():
    res = eval_su(EvalConfig("AX", "SU", 1, 11, 0.0, 1500, "W256"), AmpduPlan.near_equal(75, 522))
    assert res.throughput_mbps == pytest.approx(1140.5, abs=0.05)
    assert res.goodput_bits_per_cycle == 522 * 12000


def test_mu_ax_known_plan():
    res = eval_mu_ax(EvalConfig("AX", "MU_AX", 8, 11, 1e-5, 1500, "W256"), AmpduPlan.uniform(255, 1))
    assert res.throughput_mbps == pytest.approx(3872.6, abs=0.05)
    assert res.cycle_us == pytest.approx(5583.3)
    assert res.msdus_per_cycle == 8 * 255


def test_kind_mismatch():
    with pytest.raises(InvalidValue):
        eval_su(EvalConfig("AC", "MU_AC4", 4, 0), AmpduPlan((1,)))


def test_infeasible_plans():
    cfg = EvalConfig("AX", "MU_AX", 64, 0, msdu_bytes=1500, window="W64")
    with pytest.raises(InfeasiblePlan, match="airtime"):
        evaluate(cfg, AmpduPlan.uniform(63, 7))
    with pytest.raises(InfeasiblePlan, match="cap of 63"):
        evaluate(cfg, AmpduPlan.uniform(64, 1))
    with pytest.raises(InfeasiblePlan):
        evaluate(cfg, AmpduPlan.uniform(65, 1))
    with pytest.raises(InfeasiblePlan):
        evaluate(EvalConfig("AX", "MU_AX", 4, 11, window="W256"), AmpduPlan.uniform(256, 1))
    # without the TF slot reservation the full window is usable
    evaluate(EvalConfig("AX", "MU_AX", 4, 11, window="W256", reserve_tf_slot=False), AmpduPlan.uniform(256, 1))


def test_ul_mode_only_changes_back():
    plan = AmpduPlan.uniform(3, 7)
    cases = ((64, 9, "W64", 14.4), (64, 9, "W256", 28.8), (4, 11, "W64", 0.0), (4, 1, "W256", 0.0),
             (4, 0, "W64", 14.4))  # 16.3 Mbps OFDMA at MCS0: 262 bits need two symbols
    for n, mcs, window, extra in cases:
        a = evaluate(EvalConfig("AX", "MU_AX", n, mcs, window=window, ul_mode="MU_MIMO"), plan)
        b = evaluate(EvalConfig("AX", "MU_AX", n, mcs, window=window, ul_mode="OFDMA"), plan)
        assert b.timing.t_back_total_us - a.timing.t_back_total_us == pytest.approx(extra)
        assert b.cycle_us - a.cycle_us == pytest.approx(extra)
        assert b.goodput_bits_per_cycle == a.goodput_bits_per_cycle


def test_throughput_independent_of_unit_conventions():
    # throughput = multiplier * goodput / cycle, bits per microsecond = Mbit/s
    r = evaluate(EvalConfig("AX", "MU_AX", 16, 8, 1e-6, 512), AmpduPlan.near_equal(30, 100))
    assert r.throughput_mbps == pytest.approx(16 * r.goodput_bits_per_cycle / r.cycle_us)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 20), st.integers(0, 3), st.floats(0, 1e-4), st.floats(1e-7, 1e-4))
def test_strictly_decreasing_in_ber(x, extra, ber, delta):
    cfg = EvalConfig("AX", "MU_AX", 8, 9, ber, 1500, "W64")
    plan = AmpduPlan.near_equal(x, x + extra)
    a = evaluate(cfg, plan).throughput_mbps
    b = evaluate(cfg.with_(ber=ber + delta), plan).throughput_mbps
    assert b < a


def test_ber0_nondecreasing_in_y():
    path_cfg = EvalConfig("AX", "MU_AX", 4, 11, 0.0, 512, "W64")
    for x in (1, 5, 20):
        prev = 0.0
        for y in range(1, 22):
            try:
                thr = evaluate(path_cfg, AmpduPlan.uniform(x, y)).throughput_mbps
            except InfeasiblePlan:
                break
            assert thr >= prev
            prev = thr


def test_resolve_reuse():
    path = resolve(EvalConfig("AC", "SU", 1, 9))
    assert path.multiplier == 1 and path.max_mpdus == 64
