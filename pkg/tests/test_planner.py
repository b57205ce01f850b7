import pytest

from dlthroughput.config import FlavorKind
from dlthroughput.errors import DomainError, Unavailable
from dlthroughput.params import Standard
from dlthroughput.planner import (
    Flavor,
    best_overall,
    best_per_flavor,
    enumerate_flavors,
    evaluate_flavor,
    flavor_families,
)


def labels(s):
    return [f.label for f in flavor_families(s)]


def test_families():
    assert labels(1) == ["1*SU_AC(1)", "1*SU_AX(1)"]
    assert labels(4) == ["4*SU_AC(1)", "1*MU_AC(4)", "4*SU_AX(1)", "1*MU_AX(4)"]
    assert "2*MU_AX(4)" in labels(8) and "1*MU_AX(8)" in labels(8)
    assert labels(64) == ["64*SU_AC(1)", "16*MU_AC(4)", "64*SU_AX(1)", "16*MU_AX(4)", "8*MU_AX(8)",
                          "4*MU_AX(16)", "2*MU_AX(32)", "1*MU_AX(64)"]
    for s in (1, 4, 8, 16, 32, 64):
        assert all(f.m * f.n == s for f in enumerate_flavors(s))
    with pytest.raises(DomainError):
        flavor_families(12)


def test_variants_expanded():
    v = enumerate_flavors(64)
    assert len(v) == 1 + 1 + 2 + 5 * 4
    mu = [f for f in v if f.kind is FlavorKind.MU_AX and f.n == 8]
    assert {(f.window.value, f.ul_mode.value) for f in mu} == {
        ("W64", "MU_MIMO"), ("W64", "OFDMA"), ("W256", "MU_MIMO"), ("W256", "OFDMA")}


def test_best_mcs():
    assert best_per_flavor(Flavor(Standard.AX, FlavorKind.MU_AX, 4, 1), 0.0).mcs == 11
    assert best_per_flavor(Flavor(Standard.AX, FlavorKind.MU_AX, 64, 1), 0.0).mcs == 9
    ac = best_per_flavor(Flavor(Standard.AC, FlavorKind.MU_AC4, 4, 1), 0.0)
    assert ac.mcs == 9 and ac.throughput_mbps == pytest.approx(2808, rel=0.02)


def test_access_delay_scales_with_m():
    a = best_per_flavor(Flavor(Standard.AX, FlavorKind.MU_AX, 4, 1), 1e-5)
    b = best_per_flavor(Flavor(Standard.AX, FlavorKind.MU_AX, 4, 16), 1e-5)
    assert a.throughput_mbps == b.throughput_mbps
    assert b.access_delay_us == pytest.approx(16 * a.access_delay_us)


def test_overall():
    assert best_overall(1, 0.0).flavor.name == "SU_AX(1)"
    assert best_overall(16, 0.0).flavor.name == "MU_AX(4)"
    assert best_overall(16, 1e-5).flavor.name == "MU_AX(8)"


def test_unavailable_flavor():
    f = Flavor(Standard.AX, FlavorKind.MU_AX, 64, 1)
    with pytest.raises(Unavailable):
        best_per_flavor(f, 0.0, mcs_list=[10, 11])
    with pytest.raises(Unavailable):
        evaluate_flavor(f.variants()[0], 11, 0.0, 1500)


def test_matches():
    f = Flavor(Standard.AX, FlavorKind.MU_AX, 8, 2)
    assert f.matches("mu_ax") and f.matches("MU_AX(8)") and not f.matches("MU_AX(4)")
