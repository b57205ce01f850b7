import pytest

from dlthroughput.errors import InvalidValue
from dlthroughput.frames import AmpduPlan, expected_goodput_bits, msdu_profile
from dlthroughput.montecarlo import PRNG, TrialSpec, simulate_goodput, simulate_goodput_per_bit


def test_prng_pinned():
    assert PRNG == "numpy.random.PCG64"


def test_error_free_exact():
    plan, prof = AmpduPlan((3, 2)), msdu_profile(512)
    mean, se = simulate_goodput(TrialSpec(plan, prof, 0.0, 100, seed=1))
    assert mean == expected_goodput_bits(plan, prof, 0.0) and se == 0.0


def test_single_mpdu():
    prof = msdu_profile(1500)
    mean, se = simulate_goodput(TrialSpec(AmpduPlan((1,)), prof, 1e-5, 10**6, seed=7))
    assert abs(mean - 12000 * 0.8832) < 3 * se + 12000 * 5e-5


def test_reproducible():
    spec = TrialSpec(AmpduPlan((2, 1)), msdu_profile(64), 1e-4, 5000, seed=42)
    assert simulate_goodput(spec) == simulate_goodput(spec)
    other = TrialSpec(AmpduPlan((2, 1)), msdu_profile(64), 1e-4, 5000, seed=43)
    assert simulate_goodput(other) != simulate_goodput(spec)


def test_per_bit_reference():
    # tiny C at a high BER: per-bit corruption and per-MPDU draws agree
    prof = msdu_profile(64)
    spec = TrialSpec(AmpduPlan((1, 1)), prof, 0.5, 20000, seed=3)
    mean, se = simulate_goodput_per_bit(spec, bits_override=[2, 3])
    expected = 8 * 64 * (0.5 ** 2 + 0.5 ** 3)
    assert abs(mean - expected) < 4 * se
    m2, s2 = simulate_goodput(spec)
    assert abs(m2 - expected) > 0  # true C is large here: almost nothing survives
    assert m2 < 1e-6


def test_zero_trials():
    with pytest.raises(InvalidValue):
        TrialSpec(AmpduPlan((1,)), msdu_profile(64), 0.1, 0)
