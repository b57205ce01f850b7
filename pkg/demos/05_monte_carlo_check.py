"""
Monte-Carlo check of the expected goodput
=========================================

An MPDU is lost when any of its bits is corrupted.  First we flip bits one by
one on short MPDUs to confirm that this loss rate is (1 - BER)^C.  Then the
cheaper per-MPDU draw is compared with the analytical expectation at full size.
"""

from dlthroughput import AmpduPlan, TrialSpec, expected_goodput_bits, msdu_profile, simulate_goodput
from dlthroughput.montecarlo import simulate_goodput_per_bit

# Step 1: per-bit corruption on MPDUs shrunk to 200 bits, with a BER high
# enough that losses are common.
plan = AmpduPlan.uniform(4, 1)
prof = msdu_profile(64)
short = [200] * 4
for ber in (1e-3, 5e-3):
    spec = TrialSpec(plan, prof, ber, 50_000, seed=3)
    mean, se = simulate_goodput_per_bit(spec, bits_override=short)
    exp = 4 * prof.payload_bits * (1 - ber) ** 200
    print(f"per-bit, BER {ber:.0e}: simulated {mean:8.1f} +- {se:5.1f}  expected {exp:8.1f}")

# Step 2: full-size A-MPDUs with one Bernoulli draw per MPDU.
plan = AmpduPlan.near_equal(10, 25)
for msdu in (64, 512, 1500):
    prof = msdu_profile(msdu)
    for ber in (1e-6, 1e-5, 1e-4):
        mean, se = simulate_goodput(TrialSpec(plan, prof, ber, 100_000, seed=11))
        exp = expected_goodput_bits(plan, prof, ber)
        print(f"MSDU {msdu:>4} B  BER {ber:.0e}: simulated {mean:10.1f} +- {se:6.1f}  "
              f"analytical {exp:10.1f}  z={(mean - exp) / se:+.2f}")
