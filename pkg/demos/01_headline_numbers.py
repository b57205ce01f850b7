"""
Headline throughputs
====================

Optimal A-MPDU structure and throughput for the single-user and multi-user
cycles of both standards, error-free and at BER 1e-5.
"""

from dlthroughput import EvalConfig, optimize_exhaustive

cases = [
    ("SU 11ax", EvalConfig("AX", "SU", 1, 11, window="W256")),
    ("SU 11ac", EvalConfig("AC", "SU", 1, 9)),
    ("MU 11ac, 4 stations", EvalConfig("AC", "MU_AC4", 4, 9)),
    ("MU 11ax, 4 stations", EvalConfig("AX", "MU_AX", 4, 11, window="W256")),
    ("MU 11ax, 8 stations", EvalConfig("AX", "MU_AX", 8, 11, window="W256")),
]

for ber in (0.0, 1e-5):
    print(f"\nBER = {ber:g}")
    print(f"{'cycle':<22}{'Mbps':>9}{'cycle us':>10}  plan")
    for name, cfg in cases:
        r = optimize_exhaustive(cfg.with_(ber=ber))
        b = r.best
        print(f"{name:<22}{b.throughput_mbps:9.1f}{b.cycle_us:10.1f}  {b.plan.profile_string()}")

# With errors the long MPDUs become a liability: the optimum switches to many
# single-MSDU MPDUs, and in 11ax the BAck window (not the airtime) binds.
