"""
Throughput against access delay
===============================

For each station count, the best plan of every scheduling flavor m*MODE(n):
m sequential cycles, each to a disjoint group of n stations.  Access delay is
m cycles, so serving more stations at once trades a little throughput for a
much shorter wait between visits.
"""

from dlthroughput.planner import ranking

for ber in (0.0, 1e-5):
    for s in (16, 64):
        print(f"\nS = {s}, BER = {ber:g}")
        for rep in ranking(s, ber):
            cfg = rep.result.config
            print(f"  {rep.flavor.label:<14} MCS{rep.mcs:<3} {cfg.window.value:<5} {cfg.ul_mode.value:<8}"
                  f"{rep.throughput_mbps:8.1f} Mbps  delay {rep.access_delay_us / 1000:7.2f} ms")
