"""
Throughput against the number of MPDUs
======================================

Best plan for every MPDU count X at 64 stations, MCS9.  Without errors a few
maximal MPDUs win; at BER 1e-5 the curve peaks near X = 21, 57 and 44 for the
three MSDU sizes.  A coarse text plot stands in for a figure.
"""

import numpy as np

from dlthroughput import EvalConfig
from dlthroughput.airtime import resolve
from dlthroughput.optimizer import per_x_best

for ber in (0.0, 1e-5):
    for msdu in (1500, 512, 64):
        table = per_x_best(resolve(EvalConfig("AX", "MU_AX", 64, 9, ber, msdu, "W256")))
        thr = table.throughput_mbps
        x_best = int(np.argmax(thr)) + 1
        print(f"\nBER={ber:g} MSDU={msdu} B: peak {thr.max():.1f} Mbps at X={x_best}")
        for x in (1, 2, 3, 5, 10, 20, 30, 50, 80, 120, 200, 255):
            bar = "#" * int(40 * thr[x - 1] / thr.max()) if table.feasible(x) else "(does not fit)"
            print(f"  X={x:>3} {bar}")
