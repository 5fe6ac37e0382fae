# greedy3 running time against graph size
#
# The score pass is linear in the number of edges and each deletion only
# touches the second neighborhood of the removed vertex, so at fixed k the
# running time should grow roughly linearly with m.
import time

import numpy as np

from immunet import greedy3
from immunet.generators import chung_lu

ms, ts = [], []
for m in (10 ** 4, 3 * 10 ** 4, 10 ** 5, 3 * 10 ** 5, 10 ** 6):
    g = chung_lu(m // 4, m, exponent=2.5, rng=0)
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        greedy3(g, 10)
        best = min(best, time.perf_counter() - t0)
    ms.append(g.m)
    ts.append(best)
    print(f"n={g.n:7d} m={g.m:8d} max degree={int(g.degrees.max()):6d}  greedy3(k=10) {best*1e3:8.2f} ms")

print("log-log slope:", round(float(np.polyfit(np.log(ms), np.log(ts), 1)[0]), 3))
