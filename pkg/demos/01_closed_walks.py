# Closed walks and the degree/codegree vertex score
#
# The number of closed 4-walks through a vertex can be written with degrees
# and codegrees alone.  Here we check that against brute-force enumeration,
# and compare it to the cheaper upper-bound score that greedy3 ranks by.
import numpy as np

from immunet import compute_scores, cw4_vertex, trace_power
from immunet.generators import gnp
from immunet.walkscore import cw_brute_all

g = gnp(9, 0.45, rng=3)
print(g)

exact = [cw4_vertex(g, v) for v in range(g.n)]
brute = cw_brute_all(g, 4).tolist()
upper = compute_scores(g).score.tolist()
print("vertex  cw4(formula)  cw4(enumerated)  score'")
for v in range(g.n):
    print(f"{v:6d}  {exact[v]:12d}  {brute[v]:15d}  {upper[v]:6d}")

# every closed walk is counted once in tr(A^4), which equals sum of lambda^4
ev = np.linalg.eigvalsh(g.dense(float))
print("tr(A^4) =", trace_power(g, 4), " sum lambda^4 =", round(float(np.sum(ev ** 4)), 6))
