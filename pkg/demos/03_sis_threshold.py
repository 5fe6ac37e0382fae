# SIS epidemics below and above the 1/lambda1 threshold
#
# With beta/delta under 1/lambda1 an outbreak dies out; above it, the
# infection persists.  Immunizing the greedy3 picks raises the threshold and
# lowers the number of infected vertices.
import numpy as np

from immunet import SisConfig, epidemic_threshold, greedy3, save_ratio, sis_simulate
from immunet.datasets import karate
from immunet.graph import remove_vertices

g = karate()
tau = epidemic_threshold(g)
delta = 0.2
print(f"threshold 1/lambda1 = {tau:.4f}")

for c in (0.25, 0.5, 1.0, 2.0, 4.0):
    cfg = SisConfig(beta=c * tau * delta, delta=delta, steps=200, trials=30, seed=1)
    res = sis_simulate(g, cfg)
    print(f"beta/delta = {c:4.2f} x threshold: mean final infected {res.final_mean:6.2f}, "
          f"median {np.median(res.final_counts):5.1f}")

picks = greedy3(g, 3).picks
print("threshold after immunizing", [g.labels[v] for v in picks], "=",
      round(epidemic_threshold(remove_vertices(g, picks)), 4))
cfg = SisConfig(beta=4 * tau * delta, delta=delta, steps=200, trials=30, seed=1)
print("save ratio of greedy3 (k=3):", round(save_ratio(g, cfg, picks), 3))
print(sis_simulate(g, cfg, picks).to_csv().splitlines()[:6])
