# Eigendrop versus budget on Zachary's karate club
#
# Each method picks k vertices to delete; we report how much the largest
# adjacency eigenvalue falls (as a percentage).  "brute" is the exhaustive
# optimum and is only feasible for tiny k.
from immunet import eigendrop, lambda1, select
from immunet.datasets import karate

g = karate()
print(g, "lambda1 =", round(lambda1(g).lambda1, 6))

methods = ["greedy3", "greedy2", "greedy1", "netshield", "maxdeg", "updmaxdeg", "brute"]
print("k  " + "  ".join(f"{m:>9s}" for m in methods))
for k in range(1, 6):
    cells = []
    for m in methods:
        if m == "brute" and k > 3:
            cells.append(f"{'-':>9s}")
            continue
        sel = select(m, g, k)
        cells.append(f"{eigendrop(g, sel.picks).drop_pct:9.2f}")
    print(f"{k}  " + "  ".join(cells))

sel = select("greedy3", g, 5)
print("greedy3 picks (labels):", sel.labels(g), "scores:", [s for _, s in sel.per_step])
