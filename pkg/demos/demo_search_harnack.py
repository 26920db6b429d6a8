"""Rediscover the Harnack M-curve at degree 6 by hill-climbing.

The search flips one sign at a time, maximizing the component count; the
classical pattern sigma(i, j) = (-1)^(i j) attains the Harnack bound 11.
Every visited instance passes the full restriction oracle.
"""

from patchwork import SignDistribution, analyze, build_complex, harnack_bound
from patchwork.builders import grid_triangulation_2d
from patchwork.search import SearchTask, run

t = grid_triangulation_2d(6)
print("Harnack bound at degree 6:", harnack_bound(6))

# the classical pattern, for reference
sigma = SignDistribution({v: (-1) ** (v[0] * v[1]) for v in t.vertex_set})
rep = analyze(build_complex(t, sigma))
print(f"sigma(i,j) = (-1)^(ij): {rep.num_components} components, "
      f"p = {rep.p_even}, n = {rep.n_odd}, p - n mod 8 = {(rep.p_even - rep.n_odd) % 8}")

result = run(SearchTask(triangulation=t, mode="hillclimb", seed=42, budget=8000))
print(f"hill-climb (budget 8000): best component count {result.best_score}")
print("component histogram over visited instances:")
for c, count in sorted(result.component_histogram.items()):
    print(f"  {c:2d} components: {count}")
print("anomalies:", result.anomalies or "none (as the theorems demand)")
