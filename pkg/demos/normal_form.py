# Reducing a body with s > phi to its seven-point normal form.
#
# Every stage keeps the asymmetry and can only raise tau, so bounds
# proved for the normal form hold for all bodies.
#
# Run with: python demos/normal_form.py

import numpy as np

from planarmeans import canonical, extremal, geom
from planarmeans import functionals as fn
from planarmeans.sampling import HullMode, RandomPolygonSpec, random_polygon

# find a random polygon with large asymmetry
for seed in range(1000):
    K = fn.centered(random_polygon(RandomPolygonSpec(seed, 6, HullMode.GAUSSIAN)))
    if fn.asymmetry(K).s > 1.75:
        break
print(f"seed {seed}: {len(K)} vertices, s = {fn.asymmetry(K).s:.6f}, tau = {fn.tau(K):.6f}")

Kbar, trace = canonical.canonicalize(K)
print(f"\n{'stage':14s} {'vertices':>8s} {'s':>10s} {'tau':>10s}")
for step in trace.steps:
    print(f"{step.name:14s} {len(step.body):8d} {step.s:10.6f} {step.tau:10.6f}")

p = trace.points
print("\np  =", np.round(p["p"], 6), " d1 =", np.round(p["d1"], 6))
print("normal form reached:", canonical.has_normal_form(Kbar, p, trace.s_values[0]))
print("six crossings in the input:", len(geom.transversal_crossings(K)) == 6)

# The heptagon family is the same shape with two parameters.
H, P = extremal.heptagon(0.8, 0.7)
print(f"\nheptagon(0.8, 0.7): s = {P.s:.6f}, measured s = {fn.asymmetry(H).s:.6f}, tau = {fn.tau(H):.6f}")
