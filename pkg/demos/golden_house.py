# The golden house and what makes it special.
#
# Run with: python demos/golden_house.py

import numpy as np

from planarmeans import bounds, extremal, geom
from planarmeans import functionals as fn

GH = extremal.golden_house()
print("vertices:\n", GH.vertices)

# Its Minkowski center is the origin and its asymmetry is the golden ratio.
a = fn.asymmetry(GH)
print(f"s = {a.s:.12f}   (phi = {bounds.PHI:.12f})")
print("center:", np.round(a.center, 12))
print("asymmetry points:", [np.round(p, 6).tolist() for p in a.asym_points])

# The minimum K ∩ -K fits inside the arithmetic mean (K - K)/2 with factor 1,
# the largest value tau can take.
print(f"tau = {fn.tau(GH):.12f}, alpha = {fn.alpha(GH):.12f}, gamma = {fn.gamma(GH):.12f}")

# Measured in the norm of its own minimum, the golden house is pseudo-complete
# and attains the largest possible diameter-width ratio (phi + 1)/2.
M = fn.minimum_body(GH)
rep = fn.pseudo_complete_check(GH, M)
print(f"r = {rep.r:.6f}, R = {rep.R:.6f}, D = {rep.D:.6f}, w = {rep.w:.6f}")
print(f"D/w = {rep.ratio:.12f}   bound (phi+1)/2 = {(bounds.PHI + 1) / 2:.12f}")
print("pseudo-complete:", rep.is_pseudo_complete, " sandwich holds:", rep.sandwich)

# K and -K cross in six points: the boundary structure every body with
# s > phi shares.
for c in geom.boundary_crossings(GH):
    print(f"  crossing {np.round(c.point, 6).tolist()} ({c.kind})")

# The containment -K/s ⊂ K is optimal: the touching normals balance out.
cert = fn.optimal_containment_check(geom.scale_translate(GH, -1 / a.s), GH)
print(f"optimal: {cert.optimal}, normal residual {cert.residual:.1e}")
