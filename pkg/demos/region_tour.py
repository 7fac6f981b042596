# A walk through the (s, tau) region: the two boundary curves, the bodies
# that realize them, and a cloud of random polygons in between.
#
# Run with: python demos/region_tour.py [out_dir]

import sys
from pathlib import Path

import numpy as np

from planarmeans import bounds, extremal, region
from planarmeans import functionals as fn

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")

print(f"breakpoints: phi = {bounds.PHI:.10f}, s_hat = {bounds.S_HAT:.10f}, tau_hat = {bounds.TAU_HAT:.10f}")

s = np.linspace(1, 2, 11)
print("\n   s     2/(s+1)    c(s)   (s+1)c(s)/2")
for x in s:
    print(f"{x:5.2f}  {bounds.tau_lower(x):8.5f}  {bounds.c_of_s(x):8.5f}  {bounds.dw_envelope(x):8.5f}")

# Lower curve: S ∩ (-sS). Upper curve: heptagons, or deformed K_s while s/(s^2-1) >= 1.
print("\nrealized corners:")
for x in (1.3, bounds.PHI, 1.75, 1.9, 2.0):
    lo = extremal.extremal_for(x, bounds.tau_lower(x))
    hi = extremal.extremal_for(x, bounds.c_of_s(x))
    print(f"  s={x:.4f}: lower body tau={fn.tau(lo):.6f} ({len(lo)} vertices), "
          f"upper body tau={fn.tau(hi):.6f} ({len(hi)} vertices)")

# Random polygons never leave the region.
rows = region.sweep("tau", grid=50, samples=500, seed=42, dump_dir=out)
print(f"\n{len(rows)} rows, max violation {region.max_violation(rows, 'tau'):.1e}")
(out / "tau_region.csv").write_text(region.to_csv(rows))

rows = region.sweep("dw", grid=50, samples=100, seed=42, dump_dir=out)
top = max(rows, key=lambda r: r.value)
print(f"D/w peak {top.value:.10f} at s = {top.s:.10f} ({top.source})")
(out / "dw_region.csv").write_text(region.to_csv(rows))
print("wrote", out / "tau_region.csv", "and", out / "dw_region.csv")
