"""Accelerated charts, near-horizon free fall, and the three temperatures.

The right wedge z > |t| carries the uniformly accelerated chart; a slow
radial launch outside a horizon traces exactly the same trajectory as a
static atom viewed from that chart, which is the geometric heart of the
equivalence between the two emission problems.
"""

import math

import numpy as np

from rindler_lab import spacetime as st

print("=== 1. the accelerated worldline and its chart ===")
params = st.DimensionlessParams(ell=1.0)
for tau in (-1.0, 0.0, 1.0, 2.0):
    e = st.rindler_trajectory(tau, params)
    nc = st.null_coords(e, params.ell)
    print(f"  tau = {tau:+.1f}:  (t, z) = ({e.t:+.5f}, {e.z:.5f})   "
          f"z^2 - t^2 = {e.z**2 - e.t**2:.12f}   (u, v) = ({nc.u:+.5f}, {nc.v:+.5f})")

print("\n  chart round trip:")
event = st.EventRindler(0.8, -0.3)
back = st.minkowski_to_rindler(st.rindler_to_minkowski(event, 1.0), 1.0)
print(f"  (tbar, zbar) = {tuple(event)} -> Minkowski -> back = "
      f"({complex(back.tbar).real:.15f}, {back.zbar:.15f})")

print("\n=== 2. wedges ===")
for t, z in [(0, 5), (5, 0), (0, -5), (-5, 0), (1, 1)]:
    print(f"  (t={t:+d}, z={z:+d}) lies in: {st.wedge_of(st.EventMinkowski(t, z)).value}")

print("\n=== 3. slow launch outside a horizon vs static atom in the chart ===")
v0, rg = 0.1, 1.0
infall = st.DimensionlessParams(v0=v0, rg=rg)
z0 = st.equivalent_static_position(v0, rg)
print(f"  equivalent static position z0 = 2 v0 rg = {z0}")
print(f"  effective acceleration 1/(2 rg) = {st.effective_acceleration(rg)}")
print(f"  {'s':>8s} {'t(s)':>12s} {'rbar(s)':>12s} {'chart tbar':>12s} {'chart zbar':>12s}")
for s in np.linspace(-0.18, 0.18, 7):
    pt = st.freefall_trajectory(float(s), infall)
    img = st.minkowski_to_rindler(st.EventMinkowski(float(s), z0), 2.0 * rg)
    print(f"  {s:8.3f} {pt.t:12.6f} {pt.rbar:12.6f} "
          f"{complex(img.tbar).real:12.6f} {img.zbar:12.6f}")
print("  -> identical columns: the infall is the static worldline in disguise")

print("\n=== 4. temperatures ===")
t = st.temperatures(alpha=2 * math.pi)
print(f"  alpha = 2 pi (natural):   T_unruh = {t.t_unruh}")
t = st.temperatures(mass=1.0)
print(f"  mass = 1   (natural):     T_bh = {t.t_bh:.10f} = 1/(8 pi)")
for rg_val in (0.5, 1.0, 10.0):
    t = st.temperatures(rg=rg_val)
    print(f"  rg = {rg_val:4.1f}:  T_hbar = {t.t_hbar:.10f}   T_bh = {t.t_bh:.10f}   "
          f"ratio - 1 = {t.t_hbar / t.t_bh - 1:.1e}")

msun = 1.98892e30
t = st.temperatures(mass=msun, units="si")
print(f"  one solar mass (SI): T_bh = {t.t_bh:.4e} K")
