"""
Zeros of e^z - T_{N-1}(z)
=========================

Computes the first zeros in the upper half-plane for N = 2, 3, 4, compares
the certified N = 2, 3 values with the reference tables, and shows how the
zeros line up along the branch curve z - Log T_{N-1}(z) = 2 pi i t.

Run:  python3 demos/root_tables.py
"""

import math
import time

import numpy as np

from hyperzeta import roots as rt
from hyperzeta import verify as vf

# %% certified tables for N = 2 and N = 3
for N in (2, 3):
    t0 = time.perf_counter()
    table = rt.root_table(N, 10)
    dt = time.perf_counter() - t0
    print(f"\nN = {N}  ({dt * 1e3:.1f} ms)")
    print(f"{'k':>3} {'x':>14} {'y':>14} {'r':>14} {'theta':>14}  max |diff| vs reference")
    for row, z in zip(vf.REFERENCE_TABLES[N], table.roots):
        diff = max(abs(a - b) for a, b in zip(row[1:], (z.x, z.y, z.r, z.theta)))
        flag = "  <-- above 1e-8" if diff > 1e-8 else ""
        print(f"{z.index:3d} {z.x:14.10f} {z.y:14.10f} {z.r:14.10f} {z.theta:14.10f}  {diff:.1e}{flag}")

# %% brackets: Im z_k lies in a window of width pi/4 (N = 2) or pi/2 (N = 3)
print("\nposition of Im z_k inside its bracket, as a fraction of the width")
for N in (2, 3):
    br = rt.bracket_n2 if N == 2 else rt.bracket_n3
    frac = np.array([(z.y - br(z.index)[0]) / (br(z.index)[1] - br(z.index)[0])
                     for z in rt.root_table(N, 200).roots])
    print(f"N = {N}: min {frac.min():.4f}  max {frac.max():.4f}  last {frac[-1]:.6f}")

# %% N = 4 has no bracket; zeros come from asymptotic seeds and Newton
t4 = rt.root_table(4, 8)
print(f"\nN = 4 (certified={t4.certified}, branch offset {t4.branch_offset})")
for z in t4.roots:
    print(f"{z.index:3d}  z = {z.x:.10f} + {z.y:.10f} i   |residual| = {abs(rt.residual(4, z.z)):.1e}")

# %% the continuous branch through the zeros
ts = np.linspace(1, 5, 9)
curve = rt.branch_roots(2, ts)
print("\nbranch curve for N = 2 (integer t are zeros):")
for t, z in zip(ts, curve):
    mark = "  zero" if t == math.floor(t) else ""
    print(f"t = {t:4.2f}  z = {z.real:.6f} + {z.imag:.6f} i{mark}")
