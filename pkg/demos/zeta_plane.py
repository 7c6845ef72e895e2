"""
zeta_N(s) across the complex plane
==================================

Walks along the real axis through every evaluation route, checks that
neighbouring routes agree where their regions meet, prints the pole data,
and writes the sigma grid used for plotting zeta_1, zeta_2, zeta_3.

Run:  python3 demos/zeta_plane.py [--png out.png]
"""

import argparse
import io

import numpy as np

from hyperzeta import cli
from hyperzeta import zeta as zt

parser = argparse.ArgumentParser()
parser.add_argument("--png", help="also save a plot (needs matplotlib)")
args = parser.parse_args()

# %% one value per region
print(f"{'N':>2} {'s':>14} {'route':>24} {'value':>26} {'abs err':>9}")
for N in (1, 2, 3):
    for s in (3.0, 1.1, 0.5 + 2j, -0.5, -1.5 + 1j, -3.0):
        if N == 3 and s == -3.0:
            s = -4.0
        r = zt.evaluate(N, s)
        print(f"{N:2d} {str(s):>14} {r.method:>24} {r.value.real:13.9f}{r.value.imag:+13.9f}i {r.abs_error_estimate:9.1e}")

# %% route agreement on the seams
print("\nagreement where regions meet")
for N in (2, 3):
    for s in (1.3, 2 + 1j):
        a, b = zt.zeta_right_series(N, s), zt.zeta_integral(N, s)
        print(f"N={N} s={s}: series - integral = {abs(a.value - b.value):.1e}")
    for s in (-0.5, -0.8 + 0.5j):
        a, b = zt.zeta_strip(N, s), zt.zeta_left_series(N, s)
        print(f"N={N} s={s}: strip - root sum = {abs(a.value - b.value):.1e}")

# %% poles and the constant at s = 1
print("\npoles and residues")
for N in (1, 2, 3, 4):
    parts = ", ".join(f"{n}: {zt.residue_at(N, n)}" for n in zt.poles(N))
    print(f"N={N}: {parts};  lim [zeta_N(s) - N/(s-1)] = {zt.limit_at_one(N):.12f}")

# %% large imaginary parts go through a rotated integration ray
for s in (2 + 10j, 2 + 30j, 0.5 + 25j):
    r = zt.evaluate(2, s)
    print(f"zeta_2({s}) = {r.value:.12f}  ({r.method}, err {r.abs_error_estimate:.1e})")

# %% plot data, same as `hyperzeta plot-data`
buf = io.StringIO()
cli.main(["plot-data", "--orders", "1,2,3", "--sigma-min", "1.1", "--sigma-max", "5", "--step", "0.05"], buf)
data = np.loadtxt(io.StringIO(buf.getvalue()), delimiter=",", skiprows=1)
print(f"\nplot data: {data.shape[0]} rows; zeta_N(5) = {data[-1, 1:]}")
if args.png:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    for j, N in enumerate((1, 2, 3), start=1):
        plt.plot(data[:, 0], data[:, j], label=f"N = {N}")
    plt.ylim(0, 12)
    plt.xlabel("sigma")
    plt.legend()
    plt.savefig(args.png, dpi=120)
    print("wrote", args.png)
