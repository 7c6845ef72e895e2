"""
Generalized Bernoulli numbers and their bounds
==============================================

Exact B_{N,n}, the same numbers recovered from the zeros, and the three
upper bounds on |B_{2,n}| side by side.

Run:  python3 demos/bernoulli_bounds.py
"""

import math

from hyperzeta import bernoulli as bern
from hyperzeta import roots as rt

# %% exact values
for N in (1, 2, 3, 4):
    tab = bern.generalized_bernoulli(N, 8)
    print(f"B_{N},0..8:", " ".join(tab.as_strings()))

print("\nB_{N,3} against 6(N-1)/((N+1)^3 (N+2)(N+3)):")
for N in range(1, 7):
    b3 = bern.bernoulli_number(N, 3)
    print(f"  N={N}: {str(b3):>10}   formula {6 * (N - 1)}/{(N + 1) ** 3 * (N + 2) * (N + 3)}")

# %% from the zeros
print("\nB_{N,n} from sums over zeros (200 zeros)")
for N in (2, 3):
    table = rt.root_table(N, 200)
    for n in (N + 3, N + 6, N + 10):
        got = bern.bernoulli_via_roots(N, n, table)
        exact = float(bern.bernoulli_number(N, n))
        print(f"  N={N} n={n:2d}: {got.value: .15e}  exact {exact: .15e}  tail bound {got.tail_bound:.1e}")

# %% bounds for N = 2
r1 = rt.root_table(2, 1).roots[0].r
print(f"\n|B_2,n| and its bounds (r_1 = {r1:.10f})")
print(f"{'n':>3} {'|B|':>12} {'2n!/r1^n':>12} {'n!/7^n':>12} {'zeta(2) form':>12}")
for n in range(3, 21):
    b = abs(float(bern.bernoulli_number(2, n)))
    h = bern.howard_bounds(n, r1)
    print(f"{n:3d} {b:12.4e} {h.bound_first_root:12.4e} {h.bound_seven:12.4e} {h.bound_two_pi:12.4e}")
print("2 n!/r1^n is the sharper of the two from n =", next(n for n in range(1, 40) if 2 / r1 ** n < 1 / 7 ** n))
