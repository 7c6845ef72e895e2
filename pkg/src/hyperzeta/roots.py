"""Nontrivial zeros of e^z - T_{N-1}(z) in the upper half-plane.

For N = 2 and N = 3 each zero is isolated in a known interval of its
imaginary part, and a real one-dimensional equation in y is solved by
bisection there.  For N >= 4 no such interval is known; zeros are found from
the continuous branch equation

    z - Log T_{N-1}(z) = 2 pi i t

(integer t gives a zero) and the table is ordered by modulus afterwards.
N = 1 has the closed-form zeros 2 pi i k.
"""

from __future__ import annotations

import cmath
import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BracketError, ConvergenceError, DomainError
from .numerics import DEFAULT_CONTEXT, PI, TWO_PI, PrecisionContext, taylor_poly


@dataclass(frozen=True)
class Root:
    """One zero z = x + iy = r e^{i theta}, y > 0, of e^z - T_{N-1}(z)."""

    order: int
    index: int
    x: float
    y: float
    r: float = field(default=math.nan)
    theta: float = field(default=math.nan)
    residual: float = 0.0
    bracket: tuple[float, float] | None = None

    def __post_init__(self):
        if math.isnan(self.r):
            object.__setattr__(self, "r", math.hypot(self.x, self.y))
        if math.isnan(self.theta):
            object.__setattr__(self, "theta", math.atan2(self.y, self.x))

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)


@dataclass(frozen=True)
class RootTable:
    """The first K zeros for one order, sorted by strictly increasing modulus.

    ``branch_offset`` records which branch of z - Log T(z) = 2 pi i t the
    k-th zero lies on (t = k + branch_offset); root sums use it to continue
    past the last tabulated zero.
    """

    order: int
    roots: tuple[Root, ...]
    certified: bool = True
    branch_offset: int = 0

    @property
    def count(self) -> int:
        return len(self.roots)

    def __len__(self):
        return len(self.roots)

    def __getitem__(self, i):
        return self.roots[i]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "x", "y", "r", "theta"])
        for z in self.roots:
            w.writerow([z.index] + [f"{v:.10g}" for v in (z.x, z.y, z.r, z.theta)])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({
            "order": self.order,
            "count": self.count,
            "certified": self.certified,
            "branch_offset": self.branch_offset,
            "roots": [
                {"k": z.index, "x": z.x, "y": z.y, "r": z.r, "theta": z.theta}
                for z in self.roots
            ],
        })

    @classmethod
    def from_csv(cls, text: str, order: int) -> "RootTable":
        rows = list(csv.DictReader(io.StringIO(text)))
        roots = tuple(
            Root(order, int(row["k"]), float(row["x"]), float(row["y"]),
                 float(row["r"]), float(row["theta"]))
            for row in rows
        )
        return cls(order, roots)

    @classmethod
    def from_json(cls, text: str) -> "RootTable":
        d = json.loads(text)
        N = int(d["order"])
        roots = tuple(Root(N, int(z["k"]), z["x"], z["y"], z["r"], z["theta"]) for z in d["roots"])
        return cls(N, roots, bool(d.get("certified", True)), int(d.get("branch_offset", 0)))


# ---------------------------------------------------------------------------
# residuals and the continuous branch


def residual(N: int, z: complex) -> complex:
    return cmath.exp(z) - taylor_poly(z, N - 1)


def _scale(N: int, z: complex) -> float:
    return max(1.0, abs(taylor_poly(z, N - 1)))


def _u_poly(N: int, z):
    # u(z) = T_{N-1}(z) (N-1)! / z^{N-1}, as a polynomial in 1/z
    w = 1.0 / z
    coef = [math.factorial(N - 1) // math.factorial(N - 1 - i) for i in range(N)]
    acc = coef[-1] * np.ones_like(w)
    for c in reversed(coef[:-1]):
        acc = acc * w + c
    return acc


def branch_log_T(N: int, z):
    """Log T_{N-1}(z) continued as (N-1) Log z - log (N-1)! + Log u(z)."""
    z = np.asarray(z, dtype=complex)
    if N == 1:
        return np.zeros_like(z)
    return (N - 1) * np.log(z) - math.lgamma(N) + np.log(_u_poly(N, z))


def branch_number(N: int, z: complex) -> int:
    """The integer t with z - Log T(z) = 2 pi i t at a zero z."""
    g = z - complex(branch_log_T(N, z))
    return int(round(g.imag / TWO_PI))


def branch_roots(N: int, t, iterations: int = 60):
    """Solve z - Log T_{N-1}(z) = 2 pi i t for real t (vectorized Newton).

    Integer t gives zeros of e^z - T_{N-1}(z); non-integer t traces the smooth
    curve through them that root sums are continued along.
    """
    t = np.asarray(t, dtype=float)
    if N == 1:
        return 2j * PI * t
    y0 = TWO_PI * t + (N - 1) * PI / 2
    x0 = (N - 1) * np.log(np.maximum(y0, 1.0)) - math.lgamma(N)
    z = x0 + 1j * y0
    for _ in range(iterations):
        u = _u_poly(N, z)
        g = z - branch_log_T(N, z) - 2j * PI * t
        step = g * u
        z = z - step
        if np.all(np.abs(step) <= 4e-16 * np.abs(z)):
            break
    # at huge t the residual is dominated by rounding in z - 2 pi i t
    if not np.all(np.abs(step) <= 1e-12 * np.abs(z)):
        raise ConvergenceError("branch Newton iteration did not converge")
    return z


def branch_velocity(N: int, z):
    """dz/dt along the branch curve: 2 pi i u(z)."""
    if N == 1:
        return 2j * PI * np.ones_like(np.asarray(z, dtype=complex))
    return 2j * PI * _u_poly(N, np.asarray(z, dtype=complex))


# ---------------------------------------------------------------------------
# N = 2


def bracket_n2(k: int) -> tuple[float, float]:
    """Interval containing Im z_k for e^z = 1 + z."""
    if k < 1:
        raise DomainError("k must be >= 1")
    return ((2 * k + 0.25) * PI, (2 * k + 0.5) * PI)


def bracket_fn_n2(y: float) -> float:
    """f(y) = -1 + y cot y - log(y / sin y); its zeros are the Im z_k."""
    s = math.sin(y)
    if s <= 0:
        raise DomainError(f"bracket_fn_n2 needs sin y > 0 (y={y})")
    return -1.0 + y * math.cos(y) / s - math.log(y / s)


def _bracket_fn_n2_prime(y: float) -> float:
    s = math.sin(y)
    return 2.0 * math.cos(y) / s - y / (s * s) - 1.0 / y


def _bisect(f, lo: float, hi: float, flo: float, fhi: float, ftol: float):
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise BracketError(f"no sign change on [{lo}, {hi}]: f = {flo:.3e}, {fhi:.3e}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        if fm == 0 or abs(fm) < ftol * 1e-4:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return 0.5 * (lo + hi)


def _polish(N: int, z: complex, ctx: PrecisionContext, steps: int = 6) -> complex:
    # Newton on e^z - T_{N-1}(z); derivative e^z - T_{N-2}(z)
    for _ in range(steps):
        h = residual(N, z)
        dh = cmath.exp(z) - (taylor_poly(z, N - 2) if N >= 2 else 0.0)
        dz = h / dh
        z = z - dz
        if abs(dz) <= 1e-16 * abs(z):
            break
    return z


def _finish(N: int, k: int, z: complex, ctx: PrecisionContext, bracket=None) -> Root:
    res = abs(residual(N, z))
    if res > ctx.root_tol * _scale(N, z):
        raise ConvergenceError(f"root {k} of order {N}: residual {res:.3e} too large")
    # simplicity: the derivative e^z - T_{N-2}(z) = z^{N-1}/(N-1)! at a zero
    deriv = abs(cmath.exp(z) - (taylor_poly(z, N - 2) if N >= 2 else 0.0))
    if deriv <= ctx.root_tol * _scale(N, z):
        raise ConvergenceError(f"root {k} of order {N} is not certified simple")
    return Root(N, k, z.real, z.imag, residual=res, bracket=bracket)


def solve_root_n2(k: int, ctx: PrecisionContext | None = None) -> Root:
    """The k-th zero of e^z - 1 - z from its bracket on the imaginary part."""
    ctx = ctx or DEFAULT_CONTEXT
    lo, hi = bracket_n2(k)
    y = _bisect(bracket_fn_n2, lo, hi, bracket_fn_n2(lo), bracket_fn_n2(hi), ctx.root_tol)
    for _ in range(3):
        step = bracket_fn_n2(y) / _bracket_fn_n2_prime(y)
        if lo < y - step < hi:
            y -= step
    x = math.log(y / math.sin(y))
    z = _polish(2, complex(x, y), ctx)
    if not lo < z.imag < hi:
        raise BracketError(f"N=2 root {k} left its bracket: y={z.imag}")
    return _finish(2, k, z, ctx, bracket=(lo, hi))


# ---------------------------------------------------------------------------
# N = 3


def bracket_n3(k: int) -> tuple[float, float]:
    if k < 1:
        raise DomainError("k must be >= 1")
    return ((2 * k + 0.5) * PI, (2 * k + 1.0) * PI)


def _n3_log_argument(y: float) -> tuple[float, float]:
    s, c = math.sin(y), math.cos(y)
    q = math.sqrt(1.0 - s * s / (y * y))
    if c < 0:
        # y^2 (c + q) / sin^2 y == (y^2 - 1) / (q - c); no 0 * inf at sin y = 0
        cq = s * s * (1.0 - 1.0 / (y * y)) / (q - c)
        arg = (y * y - 1.0) / (q - c)
    else:
        cq = c + q
        arg = y * y / (s * s) * cq if s != 0 else math.inf
    return cq, arg


def bracket_fn_n3(y: float) -> float:
    """F(y) = -sin y + y (cos y + q) - sin y log[y^2 (cos y + q) / sin^2 y],
    with q = sqrt(1 - sin^2 y / y^2).

    Vanishes at odd multiples of pi as well as at the imaginary parts of the
    zeros of e^z - 1 - z - z^2/2.
    """
    cq, arg = _n3_log_argument(y)
    if not arg > 0 or math.isinf(arg):
        raise DomainError(f"bracket_fn_n3: log argument not positive and finite at y={y}")
    s = math.sin(y)
    return -s + y * cq - s * math.log(arg)


N3_SHRINK = 1e-6 * PI


def solve_root_n3(k: int, ctx: PrecisionContext | None = None) -> Root:
    """The k-th zero of e^z - 1 - z - z^2/2 from its bracket on Im z."""
    ctx = ctx or DEFAULT_CONTEXT
    lo, hi = bracket_n3(k)
    a, b = lo + N3_SHRINK, hi - N3_SHRINK
    fa, fb = bracket_fn_n3(a), bracket_fn_n3(b)
    if not (fa > 0 > fb):
        raise BracketError(f"N=3 bracket {k}: no interior sign change ({fa:.3e}, {fb:.3e})")
    y = _bisect(bracket_fn_n3, a, b, fa, fb, ctx.root_tol)
    x = math.log(_n3_log_argument(y)[1])
    z = _polish(3, complex(x, y), ctx)
    if not lo < z.imag < hi:
        raise BracketError(f"N=3 root {k} left its bracket: y={z.imag}")
    return _finish(3, k, z, ctx, bracket=(lo, hi))


# ---------------------------------------------------------------------------
# general N


def asymptotic_seed(N: int, q: int) -> complex:
    """Large-|z| estimate of a zero of e^z - T_{N-1}(z).

    With M = N - 1:  x ~ M log(2 q pi + M pi/2 - log M!),  y ~ (M!)^{1/M} e^{x/M}.
    """
    if N < 2:
        raise DomainError("asymptotic_seed needs N >= 2")
    M = N - 1
    lf = math.lgamma(M + 1)
    arg = 2 * q * PI + M * PI / 2 - lf
    if q < 1 or arg <= M:
        raise DomainError(f"q={q} is outside the validity zone for N={N}")
    x = M * math.log(arg)
    y = math.exp(lf / M + x / M)
    return complex(x, y)


def refine_root(N: int, seed: complex, ctx: PrecisionContext | None = None, index: int | None = None) -> Root:
    """Damped Newton from ``seed`` to a zero of e^z - T_{N-1}(z).

    Zeros found in the lower half-plane are reflected to their conjugates.
    The index defaults to the branch number of the zero, which is only
    provisional: tables renumber by modulus.
    """
    ctx = ctx or DEFAULT_CONTEXT
    if N < 1:
        raise DomainError("N must be >= 1")
    z = complex(seed)
    h = residual(N, z)
    for _ in range(64):
        if abs(h) <= ctx.root_tol * _scale(N, z) * 0.01:
            break
        dh = cmath.exp(z) - (taylor_poly(z, N - 2) if N >= 2 else 0.0)
        if dh == 0:
            raise ConvergenceError("zero derivative during Newton iteration")
        dz = h / dh
        lam = 1.0
        for _ in range(40):
            cand = z - lam * dz
            try:
                hc = residual(N, cand)
            except OverflowError:
                hc = complex(math.inf)
            if abs(hc) < abs(h) or lam < 1e-9:
                break
            lam *= 0.5
        z, h = cand, hc
        if abs(lam * dz) <= 1e-16 * abs(z):
            break
    # near 0 the residual is ~|z|^N/N!, so tiny z passes the residual test
    if abs(z) < 0.5:
        raise ConvergenceError("Newton converged to the trivial zero z = 0")
    if z.imag < 0:
        z = z.conjugate()
    if abs(residual(N, z)) > ctx.root_tol * _scale(N, z):
        raise ConvergenceError(f"Newton failed from seed {seed}: residual {abs(residual(N, z)):.3e}")
    k = index if index is not None else max(branch_number(N, z), 0)
    return _finish(N, k, z, ctx)


def _generic_roots(N: int, K: int, ctx: PrecisionContext) -> tuple[list[Root], int]:
    found: list[complex] = []
    t_max = K + N + 2
    while True:
        ts = np.arange(0, t_max + 1)
        seeds = []
        for t in ts:
            try:
                seeds.append(complex(branch_roots(N, [t])[0]))
            except ConvergenceError:
                continue
        for t in range(1, t_max + 1):
            try:
                seeds.append(asymptotic_seed(N, t))
            except DomainError:
                pass
        for sd in seeds:
            try:
                z = refine_root(N, sd, ctx).z
            except ConvergenceError:
                continue
            if all(abs(z - w) > 1e-8 * abs(z) for w in found):
                found.append(z)
        found.sort(key=abs)
        if len(found) >= K + 2:
            break
        t_max *= 2
        if t_max > 8 * (K + N + 2):
            raise ConvergenceError(f"could only locate {len(found)} zeros for N={N}")
    chosen = found[:K]
    roots = [_finish(N, k, z, ctx) for k, z in enumerate(chosen, start=1)]
    offset = branch_number(N, chosen[-1]) - K
    return roots, offset


def root_table(N: int, K: int, ctx: PrecisionContext | None = None) -> RootTable:
    """The K smallest-modulus zeros in the upper half-plane, ordered by modulus.

    N = 2 and N = 3 use the certified one-dimensional reductions; N >= 4 is
    marked uncertified.  Raises ``ConvergenceError`` if the ordering
    invariants fail.
    """
    ctx = ctx or DEFAULT_CONTEXT
    if N < 1 or K < 1:
        raise DomainError("root_table needs N >= 1 and K >= 1")
    certified = True
    offset = 0
    if N == 1:
        roots = [Root(1, k, 0.0, TWO_PI * k, TWO_PI * k, PI / 2) for k in range(1, K + 1)]
    elif N == 2:
        roots = [solve_root_n2(k, ctx) for k in range(1, K + 1)]
    elif N == 3:
        roots = [solve_root_n3(k, ctx) for k in range(1, K + 1)]
    else:
        roots, offset = _generic_roots(N, K, ctx)
        certified = False
    table = RootTable(N, tuple(roots), certified, offset)
    check_table(table)
    return table


def check_table(table: RootTable) -> None:
    """Raise if the modulus (and, for N = 2, 3, angle) ordering fails."""
    rs = [z.r for z in table.roots]
    if any(b <= a for a, b in zip(rs, rs[1:])):
        raise ConvergenceError("root moduli are not strictly increasing")
    if table.order in (2, 3):
        th = [z.theta for z in table.roots]
        if any(b <= a for a, b in zip(th, th[1:])) or any(t >= PI / 2 for t in th):
            raise ConvergenceError("root angles are not strictly increasing below pi/2")
