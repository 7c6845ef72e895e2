"""Machine checks of the inequalities, bounds, tables and identities.

Every check returns a :class:`CheckReport`.  Inequalities are strict: a
point passes only if ``lhs + err_lhs < rhs - err_rhs``.  Reports of kind
"experiment" are informational and never affect the suite verdict.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import bernoulli as bern
from . import numerics as nm
from . import roots as rt
from . import zeta as zt
from .errors import DomainError
from .numerics import DEFAULT_CONTEXT, PI, TWO_PI, PrecisionContext

# reference root tables: k, x, y, r, theta
REFERENCE_TABLE_N2 = (
    (1, 2.088843016, 7.461489286, 7.748360311, 1.2978341024),
    (2, 2.664068142, 13.87905600, 14.13242564, 1.3811541551),
    (3, 3.026296956, 20.22383500, 20.44900915, 1.4222583654),
    (4, 3.291678332, 26.54323851, 26.74656346, 1.4474143156),
    (5, 3.501269010, 32.85054823, 33.03660703, 1.4646154233),
    (6, 3.674505305, 39.15107412, 39.32313052, 1.4772159363),
    (7, 3.822152869, 45.44738491, 45.60782441, 1.4868931567),
    (8, 3.950805215, 51.74088462, 51.89150222, 1.4945866979),
    (9, 4.064795694, 58.03240938, 58.17459155, 1.5008669923),
    (10, 4.167125550, 64.32248998, 64.45733203, 1.5061018433),
)
REFERENCE_TABLE_N3 = (
    (1, 3.838602048, 8.366815507, 9.205349934, 1.1406576364),
    (2, 4.857263960, 14.95891141, 15.72774757, 1.2568294158),
    (3, 5.520626554, 21.39846201, 22.09912880, 1.3183102795),
    (4, 6.016178416, 27.77895961, 28.42296607, 1.3575169538),
    (5, 6.412519686, 34.12944500, 34.72663855, 1.3850733959),
    (6, 6.743013428, 40.46233161, 41.02034263, 1.4056646865),
    (7, 7.026523305, 46.78391852, 47.30863623, 1.4217195916),
    (8, 7.274789053, 53.09777556, 53.59380865, 1.4346366398),
    (9, 7.495625078, 59.40609018, 59.87710703, 1.4452835555),
    (10, 7.694499832, 65.71028350, 66.15925246, 1.4542298245),
)
REFERENCE_TABLES = {2: REFERENCE_TABLE_N2, 3: REFERENCE_TABLE_N3}
TABLE_TOL = 1e-8

# committed grids
INEQUALITY_GRID = (
    -0.5, -1.5, -2.5, -3.5, -4.5, -5.0, -10.0,
    -1.0, -2.0, -3.0,
    -0.5 + 2j, -0.5 - 2j, -3 + 5j, -1.25 + 0.75j, -2 - 3j, -0.25 + 1j, -6.5 + 1j,
)
ROOT_BOUND_GRID = (-0.5, -1.5, -3.0, -5.0) + INEQUALITY_GRID
DOMINANCE_SIGMAS = (1.5, 2.0, 3.0, 5.0)
CONJUGATION_GRID = (2.5 + 3j, 1.1 + 0.5j, 0.5 + 2j, 0.25 - 1j, -0.5 + 2j, -0.75 + 0.2j,
                    -1.5 + 1j, -3 - 4j)
CROSS_POINTS = (2.0, 3.0, 2 + 1j)
SERIES_INTEGRAL_TOL = 1e-8
STRIP_LEFT_TOL = 1e-6


@dataclass
class CheckReport:
    check_id: str
    points_tested: int = 0
    failures: list = field(default_factory=list)
    kind: str = "assert"
    notes: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, inp, lhs, rhs) -> None:
        self.failures.append((_fmt(inp), _num(lhs), _num(rhs)))

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "kind": self.kind,
            "points_tested": self.points_tested,
            "passed": self.passed,
            "failures": [list(f) for f in self.failures],
            "notes": self.notes,
        }


def _fmt(v) -> str:
    if isinstance(v, complex):
        return f"{v.real:g}{v.imag:+g}i"
    return str(v)


def _num(v):
    if isinstance(v, Fraction):
        return bern.format_rational(v)
    if isinstance(v, complex):
        return [v.real, v.imag]
    return v


def strictly_less(a: float, err_a: float, b: float, err_b: float) -> bool:
    """a < b with both error bars kept apart; ties fail."""
    return a + err_a < b - err_b


def _zeta1(sigma: float, ctx) -> zt.EvalResult:
    return zt.evaluate(1, sigma, ctx)


# ---------------------------------------------------------------------------
# right half-plane


def check_dominates_riemann(sigmas: Sequence[float] = DOMINANCE_SIGMAS, orders: Sequence[int] = (2, 3),
                    ctx: PrecisionContext | None = None) -> CheckReport:
    """zeta_N(sigma) > zeta(sigma) for real sigma > 1 and N > 1."""
    if any(N <= 1 for N in orders):
        raise DomainError("the comparison with zeta needs N > 1")
    if any(s <= 1 for s in sigmas):
        raise DomainError("the comparison needs sigma > 1")
    rep = CheckReport("dominates-riemann", notes="zeta_N(sigma) > zeta(sigma)")
    for N in orders:
        for s in sigmas:
            a = _zeta1(s, ctx)
            b = zt.evaluate(N, s, ctx)
            rep.points_tested += 1
            if not strictly_less(a.value.real, a.abs_error_estimate, b.value.real, b.abs_error_estimate):
                rep.fail((N, s), b.value.real, a.value.real)
    return rep


def monotonicity_experiment(sigmas: Sequence[float] = DOMINANCE_SIGMAS, max_order: int = 4,
                            ctx: PrecisionContext | None = None) -> CheckReport:
    """Conjectured zeta_N(sigma) > zeta_{N-1}(sigma); reported, not asserted."""
    rep = CheckReport("monotonicity-in-N", kind="experiment",
                      notes="zeta_N(sigma) > zeta_{N-1}(sigma), an open conjecture")
    for s in sigmas:
        prev = zt.evaluate(1, s, ctx)
        for N in range(2, max_order + 1):
            cur = zt.evaluate(N, s, ctx)
            rep.points_tested += 1
            if not strictly_less(prev.value.real, prev.abs_error_estimate,
                                 cur.value.real, cur.abs_error_estimate):
                rep.fail((N, s), cur.value.real, prev.value.real)
            prev = cur
    return rep


# ---------------------------------------------------------------------------
# left half-plane inequalities for N = 2


def _lhs(s: complex, ctx) -> tuple[float, float]:
    r = zt.evaluate(2, s, ctx)
    return abs(r.value), r.abs_error_estimate


def _rhs_common(s: complex, theta1: float, exp_form: str = "abs") -> float:
    if exp_form == "abs":
        e = abs(s.imag) * (PI - theta1)
    elif exp_form == "signed":
        e = s.imag * (PI - theta1)
    else:  # signed, with theta_1 - pi
        e = s.imag * (theta1 - PI)
    return abs(nm.complex_gamma(-s)) * math.exp(e)


def _inequality(check_id: str, points: Iterable, rhs_fn: Callable, ctx, kind="assert", notes="") -> CheckReport:
    rep = CheckReport(check_id, kind=kind, notes=notes)
    for s in points:
        s = complex(s)
        if s.real >= 0:
            raise DomainError("left-half-plane inequalities need Re(s) < 0")
        lhs, lerr = _lhs(s, ctx)
        rhs, rerr = rhs_fn(s)
        rep.points_tested += 1
        if not strictly_less(lhs, lerr, rhs, rerr):
            rep.fail(s, lhs, rhs)
    return rep


def _default_roots(table: rt.RootTable | None) -> rt.RootTable:
    return table if table is not None else zt._cached_table(2, zt.DEFAULT_LEFT_ROOTS)


def rhs_riemann(s: complex, theta1: float, ctx=None, exp_form: str = "abs", power_shift: float = 0.0):
    z1 = _zeta1(1 - s.real, ctx)
    base = 2.0 * TWO_PI ** (s.real + power_shift) * _rhs_common(s, theta1, exp_form)
    return base * z1.value.real, base * z1.abs_error_estimate


def rhs_zeta2(s: complex, theta1: float, ctx=None):
    z2 = zt.evaluate(2, 1 - s.real, ctx)
    base = 2.0 * TWO_PI ** s.real * _rhs_common(s, theta1)
    return base * z2.value.real, base * z2.abs_error_estimate


def rhs_first_root(s: complex, r1: float, theta1: float, ctx=None, exp_form: str = "abs"):
    z1 = _zeta1(1 - s.real, ctx)
    base = 4.0 * r1 ** (s.real - 1) * _rhs_common(s, theta1, exp_form)
    return base * z1.value.real, base * z1.abs_error_estimate


def rhs_hurwitz(s: complex, theta1: float, ctx=None):
    h = nm.hurwitz_zeta(1 - s.real, 0.125, ctx)
    base = 2.0 * TWO_PI ** (s.real - 1) * _rhs_common(s, theta1)
    return base * h, base * (ctx or DEFAULT_CONTEXT).target_abs_tol


def check_growth_bounds(points: Sequence = INEQUALITY_GRID, roots: rt.RootTable | None = None,
                       ctx: PrecisionContext | None = None) -> list[CheckReport]:
    """|zeta_2(s)| against 2 (2 pi)^{Re s} |Gamma(-s)| e^{|Im s|(pi - theta_1)} zeta(1 - Re s).

    Also: the same with zeta_2(1 - Re s), the ordering of those two
    right-hand sides, the sharper constant (2 pi)^{Re s - 1} reached inside
    the argument, and (as an experiment) the exponent without absolute value.
    """
    th1 = _default_roots(roots).roots[0].theta
    reps = [
        _inequality("growth-riemann", points, lambda s: rhs_riemann(s, th1, ctx), ctx),
        _inequality("growth-riemann-sharp-constant", points, lambda s: rhs_riemann(s, th1, ctx, power_shift=-1.0), ctx,
                    notes="constant 2 (2 pi)^{Re s - 1}"),
        _inequality("growth-zeta2", points, lambda s: rhs_zeta2(s, th1, ctx), ctx),
        _inequality("growth-riemann-signed-exponent", points, lambda s: rhs_riemann(s, th1, ctx, "signed"), ctx,
                    kind="experiment", notes="exponent Im(s)(pi - theta_1) without absolute value"),
    ]
    order = CheckReport("growth-zeta2-dominates-riemann", notes="RHS with zeta_2 >= RHS with zeta")
    for s in points:
        s = complex(s)
        a, _ = rhs_riemann(s, th1, ctx)
        b, _ = rhs_zeta2(s, th1, ctx)
        order.points_tested += 1
        if not b >= a:
            order.fail(s, b, a)
    reps.append(order)
    return reps


def check_first_root_bounds(points: Sequence = ROOT_BOUND_GRID, roots: rt.RootTable | None = None,
                        ctx: PrecisionContext | None = None, max_k: int = 100) -> list[CheckReport]:
    """The r_1 bound 4 r_1^{Re s - 1} |Gamma(-s)| e^{|Im s|(pi - theta_1)} zeta(1 - Re s),
    the Hurwitz-zeta bound, and the modulus growth r_k >= m r_1 (k = 2m, 2m-1)."""
    table = _default_roots(roots)
    r1, th1 = table.roots[0].r, table.roots[0].theta
    pts = list(dict.fromkeys(complex(p) for p in points))
    reps = [
        _inequality("growth-first-root", pts, lambda s: rhs_first_root(s, r1, th1, ctx), ctx),
        _inequality("growth-hurwitz", pts, lambda s: rhs_hurwitz(s, th1, ctx), ctx,
                    notes="Hurwitz zeta summed from n = 1"),
        _inequality("growth-first-root-signed-exponent", pts, lambda s: rhs_first_root(s, r1, th1, ctx, "signed-flipped"), ctx,
                    kind="experiment", notes="exponent Im(s)(theta_1 - pi) without absolute value"),
    ]
    big = rt.root_table(2, max_k) if table.count < max_k else table
    growth = CheckReport("modulus-growth", notes="r_k >= m r_1 for k = 2m or 2m - 1")
    for z in big.roots[:max_k]:
        m = (z.index + 1) // 2
        growth.points_tested += 1
        if not z.r >= m * r1:
            growth.fail(z.index, z.r, m * r1)
    reps.append(growth)
    return reps


# ---------------------------------------------------------------------------
# Bernoulli bounds


def check_howard(n_max: int = 30, ctx: PrecisionContext | None = None) -> list[CheckReport]:
    r1 = zt._cached_table(2, zt.DEFAULT_LEFT_ROOTS).roots[0].r
    reps = []
    rep = CheckReport("bernoulli-r1-bound", notes="|B_{2,n}| < 2 n!/r_1^n, 3 <= n")
    for n in range(3, n_max + 1):
        b = abs(bern.bernoulli_number(2, n))
        bound = bern.howard_bounds(n, r1).bound_first_root
        rep.points_tested += 1
        if not float(b) < bound * (1 - 1e-12):
            rep.fail(n, b, bound)
    reps.append(rep)
    rep = CheckReport("howard-conjecture", notes="|B_{2,n}| < n!/7^n, 7 <= n")
    for n in range(7, n_max + 1):
        b = abs(bern.bernoulli_number(2, n))
        bound = bern.howard_bounds(n, r1).bound_seven
        rep.points_tested += 1
        if not float(b) < bound * (1 - 1e-12):
            rep.fail(n, b, bound)
    reps.append(rep)
    for N in (2, 3):
        rep = CheckReport(f"bernoulli-zeta2-bound-N{N}", notes="|B_{N,n}| < 2 n!/(N (2 pi)^n) pi^2/6, n > N")
        for n in range(N + 1, n_max + 1):
            b = abs(bern.bernoulli_number(N, n))
            bound = bern.howard_bounds(n, r1, N).bound_two_pi
            rep.points_tested += 1
            if not float(b) < bound * (1 - 1e-12):
                rep.fail(n, b, bound)
        reps.append(rep)
    return reps


def check_bernoulli_via_roots(ns=(6, 8, 10), max_roots: int = 200, rel_tol: float = 1e-8) -> CheckReport:
    rep = CheckReport("bernoulli-via-roots", notes=f"N=2, <= {max_roots} zeros, {rel_tol:g} relative")
    table = rt.root_table(2, max_roots)
    for n in ns:
        exact = float(bern.bernoulli_number(2, n))
        approx = bern.bernoulli_via_roots(2, n, table)
        rep.points_tested += 1
        if not abs(approx.value - exact) <= rel_tol * abs(exact):
            rep.fail(n, approx.value, exact)
    return rep


def check_bernoulli_via_roots_n3(ns=(8, 9, 10), max_roots: int = 10) -> CheckReport:
    rep = CheckReport("bernoulli-via-roots-N3", notes=f"N=3, {max_roots} zeros, within the tail bound")
    table = rt.root_table(3, max_roots)
    for n in ns:
        exact = float(bern.bernoulli_number(3, n))
        approx = bern.bernoulli_via_roots(3, n, table)
        rep.points_tested += 1
        if not abs(approx.value - exact) <= approx.tail_bound + 1e-14 * abs(exact):
            rep.fail(n, approx.value, exact)
    return rep


# ---------------------------------------------------------------------------
# cross-route agreement and pole structure


def cross_region_suite(orders: Sequence[int] = (1, 2, 3), ctx: PrecisionContext | None = None) -> list[CheckReport]:
    reps = []
    rep = CheckReport("series-vs-integral", notes=f"within {SERIES_INTEGRAL_TOL:g} and error estimates")
    for N in orders:
        for s in CROSS_POINTS:
            a = zt.zeta_right_series(N, s, ctx)
            b = zt.zeta_integral(N, s, ctx)
            d = abs(a.value - b.value)
            rep.points_tested += 1
            if not (d <= SERIES_INTEGRAL_TOL and d <= a.abs_error_estimate + b.abs_error_estimate):
                rep.fail((N, complex(s)), d, min(SERIES_INTEGRAL_TOL, a.abs_error_estimate + b.abs_error_estimate))
    reps.append(rep)

    rep = CheckReport("strip-vs-leftsum", notes=f"s = -1/2 within {STRIP_LEFT_TOL:g} and error estimates")
    for N in orders:
        a = zt.zeta_strip(N, -0.5, ctx)
        b = zt.zeta_left_series(N, -0.5, None, ctx)
        d = abs(a.value - b.value)
        rep.points_tested += 1
        if not (d <= STRIP_LEFT_TOL and d <= a.abs_error_estimate + b.abs_error_estimate):
            rep.fail((N, -0.5), d, a.abs_error_estimate + b.abs_error_estimate)
    reps.append(rep)

    rep = CheckReport("leftsum-vs-exact", notes="integers n < 2-N, within reported error and tail bound")
    for N in orders:
        for n in range(min(1 - N, -1), -4 - N, -1):
            exact = zt.zeta_negative_int(N, n)
            r = zt.zeta_left_series(N, n, None, ctx)
            d = abs(r.value - float(exact))
            rep.points_tested += 1
            if not (d <= r.abs_error_estimate + 1e-16 and d <= r.tail_bound):
                rep.fail((N, n), d, r.abs_error_estimate)
    reps.append(rep)

    rep = CheckReport("classical-anchors", notes="zeta(2), zeta(1/2), zeta(-1)")
    anchors = ((2.0, PI ** 2 / 6, 1e-9), (0.5, -1.4603545088095868, 1e-6))
    for s, ref, tol in anchors:
        v = zt.evaluate(1, s, ctx).value
        rep.points_tested += 1
        if not abs(v - ref) <= tol:
            rep.fail(s, v.real, ref)
    r = zt.evaluate(1, -1, ctx)
    rep.points_tested += 1
    if r.exact != Fraction(-1, 12):
        rep.fail(-1, r.exact, Fraction(-1, 12))
    reps.append(rep)
    reps.extend(pole_suite(ctx))
    reps.append(check_bernoulli_via_roots())
    reps.append(check_bernoulli_via_roots_n3())
    return reps


def pole_suite(ctx: PrecisionContext | None = None) -> list[CheckReport]:
    reps = []
    rep = CheckReport("residue-probes", notes="(s-n) zeta_N(s) at s = n + h, |error| <= 20 h max(1,|Res|)")
    for N in (2, 3):
        for n in zt.poles(N):
            res = float(zt.residue_at(N, n))
            errs = []
            for h in (1e-3, 1e-4):
                v = h * zt.evaluate(N, n + h, ctx).value
                errs.append(abs(v - res))
                rep.points_tested += 1
                if not errs[-1] <= 20 * h * max(1.0, abs(res)):
                    rep.fail((N, n, h), v.real, res)
            if not errs[1] < errs[0]:
                rep.fail((N, n, "rate"), errs[1], errs[0])
    reps.append(rep)

    rep = CheckReport("limit-at-one", notes="closed form and zeta(1+h) - N/h")
    for N in (1, 2, 3):
        closed = zt.limit_at_one(N)
        ref = (nm.EULER_GAMMA if N == 1 else math.lgamma(N + 1) - N * nm.digamma_int(N))
        rep.points_tested += 1
        if not abs(closed - ref) <= 1e-9:
            rep.fail(N, closed, ref)
        probe = zt.limit_probe(N, 1e-4, ctx)
        rep.points_tested += 1
        if not abs(probe - closed) <= 1e-3:
            rep.fail((N, 1e-4), probe, closed)
    reps.append(rep)

    rep = CheckReport("contour-derivative-at-one", notes="central difference h = 1e-3, within 1e-5")
    h = 1e-3
    for N in (1, 2, 3):
        d = (zt.contour_function(N, 1 + h, ctx) - zt.contour_function(N, 1 - h, ctx)) / (2 * h)
        ref = (-1) ** N * math.factorial(N - 1) * math.lgamma(N + 1)
        rep.points_tested += 1
        if not abs(d - ref) <= 1e-5:
            rep.fail(N, d.real, ref)
    reps.append(rep)
    return reps


# ---------------------------------------------------------------------------
# root tables


def check_reference_table(N: int, ctx: PrecisionContext | None = None) -> CheckReport:
    rep = CheckReport(f"table-N{N}", notes=f"every reference cell within {TABLE_TOL:g}")
    table = rt.root_table(N, 10, ctx)
    for row, z in zip(REFERENCE_TABLES[N], table.roots):
        k = row[0]
        for name, ref, val in zip(("x", "y", "r", "theta"), row[1:], (z.x, z.y, z.r, z.theta)):
            rep.points_tested += 1
            if not abs(val - ref) <= TABLE_TOL:
                rep.fail(f"k={k} {name}", val, ref)
    return rep


def check_brackets(N: int, K: int = 50, ctx: PrecisionContext | None = None) -> CheckReport:
    bracket = rt.bracket_n2 if N == 2 else rt.bracket_n3
    rep = CheckReport(f"brackets-N{N}", notes=f"Im z_k inside its interval, k <= {K}")
    for z in rt.root_table(N, K, ctx).roots:
        lo, hi = bracket(z.index)
        rep.points_tested += 1
        if not lo < z.y < hi:
            rep.fail(z.index, z.y, (lo, hi))
    return rep


def check_ordering(N: int, K: int = 50, ctx: PrecisionContext | None = None) -> CheckReport:
    rep = CheckReport(f"ordering-N{N}", notes="r_k and theta_k strictly increasing, theta_k < pi/2")
    zs = rt.root_table(N, K, ctx).roots
    for a, b in zip(zs, zs[1:]):
        rep.points_tested += 1
        if not a.r < b.r:
            rep.fail(b.index, b.r, a.r)
        if N in (2, 3) and not (a.theta < b.theta < PI / 2):
            rep.fail(b.index, b.theta, a.theta)
    return rep


def check_root_certificates(N: int, K: int = 50, ctx: PrecisionContext | None = None) -> CheckReport:
    ctx = ctx or DEFAULT_CONTEXT
    rep = CheckReport(f"root-certificates-N{N}",
                      notes="residual at z and conj z, derivative away from zero, polar form")
    for z in rt.root_table(N, K, ctx).roots:
        w = z.z
        scale = max(1.0, abs(nm.taylor_poly(w, N - 1)))
        res = max(abs(rt.residual(N, w)), abs(rt.residual(N, w.conjugate())))
        deriv = abs(cmath.exp(w) - nm.taylor_poly(w, N - 2)) if N >= 2 else 1.0
        rep.points_tested += 1
        if not res <= ctx.root_tol * scale:
            rep.fail(z.index, res, ctx.root_tol * scale)
        if not deriv > ctx.root_tol * scale:
            rep.fail(z.index, deriv, ctx.root_tol * scale)
        if abs(z.r - math.hypot(z.x, z.y)) > 1e-12 * z.r or abs(z.theta - math.atan2(z.y, z.x)) > 1e-12:
            rep.fail(z.index, (z.r, z.theta), "polar form")
    return rep


def sandwich_constants(N: int, R: float) -> tuple[float, float, float, float]:
    """A, B, A_1, B_1 for e^z = T_M(z), M = N - 1, radius R > M."""
    M = N - 1
    eps = M / R
    g = (1 - eps ** (M + 1)) / (1 - eps)
    fm = math.factorial(M)
    A = g / fm
    B = (2 - g) / fm
    A1 = math.sqrt(A ** (-2.0 / M) - 1.0 / R)
    B1 = B ** (-1.0 / M)
    return A, B, A1, B1


def check_root_sandwich(N: int, K: int = 50, ctx: PrecisionContext | None = None) -> CheckReport:
    """B r^M <= e^x <= A r^M for r > R, and A_1 e^{x/M} <= y <= B_1 e^{x/M}
    for x > M log R, with M = N - 1 and R = 4M."""
    M = N - 1
    R = 4.0 * M
    A, B, A1, B1 = sandwich_constants(N, R)
    rep = CheckReport(f"root-sandwich-N{N}", notes=f"R = {R:g}")
    for z in rt.root_table(N, K, ctx).roots:
        if z.r > R:
            rep.points_tested += 1
            ex = math.exp(z.x)
            if not B * z.r ** M <= ex <= A * z.r ** M:
                rep.fail(z.index, ex, (B * z.r ** M, A * z.r ** M))
        if z.x > M * math.log(R):
            rep.points_tested += 1
            g = math.exp(z.x / M)
            if not A1 * g <= z.y <= B1 * g:
                rep.fail(z.index, z.y, (A1 * g, B1 * g))
    return rep


def table_suite(ctx: PrecisionContext | None = None) -> list[CheckReport]:
    reps = [check_reference_table(2, ctx), check_reference_table(3, ctx)]
    for N in (2, 3):
        reps.append(check_brackets(N, 50, ctx))
    for N in (2, 3, 4):
        reps.append(check_ordering(N, 50, ctx))
        reps.append(check_root_certificates(N, 50, ctx))
        reps.append(check_root_sandwich(N, 50, ctx))
    return reps


# ---------------------------------------------------------------------------
# properties


def property_suite(ctx: PrecisionContext | None = None) -> list[CheckReport]:
    reps = []
    rep = CheckReport("conjugation", notes="zeta_N(conj s) = conj zeta_N(s)")
    for N in (1, 2, 3):
        for s in CONJUGATION_GRID:
            a = zt.evaluate(N, s, ctx)
            b = zt.evaluate(N, s.conjugate(), ctx)
            rep.points_tested += 1
            if abs(a.value - b.value.conjugate()) > a.abs_error_estimate + b.abs_error_estimate + 1e-15:
                rep.fail((N, s), a.value, b.value.conjugate())
    reps.append(rep)

    absolute = CheckReport("exp-remainder-telescoping",
                           notes="E_N(x) = E_{N+1}(x) + x^N/N! within 1e-12 absolute, |x| <= 10")
    scaled = CheckReport("exp-remainder-telescoping-scaled",
                         notes="same identity within 1e-12 max(1, |E_N(x)|)")
    conj = CheckReport("exp-remainder-conjugation", notes="E_N(conj x) = conj E_N(x)")
    for N in range(1, 7):
        for i in range(21):
            for x in (-10 + i, complex(-7 + 0.7 * i, 10 - i), complex(0.01 * i, -0.003 * i)):
                if abs(x) > 10:
                    continue
                lhs = nm.exp_remainder(x, N)
                rhs = nm.exp_remainder(x, N + 1) + x ** N / math.factorial(N)
                d = abs(lhs - rhs)
                absolute.points_tested += 1
                scaled.points_tested += 1
                conj.points_tested += 1
                if d > 1e-12:
                    absolute.fail((N, x), lhs, rhs)
                if d > 1e-12 * max(1.0, abs(lhs)):
                    scaled.fail((N, x), lhs, rhs)
                cj = nm.exp_remainder(complex(x).conjugate(), N)
                if abs(cj - complex(lhs).conjugate()) > 1e-12 * max(1.0, abs(lhs)):
                    conj.fail((N, x), cj, lhs)
    reps += [absolute, scaled, conj]

    rep = CheckReport("gamma-recurrence", notes="Gamma(z+1) = z Gamma(z), |z| <= 20")
    for i in range(-19, 20):
        for j in (-7.5, -1.3, 0.0, 0.4, 3.1, 12.0):
            z = complex(i + 0.37, j)
            if abs(z) > 20:
                continue
            a = nm.complex_gamma(z + 1)
            b = z * nm.complex_gamma(z)
            rep.points_tested += 1
            if abs(a - b) > 1e-11 * abs(a):
                rep.fail(z, a, b)
    reps.append(rep)

    rep = CheckReport("pochhammer-recurrence", notes="(s)_{k+1} = (s)_k (s+k)")
    for s in (0.5, -2.25, 1 + 2j, -3 + 0.5j, 7.0):
        for k in range(30):
            rep.points_tested += 1
            if nm.pochhammer(s, k + 1) != nm.pochhammer(s, k) * (s + k):
                rep.fail((s, k), nm.pochhammer(s, k + 1), nm.pochhammer(s, k) * (s + k))
    reps.append(rep)

    rep = CheckReport("bernoulli-recursion", notes="sum_m n! B_m/((N+n-m)! m!) = 0, exact")
    for N in range(1, 7):
        tab = bern.generalized_bernoulli(N, 40)
        for n in range(1, 41):
            tot = sum(Fraction(math.factorial(n), math.factorial(N + n - m) * math.factorial(m)) * tab[m]
                      for m in range(n + 1))
            rep.points_tested += 1
            if tot != 0:
                rep.fail((N, n), tot, 0)
    reps.append(rep)

    rep = CheckReport("bernoulli-classical", notes="order 1 equals the classical numbers through n = 20")
    classical = _classical_bernoulli(20)
    tab = bern.generalized_bernoulli(1, 20)
    for n in range(21):
        rep.points_tested += 1
        if tab[n] != classical[n]:
            rep.fail(n, tab[n], classical[n])
    reps.append(rep)

    reps.append(check_bernoulli_closed_forms())
    reps.append(check_bernoulli_closed_forms_corrected())

    rep = CheckReport("mu-at-one", notes="mu_N(n, 1) = n^{N-1} and mu_N(n,1)/n^N = 1/n, exact")
    for N in range(1, 5):
        for n in range(1, 31):
            mu = zt.mu_coefficient(N, n, 1)
            rep.points_tested += 1
            if mu != n ** (N - 1) or Fraction(mu, n ** N) != Fraction(1, n):
                rep.fail((N, n), mu, n ** (N - 1))
    reps.append(rep)
    return reps


def _classical_bernoulli(n_max: int) -> list[Fraction]:
    # Akiyama-Tanigawa, independent of the generalized recursion (gives B_1 = +1/2)
    out = []
    a = [Fraction(0)] * (n_max + 1)
    for m in range(n_max + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    out[1] = -out[1]
    return out


def bernoulli_closed_forms(N: int) -> tuple[Fraction, ...]:
    """The stated closed forms of B_{N,0..3}."""
    return (Fraction(1), Fraction(-1, N + 1), Fraction(2, (N + 1) ** 2 * (N + 2)),
            Fraction(6, (N + 1) ** 3 * (N + 2) * (N + 3)))


def bernoulli_closed_forms_corrected(N: int) -> tuple[Fraction, ...]:
    """B_{N,0..3} with the factor N - 1 in B_{N,3} that the residue at s = -2 requires."""
    return bernoulli_closed_forms(N)[:3] + (Fraction(6 * (N - 1), (N + 1) ** 3 * (N + 2) * (N + 3)),)


def check_bernoulli_closed_forms(max_order: int = 6) -> CheckReport:
    rep = CheckReport("bernoulli-closed-forms", notes="stated B_{N,0..3}, N <= 6")
    for N in range(1, max_order + 1):
        tab = bern.generalized_bernoulli(N, 3)
        for n, ref in enumerate(bernoulli_closed_forms(N)):
            rep.points_tested += 1
            if tab[n] != ref:
                rep.fail((N, n), tab[n], ref)
    return rep


def check_bernoulli_closed_forms_corrected(max_order: int = 6) -> CheckReport:
    rep = CheckReport("bernoulli-closed-forms-corrected", notes="B_{N,3} = 6(N-1)/((N+1)^3(N+2)(N+3))")
    for N in range(1, max_order + 1):
        tab = bern.generalized_bernoulli(N, 3)
        for n, ref in enumerate(bernoulli_closed_forms_corrected(N)):
            rep.points_tested += 1
            if tab[n] != ref:
                rep.fail((N, n), tab[n], ref)
    return rep


# ---------------------------------------------------------------------------
# suites


def inequality_suite(ctx: PrecisionContext | None = None) -> list[CheckReport]:
    reps = [check_dominates_riemann(ctx=ctx), monotonicity_experiment(ctx=ctx)]
    reps += check_growth_bounds(ctx=ctx)
    reps += check_first_root_bounds(ctx=ctx)
    return reps


SUITES = {
    "inequalities": inequality_suite,
    "cross": cross_region_suite,
    "tables": table_suite,
    "howard": check_howard,
    "properties": property_suite,
}


def run_suite(name: str = "all", ctx: PrecisionContext | None = None) -> list[CheckReport]:
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise DomainError(f"unknown suite {name!r}")
    reps: list[CheckReport] = []
    for n in names:
        fn = SUITES[n]
        reps += fn(ctx=ctx)
    return sorted(reps, key=lambda r: r.check_id)


def suite_passed(reports: Iterable[CheckReport]) -> bool:
    return all(r.passed for r in reports if r.kind == "assert")


def reports_json(reports: Iterable[CheckReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=1)


def reports_text(reports: Iterable[CheckReport]) -> str:
    lines = [f"{'check':40s} {'kind':10s} {'points':>6s}  result"]
    for r in reports:
        verdict = "PASS" if r.passed else ("FAIL" if r.kind == "assert" else "VIOLATED")
        lines.append(f"{r.check_id:40s} {r.kind:10s} {r.points_tested:6d}  {verdict}")
        for f in r.failures[:5]:
            lines.append(f"    at {f[0]}: lhs={f[1]} rhs={f[2]}")
        if len(r.failures) > 5:
            lines.append(f"    ... {len(r.failures) - 5} more")
    return "\n".join(lines)
