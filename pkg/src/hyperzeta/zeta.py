"""Evaluation of the hypergeometric zeta function

    zeta_N(s) = 1/Gamma(s+N-1) * int_0^inf x^{s+N-2} / (e^x - T_{N-1}(x)) dx

on the whole complex plane.  Routes:

* right-series: the generalized Dirichlet series sum_n mu_N(n,s)/n^{s+N-1}
  for Re(s) > 1, with the remainder after M terms written as an integral;
* right-integral / strip: the integral with the small-x singular terms of
  1/(e^x - T_{N-1}(x)) subtracted on (0, 1) and integrated in closed form,
  which continues it to Re(s) > -1;
* left-rootsum: the sum over the zeros z_k of e^z - T_{N-1}(z) for
  Re(s) < 0, with an Euler-Maclaurin tail along the branch curve;
* exact-negative-integer: rationals from the generalized Bernoulli numbers.
"""

from __future__ import annotations

import cmath
import functools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .bernoulli import bernoulli_number, series_coefficients
from .errors import ConvergenceError, DomainError, InsufficientRootsError, PoleError
from .numerics import (
    DEFAULT_CONTEXT,
    PI,
    TWO_PI,
    PrecisionContext,
    adaptive_gk,
    complex_gamma,
    digamma_int,
    exp_remainder,
    integrate_semi_infinite,
    taylor_poly,
)
from .roots import RootTable, branch_roots, branch_velocity, root_table

METHODS = ("right-series", "right-integral", "strip", "left-rootsum", "exact-negative-integer")
POLE_RADIUS = 1e-6
SERIES_SWITCH = 1.2
SERIES_IM_MAX = 8.0
MAX_DEGREE = 10_000
DEFAULT_LEFT_ROOTS = 40
MAX_LEFT_ROOTS = 1280
EPS = 2.220446049250313e-16
# worst relative error of complex_gamma seen against mpmath on |z| <= 50
GAMMA_REL_ERR = 6e-14


@dataclass(frozen=True)
class EvalResult:
    order: int
    s: complex
    value: complex
    abs_error_estimate: float
    method: str
    region: str
    exact: Fraction | None = None
    terms: int = 0
    tail_bound: float | None = None

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "s": {"re": self.s.real, "im": self.s.imag},
            "value": {"re": self.value.real, "im": self.value.imag},
            "abs_err": self.abs_error_estimate,
            "method": self.method,
            "region": self.region,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def poles(N: int) -> range:
    """Integer poles 2-N, ..., 1 of zeta_N."""
    return range(2 - N, 2)


def region_of(s: complex) -> str:
    sig = s.real
    if sig > 1:
        return "right"
    if sig > -1:
        return "strip"
    return "left"


def _as_complex(s) -> complex:
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError(f"s must be finite, got {s}")
    return s


def _check_order(N: int) -> None:
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise DomainError(f"order N must be a positive integer, got {N!r}")


def _integer_value(s: complex) -> int | None:
    if s.imag == 0 and s.real == math.floor(s.real):
        return int(s.real)
    return None


def _check_pole(N: int, s: complex) -> None:
    for n in poles(N):
        if abs(s - n) < POLE_RADIUS:
            raise PoleError(f"s = {s} is within {POLE_RADIUS:g} of the pole {n} of zeta_{N}")


# ---------------------------------------------------------------------------
# coefficients of the Dirichlet series


@dataclass(frozen=True)
class MuCoefficient:
    """Exact coefficients a_k of T_{N-1}(x)^{n-1}."""

    N: int
    n: int
    poly_coeffs: tuple[Fraction, ...]


@functools.lru_cache(maxsize=256)
def poly_power_coeffs(N: int, n: int) -> MuCoefficient:
    _check_order(N)
    if n < 1:
        raise DomainError("n must be >= 1")
    if (N - 1) * (n - 1) > MAX_DEGREE:
        raise DomainError(f"degree (N-1)(n-1) exceeds {MAX_DEGREE}")
    t = [Fraction(1, math.factorial(k)) for k in range(N)]
    p = [Fraction(1)]
    for _ in range(n - 1):
        q = [Fraction(0)] * (len(p) + N - 1)
        for i, a in enumerate(p):
            for j, b in enumerate(t):
                q[i + j] += a * b
        p = q
    return MuCoefficient(N, n, tuple(p))


def mu_coefficient(N: int, n: int, s):
    """mu_N(n, s) = sum_k a_k (s+N-1)_k / n^k.

    Exact (a Fraction) when ``s`` is an int or Fraction, complex otherwise.
    """
    coeffs = poly_power_coeffs(N, n).poly_coeffs
    if isinstance(s, (int, Fraction)) and not isinstance(s, bool):
        a = Fraction(s) + N - 1
        total, poch = Fraction(0), Fraction(1)
        for k, c in enumerate(coeffs):
            total += c * poch
            poch = poch * (a + k) / n
        return total
    a = complex(s) + N - 1
    total, poch = 0j, 1 + 0j
    for k, c in enumerate(coeffs):
        total += float(c) * poch
        poch = poch * (a + k) / n
    return total


def _rho(N: int, n: int) -> float:
    # scale so that the coefficients of T(rho x/n)^{n-1} peak near the top degree
    return max(1.0, (N - 1) * (n - 1) / math.e)


def _scaled_taylor(N: int, n: int) -> np.ndarray:
    # coefficients of T_{N-1}(rho x/n)^{n-1} by binary powering
    r = _rho(N, n) / n
    base = np.array([r ** k / math.factorial(k) for k in range(N)])
    out = np.ones(1)
    e = n - 1
    while e:
        if e & 1:
            out = np.convolve(out, base)
        e >>= 1
        if e:
            base = np.convolve(base, base)
    return out


def _max_terms(N: int, ctx: PrecisionContext) -> int:
    # rho must stay below ~700 for e^rho to be representable
    return max(16, min(ctx.max_series_terms, int(1900 // max(N - 1, 1))))


def _series_term(N: int, n: int, a: complex) -> complex:
    # mu_N(n,s)/n^a in log space; (a)_k overflows long before the sum does
    if n == 1:
        return 1.0
    p = _scaled_taylor(N, n)
    k = np.arange(len(p))
    with np.errstate(divide="ignore"):
        logp = np.log(p) - k * math.log(_rho(N, n))
    logpoch = np.concatenate(([0j], np.cumsum(np.log(a + k[:-1]))))
    terms = np.exp(logp + logpoch - a * math.log(n))
    return complex(np.sum(terms[p > 1e-290]))


def _series_tail_integral(N: int, s: complex, M: int, ctx: PrecisionContext):
    # sum_{n>M} e^{-nx} T^{n-1} = (T e^{-x})^M / (e^x - T)
    a = s + N - 1
    lf = math.lgamma(N + 1)

    def f(x):
        x = np.asarray(x, dtype=float)
        E = exp_remainder(x, N)
        small = x <= 1.0
        logq = np.empty_like(x)
        logq[small] = np.log1p(-np.exp(-x[small]) * E[small])
        logq[~small] = np.log(taylor_poly(x[~small], N - 1)) - x[~small]
        return np.exp((a - 1) * np.log(x) + M * logq) / E

    w0 = math.exp((lf - math.log(M)) / N)
    splits = []
    x = w0
    while x < 80.0 and M * (x ** N) / math.exp(lf) < 800.0:
        splits.append(x)
        x *= 3.0
    splits.append(x)
    # |Gamma(a)| is tiny for large Im s; the caller judges the error it gets back
    return integrate_semi_infinite(f, splits, ctx, endpoint_exponent=s.real - 2.0,
                                   abs_tol=0.1 * ctx.target_abs_tol * abs(complex_gamma(a)),
                                   raise_on_failure=False)


def zeta_right_series(N: int, s, ctx: PrecisionContext | None = None) -> EvalResult:
    """zeta_N(s) from its generalized Dirichlet series, Re(s) > 1.

    Terms decay like n^{-(Re s + N - 1)/N}.  Summation stops once a fitted
    power-law tail is below tolerance for three consecutive terms; otherwise
    the remainder after ``ctx.max_series_terms`` terms is integrated exactly.
    Below Re(s) = 1.2 this hands over to :func:`zeta_integral`.
    """
    ctx = ctx or DEFAULT_CONTEXT
    _check_order(N)
    s = _as_complex(s)
    if s.real <= 1:
        raise DomainError("the Dirichlet series needs Re(s) > 1")
    if s.real < SERIES_SWITCH:
        return zeta_integral(N, s, ctx)
    a = s + N - 1
    lam = (s.real + N - 1) / N
    tol = ctx.target_abs_tol
    terms = []
    quiet = 0
    tail_est = math.inf
    for n in range(1, _max_terms(N, ctx) + 1):
        t = _series_term(N, n, a)
        terms.append(t)
        tail_est = abs(t) * n / (lam - 1.0)
        quiet = quiet + 1 if tail_est < 0.5 * tol else 0
        if quiet >= 3:
            break
    head = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    rounding = 4e-16 * len(terms) * max(abs(t) for t in terms)
    if quiet >= 3:
        return EvalResult(N, s, head, 2.0 * tail_est + rounding, "right-series", "right",
                          terms=len(terms))
    tail, err = _series_tail_integral(N, s, len(terms), ctx)
    g = complex_gamma(a)
    if not err / abs(g) <= 1e3 * tol:
        raise ConvergenceError(f"series remainder integral error {err / abs(g):.3e} at s = {s}")
    return EvalResult(N, s, head + tail / g, err / abs(g) + rounding, "right-series", "right",
                      terms=len(terms))


# ---------------------------------------------------------------------------
# integral representation with small-x subtraction


SERIES_TERMS = 48


def _continued(N: int, s: complex, J: int, ctx: PrecisionContext,
               phi: float = 0.0) -> tuple[complex, float]:
    """Gamma(s+N-1) zeta_N(s) for Re(s) > 1 - J.

    On (0, 1) the first J terms N! b_m x^{m-N} of 1/(e^x - T) are removed and
    integrated exactly, giving N! b_m / (s+m-1); the remainder is evaluated
    from the same convergent series (radius >= 2 pi) to avoid cancellation.

    With ``phi`` != 0 the path is the ray x = t e^{i phi}, which must stay
    below the first zero of e^x - T; the subtracted pieces then integrate
    to N! b_m w^{s+m-1} / (s+m-1) with w = e^{i phi}.
    """
    if s.real <= 1 - J:
        raise DomainError(f"subtraction depth {J} does not reach Re(s) = {s.real}")
    b = series_coefficients(N, J + SERIES_TERMS)
    nf = math.factorial(N)
    a = s + N - 1
    w = cmath.exp(1j * phi)
    poles_part = sum(nf * b[m] * cmath.exp(1j * phi * (s + m - 1)) / (s + m - 1) for m in range(J))
    rest = np.array(b[J:][::-1])

    def f_small(t):
        t = np.asarray(t, dtype=float)
        x = t * w if phi else t
        return nf * np.polyval(rest, x) * np.exp((a - 1 - N + J) * (np.log(t) + 1j * phi)) * w

    def f_large(t):
        t = np.asarray(t, dtype=float)
        x = t * w if phi else t
        return np.exp((a - 1) * (np.log(t) + 1j * phi)) / exp_remainder(x, N) * w

    tol = 0.1 * ctx.target_abs_tol * min(1.0, abs(complex_gamma(a)))
    lo_val, lo_e, ok = _finite_panel(f_small, s.real + J - 2.0, tol, ctx)
    # decay along the ray is e^{-t cos(phi)}
    c = math.cos(phi)
    hi, hi_err = integrate_semi_infinite(f_large, (5.0 / c, 20.0 / c, 80.0 / c), ctx, lower=1.0,
                                         abs_tol=tol, raise_on_failure=not phi)
    trunc = nf * abs(b[-1]) * 2.0
    if not ok and not phi:
        raise ConvergenceError(f"quadrature on (0, 1) did not converge at s = {s}")
    return poles_part + lo_val + hi, lo_e + hi_err + trunc


RAY_SWITCH = 4.0
RAY_MARGIN = 0.15


@functools.lru_cache(maxsize=32)
def _first_angle(N: int) -> float:
    if N == 1:
        return PI / 2
    return min(z.theta for z in _cached_table(N, DEFAULT_LEFT_ROOTS).roots[:20])


def _ray_angle(N: int, s: complex) -> float:
    # the cancellation on the real axis costs about pi |Im s| / 2 nats; a ray at
    # angle phi cuts that to (pi/2 - phi)|Im s|
    if abs(s.imag) < RAY_SWITCH:
        return 0.0
    return math.copysign(_first_angle(N) - RAY_MARGIN, s.imag)


def _finite_panel(f, alpha: float, abs_tol: float, ctx: PrecisionContext):
    # int_0^1 f with f ~ x^alpha at 0, through x = w^p
    p = min(max(1.0, 2.0 / (alpha + 1.0)), 40.0)
    if p > 1.0:
        def g(w):
            w = np.asarray(w, dtype=float)
            return f(w ** p) * (p * w ** (p - 1.0))
    else:
        g = f
    v, e, ok = adaptive_gk(g, 0.0, 1.0, abs_tol, 0.25 * ctx.quad_rel_tol, ctx.quad_max_refinements)
    return complex(v), float(e), ok


def _depth(sigma: float) -> int:
    return max(1, math.ceil(2.0 - sigma))


def _continued_result(N, s, ctx, method, region) -> EvalResult:
    a = s + N - 1
    g = complex_gamma(a)
    val, err = _continued(N, s, _depth(s.real), ctx, _ray_angle(N, s))
    v = val / g
    return EvalResult(N, s, v, err / abs(g) + GAMMA_REL_ERR * abs(v), method, region)


def zeta_integral(N: int, s, ctx: PrecisionContext | None = None) -> EvalResult:
    """zeta_N(s) from the defining integral, Re(s) > 1."""
    ctx = ctx or DEFAULT_CONTEXT
    _check_order(N)
    s = _as_complex(s)
    if s.real <= 1:
        raise DomainError("the defining integral needs Re(s) > 1")
    return _continued_result(N, s, ctx, "right-integral", "right")


def zeta_strip(N: int, s, ctx: PrecisionContext | None = None) -> EvalResult:
    """zeta_N(s) for -1 < Re(s) <= 1 by the subtracted integral.

    One subtracted term reaches Re(s) > 0, two reach Re(s) > -1.
    """
    ctx = ctx or DEFAULT_CONTEXT
    _check_order(N)
    s = _as_complex(s)
    if not -1.0 < s.real <= 1.0:
        raise DomainError("zeta_strip needs -1 < Re(s) <= 1")
    _check_pole(N, s)
    n = _integer_value(s)
    if n is not None:
        # only s = 0 with N = 1 gets here; Gamma(s) has a pole there
        return zeta_exact(N, n)
    return _continued_result(N, s, ctx, "strip", "strip")


def zeta_continued(N: int, s, depth: int, ctx: PrecisionContext | None = None) -> complex:
    """zeta_N(s) through the subtracted integral with an explicit depth.

    Valid for Re(s) > 1 - depth away from poles of zeta_N and of
    Gamma(s+N-1).  Exposed for cross-checks at arbitrary depth.
    """
    ctx = ctx or DEFAULT_CONTEXT
    s = _as_complex(s)
    val, _ = _continued(N, s, depth, ctx, _ray_angle(N, s))
    return val / complex_gamma(s + N - 1)


# ---------------------------------------------------------------------------
# sum over the zeros


@functools.lru_cache(maxsize=64)
def _cached_table(N: int, K: int) -> RootTable:
    return root_table(N, K)


def _F(s: complex, z):
    # (-z)^{s-1} + (-conj z)^{s-1} = 2 r^{s-1} cos((s-1)(pi - theta)) for real s
    z = np.asarray(z, dtype=complex)
    return np.exp((s - 1) * np.log(-z)) + np.exp((s - 1) * np.log(-np.conj(z)))


def _F_prime(N: int, s: complex, z):
    z = np.asarray(z, dtype=complex)
    dz = branch_velocity(N, z)
    return (s - 1) * (np.exp((s - 2) * np.log(-z)) * (-dz)
                      + np.exp((s - 2) * np.log(-np.conj(z))) * (-np.conj(dz)))


def _tail_from(N: int, s: complex, K: int, offset: int, ctx: PrecisionContext):
    """sum_{k>K} F(z_k) by Euler-Maclaurin along the branch curve z(t)."""
    t0 = K + offset
    sig = s.real
    p = min(2.0 / abs(sig), 8.0)

    def g(w):
        w = np.asarray(w, dtype=float)
        t = t0 * w ** (-p)
        return _F(s, branch_roots(N, t)) * (p * t0 * w ** (-p - 1.0))

    scale = K ** sig
    integral, ierr, ok = adaptive_gk(g, 0.0, 1.0, 1e-3 * ctx.target_abs_tol * max(scale, 1e-30),
                                     0.25 * ctx.quad_rel_tol, ctx.quad_max_refinements)
    if not ok:
        raise ConvergenceError(f"tail integral did not converge at s = {s}")
    h = 0.5
    zs = branch_roots(N, [t0 - h, t0, t0 + h])
    fk = _F(s, zs[1])
    d1 = _F_prime(N, s, zs)
    d3 = (d1[2] - 2.0 * d1[1] + d1[0]) / (h * h)
    tail = integral - 0.5 * fk - d1[1] / 12.0 + d3 / 720.0
    return complex(tail), float(ierr), complex(zs[1])


def _left_sum(N: int, s: complex, table: RootTable, K: int, ctx: PrecisionContext):
    zs = np.array([r.z for r in table.roots[:K]])
    vals = _F(s, zs)
    head = complex(math.fsum(v.real for v in vals[::-1]), math.fsum(v.imag for v in vals[::-1]))
    tail, err, zK = _tail_from(N, s, K, table.branch_offset, ctx)
    if abs(zK - zs[-1]) > 1e-8 * abs(zK):
        raise ConvergenceError(f"branch curve at t={K + table.branch_offset} misses zero {K}")
    # exp() of an argument of size |s-1||log z| carries that much relative rounding,
    # and for large |Im s| the terms are far larger than their sum
    amp = 2.0 + abs(s - 1) * np.abs(np.log(-zs))
    rounding = EPS * (float(np.sum(np.abs(vals) * amp)) + K * abs(vals[-1]) * amp[-1] / abs(s.real))
    return head + tail, err + rounding


def zeta_left_series(N: int, s, roots: RootTable | None = None,
                     ctx: PrecisionContext | None = None) -> EvalResult:
    """zeta_N(s) for Re(s) < 0 as a sum over the zeros z_k = r_k e^{i theta_k}:

        (-1)^{N-1} (N-1)! Gamma(2-N-s) sum_k [(-z_k)^{s-1} + (-conj z_k)^{s-1}]

    Zeros beyond the table are summed by Euler-Maclaurin on the smooth branch
    curve through them.  The error estimate compares tails started at two
    different indices; the table is extended (or the supplied one exceeded)
    while that estimate is above tolerance.  ``tail_bound`` reports the crude
    bound for the neglected zeros using r_k > 2 pi k.
    """
    ctx = ctx or DEFAULT_CONTEXT
    _check_order(N)
    s = _as_complex(s)
    if s.real >= 0:
        raise DomainError("the root sum needs Re(s) < 0")
    n = _integer_value(s)
    if n is not None and n >= 2 - N:
        raise PoleError(f"s = {n} is a pole of zeta_{N}")
    if roots is not None and roots.order != N:
        raise DomainError("root table order does not match N")
    table = roots if roots is not None else _cached_table(N, DEFAULT_LEFT_ROOTS)
    pref = (-1) ** (N - 1) * math.factorial(N - 1) * complex_gamma(2 - N - s)
    while True:
        K = table.count
        if K < 8:
            raise InsufficientRootsError("the root sum needs at least 8 zeros")
        K2 = K - max(4, K // 4)
        v1, e1 = _left_sum(N, s, table, K, ctx)
        v2, e2 = _left_sum(N, s, table, K2, ctx)
        err = abs(pref) * (abs(v1 - v2) + e1 + e2)
        if err <= ctx.target_abs_tol or K >= MAX_LEFT_ROOTS:
            break
        table = _cached_table(N, min(2 * K, MAX_LEFT_ROOTS))
    if err > ctx.target_abs_tol:
        raise InsufficientRootsError(f"root sum error {err:.3e} above tolerance with {K} zeros")
    th1 = table.roots[0].theta
    crude = (2.0 * abs(pref) * math.exp(abs(s.imag) * (PI - th1))
             * TWO_PI ** (s.real - 1) * K ** s.real / abs(s.real))
    v = pref * v1
    return EvalResult(N, s, v, err + GAMMA_REL_ERR * abs(v), "left-rootsum", "left", terms=K,
                      tail_bound=crude)


# ---------------------------------------------------------------------------
# exact values


def zeta_negative_int(N: int, n: int) -> Fraction:
    """zeta_N(n) = (-1)^{1-n-N} B_{N,1-n} / C(1-n, N) for integers n < 2 - N."""
    _check_order(N)
    if int(n) != n or n >= 2 - N:
        raise DomainError(f"exact values need an integer n < {2 - N}")
    n = int(n)
    sign = -1 if (1 - n - N) % 2 else 1
    return sign * bernoulli_number(N, 1 - n) / math.comb(1 - n, N)


def zeta_exact(N: int, n: int) -> EvalResult:
    q = zeta_negative_int(N, n)
    return EvalResult(N, complex(n), complex(float(q)), 0.0, "exact-negative-integer",
                      "left" if n <= -1 else "strip", exact=q)


def residue_at(N: int, n: int) -> Fraction:
    """Residue of zeta_N at the pole n in {2-N, ..., 1}: (2-n) C(N, 2-n) B_{N,1-n}."""
    _check_order(N)
    if int(n) != n or not 2 - N <= n <= 1:
        raise DomainError(f"zeta_{N} has poles only at {2 - N}..1")
    n = int(n)
    return (2 - n) * math.comb(N, 2 - n) * bernoulli_number(N, 1 - n)


def limit_at_one(N: int) -> float:
    """lim_{s->1} [zeta_N(s) - N/(s-1)] = log N! - N psi(N)."""
    _check_order(N)
    return math.lgamma(N + 1) - N * digamma_int(N)


def limit_probe(N: int, h: float, ctx: PrecisionContext | None = None) -> float:
    """zeta_N(1+h) - N/h, which tends to :func:`limit_at_one` as h -> 0."""
    return evaluate(N, 1.0 + h, ctx).value.real - N / h


def contour_function(N: int, s, ctx: PrecisionContext | None = None) -> complex:
    """The entire function I_N(s) = zeta_N(s) / Gamma(2-N-s).

    At integers n it is 0 for n >= 2 and (-1)^{n+N-1} N! B_{N,1-n}/(1-n)!
    for n <= 1.
    """
    _check_order(N)
    s = _as_complex(s)
    n = _integer_value(s)
    if n is not None:
        if n >= 2:
            return 0j
        sign = -1 if (n + N - 1) % 2 else 1
        q = sign * math.factorial(N) * bernoulli_number(N, 1 - n) / math.factorial(1 - n)
        return complex(float(q))
    return evaluate(N, s, ctx).value / complex_gamma(2 - N - s)


# ---------------------------------------------------------------------------
# dispatcher


_ROUTES = {
    "series": zeta_right_series,
    "integral": zeta_integral,
    "strip": zeta_strip,
    "leftsum": zeta_left_series,
}


def evaluate(N: int, s, ctx: PrecisionContext | None = None, method: str = "auto") -> EvalResult:
    """zeta_N(s) by the route suited to Re(s).

    Re(s) > 1.2 right-series, or right-integral once |Im s| > 8;
    (1, 1.2] right-integral; (-1, 1] strip; Re(s) <= -1 left-rootsum;
    integers below 2 - N exact.  ``method`` forces
    one of "series", "integral", "strip", "leftsum".
    """
    ctx = ctx or DEFAULT_CONTEXT
    _check_order(N)
    s = _as_complex(s)
    n = _integer_value(s)
    if n is not None and 2 - N <= n <= 1:
        raise PoleError(f"s = {n} is a pole of zeta_{N}")
    if method != "auto":
        if method not in _ROUTES:
            raise DomainError(f"unknown method {method!r}")
        if method == "leftsum":
            return zeta_left_series(N, s, None, ctx)
        return _ROUTES[method](N, s, ctx)
    if n is not None and n < 2 - N:
        return zeta_exact(N, n)
    _check_pole(N, s)
    if s.real > SERIES_SWITCH and abs(s.imag) <= SERIES_IM_MAX:
        return zeta_right_series(N, s, ctx)
    if s.real > 1:
        return zeta_integral(N, s, ctx)
    if s.real > -1:
        return zeta_strip(N, s, ctx)
    return zeta_left_series(N, s, None, ctx)


def evaluate_many(N: int, points: Sequence, ctx: PrecisionContext | None = None) -> list[EvalResult]:
    return [evaluate(N, s, ctx) for s in points]
