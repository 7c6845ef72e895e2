"""Floating-point kernels shared by the zeta, root and verification code.

Everything here is a pure function of its arguments.  Functions that take a
``ctx`` read tolerances from a :class:`PrecisionContext`; the module-level
:data:`DEFAULT_CONTEXT` is used when none is given.
"""

from __future__ import annotations

import cmath
import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError

EULER_GAMMA = 0.57721566490153286060651209008240243
PI = 3.14159265358979323846264338327950288
TWO_PI = 2.0 * PI

DEFAULT_SPLITS = (1.0, 5.0, 20.0, 80.0)


@dataclass(frozen=True)
class PrecisionContext:
    """Tolerances and work limits for every floating evaluation."""

    target_abs_tol: float = 1e-11
    max_series_terms: int = 200
    quad_rel_tol: float = 1e-12
    quad_max_refinements: int = 4000
    root_tol: float = 1e-12

    def __post_init__(self):
        for name in ("target_abs_tol", "quad_rel_tol", "root_tol"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ValueError(f"{name} must be a positive finite number, got {value!r}")
        if int(self.max_series_terms) != self.max_series_terms or self.max_series_terms < 16:
            raise ValueError("max_series_terms must be an integer >= 16")
        if int(self.quad_max_refinements) != self.quad_max_refinements or self.quad_max_refinements < 1:
            raise ValueError("quad_max_refinements must be a positive integer")


DEFAULT_CONTEXT = PrecisionContext()


def _finite(value, what):
    if not cmath.isfinite(complex(value)):
        raise OverflowError(f"{what} produced a non-finite value: {value!r}")
    return value


def taylor_poly(x, N: int):
    """T_N(x) = sum_{k=0}^{N} x^k / k!, by Horner's rule.

    Works on Python scalars and on numpy arrays.
    """
    if N < 0 or N > 64:
        raise DomainError(f"Taylor degree must lie in [0, 64], got {N}")
    acc = 1.0
    for k in range(N, 0, -1):
        acc = 1.0 + acc * x / k
    if np.ndim(acc) == 0:
        return _finite(acc, "taylor_poly")
    return acc


def _tail_series(x, N: int, rel_tol: float):
    # sum_{k>=N} x^k/k!, valid and cancellation-free for |x| < N/2
    term = x ** N / math.factorial(N)
    total = term
    k = N
    while True:
        k += 1
        term = term * x / k
        total = total + term
        if np.all(np.abs(term) <= rel_tol * np.abs(total)) or k > N + 200:
            return total


def exp_remainder(x, N: int, rel_tol: float = 1e-17):
    """e^x - T_{N-1}(x) without cancellation near the origin.

    For |x| < N/2 the Taylor tail sum_{k>=N} x^k/k! is summed directly;
    elsewhere the polynomial is subtracted from the exponential.  Accepts
    scalars or numpy arrays (real or complex).
    """
    if N < 1:
        raise DomainError(f"order N must be >= 1, got {N}")
    arr = np.asarray(x)
    if np.any(arr.real > 709.0):
        raise OverflowError("exp_remainder: Re(x) exceeds the double exponent range")
    if arr.ndim == 0:
        xv = arr.item()
        if xv == 0:
            return 0.0 * xv
        if abs(xv) < N / 2:
            return _tail_series(xv, N, rel_tol)
        if N == 1:
            return cmath.exp(xv) - 1 if isinstance(xv, complex) else math.expm1(xv)
        ex = cmath.exp(xv) if isinstance(xv, complex) else math.exp(xv)
        return ex - taylor_poly(xv, N - 1)
    out = np.empty(arr.shape, dtype=np.result_type(arr.dtype, float))
    small = np.abs(arr) < N / 2
    if np.any(small):
        out[small] = _tail_series(arr[small], N, rel_tol)
    big = ~small
    if np.any(big):
        xb = arr[big]
        out[big] = np.expm1(xb) if N == 1 else np.exp(xb) - taylor_poly(xb, N - 1)
    return out


# Lanczos approximation, g = 7, n = 9
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def sin_pi(z):
    """sin(pi z) with the argument reduced modulo 2 before scaling by pi."""
    z = complex(z)
    n = round(z.real)
    w = z - n
    v = cmath.sin(PI * w)
    return -v if n % 2 else v


def complex_gamma(z):
    """Gamma(z) for complex z with |z| <= 50 (Lanczos plus reflection)."""
    z = complex(z)
    if z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real):
        raise PoleError(f"Gamma has a pole at {z.real:g}")
    if abs(z) > 50.5:
        raise DomainError("complex_gamma is only supported on |z| <= 50")
    if z.real < 0.5:
        return PI / (sin_pi(z) * complex_gamma(1.0 - z))
    if abs(z.imag) >= 5.0:
        return cmath.exp(_log_gamma_stirling(z))
    z -= 1.0
    acc = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(TWO_PI) * cmath.exp((z + 0.5) * cmath.log(t) - t) * acc


_STIRLING_B = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6, -3617 / 510)


def _log_gamma_stirling(z: complex) -> complex:
    # Stirling series after shifting to |z| >= 17; ~10x more accurate than
    # Lanczos once |Im z| is large, because no big exponent is cancelled
    n = 0
    while abs(z + n) < 17.0 or (z + n).real < 8.0:
        n += 1
    w = z + n
    acc = (w - 0.5) * cmath.log(w) - w + 0.5 * math.log(TWO_PI)
    w2, p = w * w, w
    for k, b in enumerate(_STIRLING_B, start=1):
        acc += b / (2 * k * (2 * k - 1) * p)
        p *= w2
    return acc - sum(cmath.log(z + j) for j in range(n))


def digamma_int(N: int) -> float:
    """psi(N) = -gamma + H_{N-1} for a positive integer N."""
    if N < 1:
        raise DomainError("digamma_int requires N >= 1")
    return -EULER_GAMMA + math.fsum(1.0 / j for j in range(1, N))


def pochhammer(s, k: int):
    """Rising factorial (s)_k = s (s+1) ... (s+k-1), by direct product."""
    if k < 0:
        raise DomainError("pochhammer requires k >= 0")
    acc = 1
    for j in range(k):
        acc = acc * (s + j)
    return acc


# Gauss-Kronrod 7/15 abscissae and weights on [-1, 1]
_XGK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_WK = np.concatenate([_WGK[:-1], _WGK[::-1]])
_WG15 = np.zeros(15)
_WG15[[1, 3, 5, 7, 9, 11, 13]] = np.concatenate([_WG[:-1], _WG[::-1]])

_LAGUERRE = {n: np.polynomial.laguerre.laggauss(n) for n in (32, 64)}


def _gk15(f, a, b):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    vals = np.asarray(f(mid + half * _NODES))
    if not np.all(np.isfinite(vals)):
        raise ConvergenceError(f"integrand returned NaN/inf on [{a}, {b}]")
    k15 = half * np.dot(_WK, vals)
    g7 = half * np.dot(_WG15, vals)
    return k15, abs(k15 - g7)


def adaptive_gk(f, a: float, b: float, abs_tol: float, rel_tol: float, max_refinements: int):
    """Globally adaptive Gauss-Kronrod (7/15) on a finite interval.

    ``f`` must accept a numpy array of abscissae.  Returns
    ``(value, error, converged)``.
    """
    val, err = _gk15(f, a, b)
    heap = [(-err, a, b, val, err)]
    total, total_err = val, err
    for _ in range(max_refinements):
        if total_err <= max(abs_tol, rel_tol * abs(total)):
            break
        _, lo, hi, v, e = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            heapq.heappush(heap, (0.0, lo, hi, v, e))
            break
        v1, e1 = _gk15(f, lo, mid)
        v2, e2 = _gk15(f, mid, hi)
        heapq.heappush(heap, (-e1, lo, mid, v1, e1))
        heapq.heappush(heap, (-e2, mid, hi, v2, e2))
        total += v1 + v2 - v
        total_err += e1 + e2 - e
    # incremental updates drift; the final answer is re-summed
    total = sum(sorted((item[3] for item in heap), key=abs))
    total_err = math.fsum(item[4] for item in heap)
    return total, total_err, total_err <= max(abs_tol, rel_tol * abs(total))


def integrate_semi_infinite(
    f: Callable,
    splits: Sequence[float] = DEFAULT_SPLITS,
    ctx: PrecisionContext | None = None,
    *,
    endpoint_exponent: float | None = None,
    abs_tol: float = 0.0,
    lower: float = 0.0,
    raise_on_failure: bool = True,
):
    """Integrate ``f`` over (lower, infinity).

    Finite panels [lower, s_1], [s_1, s_2], ... are handled by adaptive
    Gauss-Kronrod; the region beyond the last split is done with
    Gauss-Laguerre after factoring out e^{-x}, so ``f`` must decay roughly
    exponentially there.

    If ``endpoint_exponent`` is given, ``f`` is assumed to behave like
    (x - lower)^alpha near ``lower`` (alpha > -1) and the first panel is mapped
    through x = lower + h w^p, with p chosen to leave a bounded integrand.

    Returns ``(value, abs_error)``.  ``ConvergenceError`` is raised when the
    requested accuracy is not met, unless ``raise_on_failure`` is False.
    """
    ctx = ctx or DEFAULT_CONTEXT
    pts = [lower] + [float(s) for s in splits if s > lower]
    if any(b <= a for a, b in zip(pts, pts[1:])):
        raise DomainError("splits must be sorted ascending")
    rel = ctx.quad_rel_tol
    budget = ctx.quad_max_refinements
    total = 0.0
    err = 0.0
    ok = True
    for i, (a, b) in enumerate(zip(pts, pts[1:])):
        g = f
        lo, hi = a, b
        if i == 0 and endpoint_exponent is not None:
            if endpoint_exponent <= -1:
                raise DomainError("endpoint exponent must exceed -1")
            p = min(max(1.0, 2.0 / (endpoint_exponent + 1.0)), 40.0)
            if p > 1.0:
                h = b - a

                def g(w, p=p, h=h, a=a):
                    return f(a + h * w ** p) * (h * p * w ** (p - 1.0))

                lo, hi = 0.0, 1.0
        v, e, conv = adaptive_gk(g, lo, hi, abs_tol / len(pts), rel * 0.25, budget)
        total += v
        err += e
        ok = ok and conv
    L = pts[-1]
    tail = []
    for n in (32, 64):
        t, w = _LAGUERRE[n]
        vals = np.asarray(f(L + t)) * np.exp(t)
        if not np.all(np.isfinite(vals)):
            raise ConvergenceError("integrand returned NaN/inf in the exponential tail")
        tail.append(np.dot(w, vals))
    total += tail[1]
    err += abs(tail[1] - tail[0])
    if not (ok and err <= max(abs_tol, rel * abs(total))):
        if raise_on_failure:
            raise ConvergenceError(
                f"quadrature did not converge: estimate {total!r}, error {err:.3e}"
            )
    total = complex(total) if np.iscomplexobj(total) else float(total)
    return total, float(err)


def _hurwitz_em(sigma: float, a: float, M: int) -> float:
    # Euler-Maclaurin for sum_{n>M} (n+a)^-sigma, with B_2..B_12
    b2k = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730)
    x = M + a
    tail = x ** (1 - sigma) / (sigma - 1) - 0.5 * x ** (-sigma)
    rising = sigma  # sigma (sigma+1) ... (sigma + 2k - 2)
    for k, b in enumerate(b2k, start=1):
        tail += b / math.factorial(2 * k) * rising * x ** (-sigma - 2 * k + 1)
        rising *= (sigma + 2 * k - 1) * (sigma + 2 * k)
    return tail


def hurwitz_zeta(sigma: float, a: float, ctx: PrecisionContext | None = None) -> float:
    """sum_{n>=1} (n + a)^{-sigma} for real sigma > 1 and a > -1.

    Note the summation starts at n = 1, so ``hurwitz_zeta(s, 0)`` is the
    Riemann zeta value and the usual n-from-0 convention differs by a^{-s}.
    """
    if sigma <= 1:
        raise DomainError("hurwitz_zeta diverges for sigma <= 1")
    if a <= -1:
        raise DomainError("hurwitz_zeta requires a > -1")
    M = 32 + int(math.ceil(max(0.0, sigma)))
    head = math.fsum((n + a) ** (-sigma) for n in range(1, M + 1))
    return head + _hurwitz_em(sigma, a, M)
