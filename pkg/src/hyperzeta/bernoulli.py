"""Generalized Bernoulli numbers B_{N,n}.

These are the Taylor coefficients of the generating function

    (w^N / N!) / (e^w - T_{N-1}(w)) = sum_n B_{N,n} w^n / n!

and reduce to the classical Bernoulli numbers when N = 1.  Values are kept as
exact :class:`fractions.Fraction` objects.
"""

from __future__ import annotations

import json
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import DomainError, InsufficientRootsError
from .numerics import TWO_PI, PI

MAX_INDEX = 500

_lock = threading.Lock()
_cache: dict[int, list[Fraction]] = {}


@dataclass(frozen=True)
class BernoulliTable:
    order: int
    values: tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def as_strings(self) -> list[str]:
        return [format_rational(v) for v in self.values]

    def to_json(self) -> str:
        return json.dumps({"order": self.order, "values": self.as_strings()})

    @classmethod
    def from_json(cls, text: str) -> "BernoulliTable":
        data = json.loads(text)
        return cls(int(data["order"]), tuple(Fraction(v) for v in data["values"]))


def format_rational(q: Fraction) -> str:
    """Render an exact rational as ``"p/q"`` (integers as ``"p"``)."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _extend(N: int, n_max: int) -> list[Fraction]:
    # recursion on b_n = B_{N,n}/n!:  b_n = -N! * sum_{m<n} b_m / (N+n-m)!
    with _lock:
        b = _cache.setdefault(N, [Fraction(1)])
        if len(b) <= n_max:
            fact = [math.factorial(j) for j in range(N + n_max + 1)]
            nf = fact[N]
            for n in range(len(b), n_max + 1):
                acc = Fraction(0)
                for m in range(n):
                    acc += b[m] / fact[N + n - m]
                b.append(-nf * acc)
        return b[: n_max + 1]


def generalized_bernoulli(N: int, n_max: int) -> BernoulliTable:
    """Exact B_{N,0..n_max} from the convolution recursion."""
    if N < 1:
        raise DomainError("order N must be >= 1")
    if n_max < 0 or n_max > MAX_INDEX:
        raise DomainError(f"n_max must lie in [0, {MAX_INDEX}]")
    b = _extend(N, n_max)
    return BernoulliTable(N, tuple(b[n] * math.factorial(n) for n in range(n_max + 1)))


def bernoulli_number(N: int, n: int) -> Fraction:
    return generalized_bernoulli(N, n)[n]


def series_coefficients(N: int, count: int) -> list[float]:
    """Floats c_m = B_{N,m}/m!, so 1/(e^x - T_{N-1}(x)) = N! x^-N sum c_m x^m."""
    b = _extend(N, count - 1)
    return [float(v) for v in b[:count]]


class RootSumValue(NamedTuple):
    value: float
    tail_bound: float
    terms: int


def bernoulli_via_roots(N: int, n: int, roots, rel_tol: float | None = None) -> RootSumValue:
    """Approximate B_{N,n} from the upper-half-plane zeros of e^z - T_{N-1}(z).

    Uses B_{N,n} = -(2 n!/N) sum_k r_k^{-n} cos(n theta_k), valid for n > N.
    The sign is -1 for every N; it follows from the root-sum form of zeta_N
    at negative integers and reproduces the classical case N = 1.  The returned ``tail_bound`` bounds the neglected terms using
    r_k > 2 pi k.  When ``rel_tol`` is given, ``InsufficientRootsError`` is
    raised if the bound exceeds ``rel_tol`` times the partial sum.
    """
    if n <= N:
        raise DomainError(f"the root-sum formula needs n > N (got n={n}, N={N})")
    rows = list(roots.roots if hasattr(roots, "roots") else roots)
    K = len(rows)
    if K < 2:
        raise InsufficientRootsError("at least two roots are required")
    # sum smallest terms first
    terms = [math.cos(n * z.theta) / z.r ** n for z in rows]
    s = math.fsum(reversed(terms))
    scale = 2.0 * math.factorial(n) / N
    value = -scale * s
    # sum_{k>K} (2 pi k)^-n <= (2 pi)^-n K^{1-n} / (n-1)
    tail = scale * TWO_PI ** (-n) * K ** (1 - n) / (n - 1)
    if rel_tol is not None and tail > rel_tol * abs(value):
        raise InsufficientRootsError(
            f"tail bound {tail:.3e} exceeds {rel_tol:g} x |partial sum| with {K} roots"
        )
    return RootSumValue(value, tail, K)


class HowardBounds(NamedTuple):
    bound_two_pi: float
    bound_first_root: float
    bound_seven: float


def howard_bounds(n: int, r1: float, N: int = 2) -> HowardBounds:
    """The three upper bounds on |B_{N,n}|.

    ``bound_two_pi`` is 2 n!/(N (2 pi)^n) * pi^2/6, ``bound_first_root`` is 2 n!/r1^n
    and ``bound_seven`` is n!/7^n.  The last two are stated for N = 2.
    """
    if n < 1 or r1 <= 0:
        raise DomainError("howard_bounds needs n >= 1 and r1 > 0")
    nf = math.factorial(n)
    return HowardBounds(
        2.0 * nf / (N * TWO_PI ** n) * PI ** 2 / 6.0,
        2.0 * nf / r1 ** n,
        nf / 7.0 ** n,
    )
