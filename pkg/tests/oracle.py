"""Independent reference values from mpmath at 40 digits.

Nothing here imports hyperzeta.  ``python3 tests/oracle.py`` rewrites
tests/oracle_values.json; the tests read the frozen file.
"""

import json
import math
from fractions import Fraction
import pathlib

import mpmath as mp

mp.mp.dps = 40
HERE = pathlib.Path(__file__).parent


def remainder(x, N):
    # e^x - T_{N-1}(x); the Taylor tail avoids cancellation near 0
    if abs(x) < 1:
        term = x ** N / mp.factorial(N)
        total, k = term, N
        while abs(term) > mp.eps * abs(total):
            k += 1
            term = term * x / k
            total += term
        return total
    return mp.exp(x) - sum(x ** k / mp.factorial(k) for k in range(N))


def coeffs(N, count):
    """Exact c_m with 1/(e^x - T_{N-1}) = N! x^-N sum c_m x^m.

    Inverts the power series sum_k N! x^k/(N+k)! term by term in rationals.
    """
    g = [Fraction(math.factorial(N), math.factorial(N + k)) for k in range(count)]
    c = []
    for m in range(count):
        acc = Fraction(int(m == 0)) - sum(g[m - j] * c[j] for j in range(m))
        c.append(acc / g[0])
    return c


def _mpq(q):
    return mp.mpf(q.numerator) / q.denominator


def zeta_N(N, s, J=3):
    """Gamma(s+N-1) zeta_N(s) with J small-x terms removed on (0, 1)."""
    s = mp.mpc(s)
    a = s + N - 1
    c = coeffs(N, J)
    nf = mp.factorial(N)
    head = sum(nf * _mpq(c[m]) / (s + m - 1) for m in range(J))

    def small(x):
        # the subtraction cancels ~(N+J) log2(1/x) bits, so add them back
        extra = int((N + J + 2) * max(0, -mp.log(x, 2))) + 20
        with mp.extraprec(extra):
            return x ** (a - 1) * (1 / remainder(x, N) - nf * sum(_mpq(c[m]) * x ** (m - N) for m in range(J)))

    lo = mp.quad(small, [0, 0.25, 1])
    hi = mp.quad(lambda x: x ** (a - 1) / remainder(x, N), [1, 10, 40, mp.inf])
    return (head + lo + hi) / mp.gamma(a)


def root(N, seed):
    return mp.findroot(lambda z: remainder(z, N), mp.mpc(seed))


def main():
    out = {"zeta": [], "roots": [], "bernoulli": []}
    points = [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (2, "2+1j"), (3, "2+1j"), (2, 1.1),
              (2, "1.5+7j"), (2, "0.5+2j"), (3, "0.25-1j"), (2, -0.5), (3, -0.5), (1, -0.5),
              (2, "-0.75+0.2j"), (4, 2.5), (4, -0.5),
              (1, -1.5), (2, -1.5), (3, -1.5), (2, "-2.5+1j"), (3, "-3.2+0.5j"), (2, "-1.25+0.75j")]
    for N, s in points:
        s_mp = mp.mpmathify(s)
        v = zeta_N(N, s_mp, J=max(4, int(mp.ceil(2 - mp.re(s_mp))) + 1))
        out["zeta"].append({"N": N, "s": [float(mp.re(mp.mpmathify(s))), float(mp.im(mp.mpmathify(s)))],
                            "value": [mp.nstr(mp.re(v), 25), mp.nstr(mp.im(v), 25)]})
    # large |Im s|: Gamma(s+N-1) is tiny, so the real-axis integral cancels ~|Im s| digits
    out["zeta_large_im"] = []
    with mp.workdps(80):
        for N, s in [(2, "2+30j"), (2, "0.5+20j"), (3, "3+15j"), (3, "2-25j"), (2, "1.5+40j"), (4, "2.5+12j"),
                     (2, "-1.5+20j"), (3, "-2.5-12j"), (2, "-4+8j")]:
            s_mp = mp.mpmathify(s)
            v = zeta_N(N, s_mp, J=max(4, int(mp.ceil(2 - mp.re(s_mp))) + 1))
            out["zeta_large_im"].append({"N": N, "s": [float(mp.re(s_mp)), float(mp.im(s_mp))],
                                         "value": [mp.nstr(mp.re(v), 25), mp.nstr(mp.im(v), 25)]})
    seeds = {2: [(2.09 + 7.46j), (3.5 + 32.85j), (4.17 + 64.3j)], 3: [(3.84 + 8.37j), (7.69 + 65.7j)]}
    for N, ss in seeds.items():
        for z in ss:
            r = root(N, z)
            out["roots"].append({"N": N, "x": mp.nstr(mp.re(r), 25), "y": mp.nstr(mp.im(r), 25)})
    for N in (2, 3, 4):
        c = coeffs(N, 8)
        out["bernoulli"].append({"N": N, "values": [str(c[n] * math.factorial(n)) for n in range(8)]})
    (HERE / "oracle_values.json").write_text(json.dumps(out, indent=1) + "\n")


if __name__ == "__main__":
    main()
