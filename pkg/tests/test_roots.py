import math
import time

import mpmath as mp
import pytest

from hyperzeta import numerics as nm
from hyperzeta import roots as rt
from hyperzeta.errors import BracketError, ConvergenceError, DomainError


def test_frozen_mpmath_roots(oracle):
    for row in oracle["roots"]:
        N = row["N"]
        table = rt.root_table(N, 10)
        x, y = float(row["x"]), float(row["y"])
        best = min(table.roots, key=lambda z: abs(z.z - complex(x, y)))
        assert abs(best.x - x) <= 1e-12 and abs(best.y - y) <= 1e-11


@pytest.mark.parametrize("N", [4, 5])
def test_higher_order_roots_against_findroot(N):
    table = rt.root_table(N, 12)
    for z in table.roots:
        with mp.workdps(30):
            ref = mp.findroot(lambda w: mp.exp(w) - sum(w ** k / mp.factorial(k) for k in range(N)), mp.mpc(z.z))
        assert abs(complex(ref) - z.z) <= 1e-10 * z.r


def test_order_one_is_closed_form():
    t = rt.root_table(1, 5)
    for k, z in enumerate(t.roots, start=1):
        assert z.x == 0.0 and z.y == pytest.approx(2 * math.pi * k)


@pytest.mark.parametrize("k", [1, 2, 17, 50, 400])
def test_n2_bracket_contains_root(k):
    lo, hi = rt.bracket_n2(k)
    assert lo == pytest.approx((2 * k + 0.25) * math.pi) and hi == pytest.approx((2 * k + 0.5) * math.pi)
    z = rt.solve_root_n2(k)
    assert lo < z.y < hi
    assert abs(rt.residual(2, z.z)) <= 1e-12 * max(1.0, abs(1 + z.z))


@pytest.mark.parametrize("k", [1, 2, 17, 50, 400])
def test_n3_bracket_contains_root(k):
    lo, hi = rt.bracket_n3(k)
    z = rt.solve_root_n3(k)
    assert lo < z.y < hi
    assert abs(rt.residual(3, z.z)) <= 1e-12 * max(1.0, abs(nm.taylor_poly(z.z, 2)))


def test_bracket_index_validation():
    for fn in (rt.bracket_n2, rt.bracket_n3, rt.solve_root_n2, rt.solve_root_n3):
        with pytest.raises((DomainError, BracketError)):
            fn(0)


@pytest.mark.parametrize("N", [2, 3, 4, 6])
def test_ordering_invariants(N):
    t = rt.root_table(N, 60)
    rs = [z.r for z in t.roots]
    assert all(b > a for a, b in zip(rs, rs[1:]))
    assert [z.index for z in t.roots] == list(range(1, 61))
    assert all(z.y > 0 for z in t.roots)
    if N in (2, 3):
        th = [z.theta for z in t.roots]
        assert all(a < b < math.pi / 2 for a, b in zip(th, th[1:]))
    assert t.certified == (N <= 3)


def test_conjugate_is_also_a_root():
    for N in (2, 3, 5):
        for z in rt.root_table(N, 10).roots:
            assert abs(rt.residual(N, z.z.conjugate())) <= 1e-11 * max(1.0, abs(nm.taylor_poly(z.z, N - 1)))


def test_branch_curve_passes_through_roots():
    for N in (2, 3, 4):
        t = rt.root_table(N, 30)
        zs = rt.branch_roots(N, [z.index + t.branch_offset for z in t.roots])
        for a, b in zip(zs, t.roots):
            assert abs(a - b.z) <= 1e-9 * b.r


def test_csv_round_trip():
    t = rt.root_table(2, 10)
    back = rt.RootTable.from_csv(t.to_csv(), 2)
    rt.check_table(back)
    for a, b in zip(t.roots, back.roots):
        assert a.index == b.index and abs(a.x - b.x) <= 5e-10 * max(1, abs(a.x))


def test_json_round_trip_is_exact():
    t = rt.root_table(4, 15)
    back = rt.RootTable.from_json(t.to_json())
    rt.check_table(back)
    assert (back.order, back.certified, back.branch_offset) == (t.order, t.certified, t.branch_offset)
    assert [(z.index, z.x, z.y, z.r, z.theta) for z in back.roots] == \
        [(z.index, z.x, z.y, z.r, z.theta) for z in t.roots]


def test_check_table_rejects_disorder():
    t = rt.root_table(2, 5)
    bad = rt.RootTable(2, (t.roots[1], t.roots[0]) + t.roots[2:])
    with pytest.raises(ConvergenceError):
        rt.check_table(bad)


def test_refine_root_rejects_origin():
    with pytest.raises(ConvergenceError):
        rt.refine_root(5, 0.1 + 0.1j)


def test_root_table_argument_checks():
    with pytest.raises(DomainError):
        rt.root_table(0, 5)
    with pytest.raises(DomainError):
        rt.root_table(2, 0)


def test_root_table_speed():
    for N in (2, 3):
        t0 = time.perf_counter()
        rt.root_table(N, 10)
        assert time.perf_counter() - t0 < 1.0
