import json

import pytest

from hyperzeta import verify as vf
from hyperzeta import roots as rt
from hyperzeta.errors import DomainError


@pytest.fixture(scope="module")
def all_reports():
    return {r.check_id: r for r in vf.run_suite("all")}


def test_strictly_less_rejects_ties():
    assert vf.strictly_less(1.0, 0.1, 2.0, 0.1)
    assert not vf.strictly_less(1.0, 0.5, 2.0, 0.5)
    assert not vf.strictly_less(1.0, 0.0, 1.0, 0.0)


def test_report_fields():
    rep = vf.CheckReport("x")
    assert rep.passed and rep.points_tested == 0
    rep.fail(1 + 2j, 3.0, 1.0)
    d = rep.to_dict()
    assert not d["passed"] and d["failures"] == [["1+2i", 3.0, 1.0]]


def test_dominance_rejects_order_one():
    with pytest.raises(DomainError):
        vf.check_dominates_riemann(orders=(1,))


def test_inequality_grid_is_committed():
    assert len(vf.INEQUALITY_GRID) >= 12
    assert all(complex(s).real < 0 for s in vf.INEQUALITY_GRID)


def test_inequalities_reject_right_half_plane():
    with pytest.raises(DomainError):
        vf.check_growth_bounds(points=(0.5,))


def test_reports_sorted_and_unique(all_reports):
    ids = [r.check_id for r in vf.run_suite("howard")]
    assert ids == sorted(ids)
    assert len(all_reports) == len(set(all_reports))


@pytest.mark.parametrize("check_id", [
    "growth-riemann", "growth-riemann-sharp-constant", "growth-zeta2", "growth-zeta2-dominates-riemann",
    "growth-first-root", "growth-hurwitz", "modulus-growth", "dominates-riemann",
    "bernoulli-zeta2-bound-N2", "bernoulli-zeta2-bound-N3", "bernoulli-r1-bound", "howard-conjecture",
    "brackets-N2", "brackets-N3", "table-N3", "ordering-N2", "ordering-N3", "ordering-N4",
    "root-certificates-N2", "root-certificates-N3", "root-certificates-N4",
    "root-sandwich-N2", "root-sandwich-N3", "root-sandwich-N4",
    "series-vs-integral", "strip-vs-leftsum", "leftsum-vs-exact", "classical-anchors",
    "residue-probes", "limit-at-one", "contour-derivative-at-one",
    "bernoulli-via-roots", "bernoulli-via-roots-N3", "conjugation", "exp-remainder-telescoping-scaled",
    "exp-remainder-conjugation", "gamma-recurrence", "pochhammer-recurrence", "bernoulli-recursion",
    "bernoulli-classical", "bernoulli-closed-forms-corrected", "mu-at-one",
])
def test_asserted_check_passes(all_reports, check_id):
    rep = all_reports[check_id]
    assert rep.kind == "assert" and rep.points_tested > 0
    assert rep.passed, rep.failures


def test_known_failures_are_reported_not_hidden(all_reports):
    # values that disagree with the reference data; see README "Known discrepancies"
    assert all_reports["table-N2"].failures == [("k=5 x", pytest.approx(3.50126899688, abs=1e-10), 3.501269010)]
    assert {f[0] for f in all_reports["bernoulli-closed-forms"].failures} == {
        "(1, 3)", "(3, 3)", "(4, 3)", "(5, 3)", "(6, 3)"}
    # one ulp of E_N(10) ~ 2e4 is 3.6e-12, above the 1e-12 absolute target
    assert [f[0] for f in all_reports["exp-remainder-telescoping"].failures] == ["(4, 10)", "(5, 10)", "(6, 10)"]
    assert not vf.suite_passed(all_reports.values())


def test_experiments_never_decide_the_verdict(all_reports):
    exps = [r for r in all_reports.values() if r.kind == "experiment"]
    assert {r.check_id for r in exps} == {
        "monotonicity-in-N", "growth-riemann-signed-exponent", "growth-first-root-signed-exponent"}
    asserted = [r for r in all_reports.values() if r.kind == "assert"]
    failing_exp = vf.CheckReport("fake", kind="experiment")
    failing_exp.fail(0, 1, 0)
    assert vf.suite_passed([r for r in asserted if r.passed] + [failing_exp])


def test_signed_exponent_forms_fail_somewhere(all_reports):
    assert not all_reports["growth-riemann-signed-exponent"].passed
    assert not all_reports["growth-first-root-signed-exponent"].passed


def test_suites_that_pass():
    for name in ("inequalities", "cross", "howard"):
        assert vf.suite_passed(vf.run_suite(name)), name


def test_unknown_suite():
    with pytest.raises(DomainError):
        vf.run_suite("nope")


def test_json_and_text_output(all_reports):
    reps = list(all_reports.values())[:5]
    data = json.loads(vf.reports_json(reps))
    assert [d["check_id"] for d in data] == [r.check_id for r in reps]
    text = vf.reports_text(reps)
    assert text.splitlines()[0].startswith("check")


def test_sandwich_constants_order():
    A, B, A1, B1 = vf.sandwich_constants(2, 4.0)
    assert B < A and A1 < B1


def test_closed_forms_differ_only_at_index_three():
    for N in range(1, 7):
        a, b = vf.bernoulli_closed_forms(N), vf.bernoulli_closed_forms_corrected(N)
        assert a[:3] == b[:3]
        assert (a[3] == b[3]) == (N == 2)


def test_reference_tables_are_close_to_computed():
    # every cell except the single misprint agrees to 1e-8
    for N in (2, 3):
        t = rt.root_table(N, 10)
        for row, z in zip(vf.REFERENCE_TABLES[N], t.roots):
            assert abs(row[2] - z.y) <= 1e-8 and abs(row[3] - z.r) <= 1e-8 and abs(row[4] - z.theta) <= 1e-8
