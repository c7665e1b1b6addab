from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from cohsys.butler import (
    Case,
    DsbConclusion,
    butler_diagram_search,
    butler_sweep,
    dsb_check_2d5,
    maind_conditions,
)
from cohsys.constructions import DEFAULT_GENERA, example_profile
from cohsys.curve import CurveModel, gonality
from cohsys.errors import GenusTooSmall, NetStatusUnknown, WrongType
from cohsys.profile import Outcome, SectionCap, SystemProfile, triple_verdict, verdict_linear
from cohsys.slopes import Comparison, SystemType

import known_profiles as kp
from strategies import profiles


def test_dsb_g25():
    rep = dsb_check_2d5(25, kp.yyy_g25())
    assert rep.conclusion is DsbConclusion.STABLE and rep.premise_ok
    margins = [c.margin for c in rep.cases]
    assert margins == [1, None, 1, 11]


@pytest.mark.parametrize("make", [kp.butler_case_b_g18, lambda: kp.net_free_2d5(18, 28)])
def test_dsb_g18_d28(make):
    rep = dsb_check_2d5(18, make())
    assert rep.conclusion is DsbConclusion.STABLE
    assert all(c.margin is None or c.margin > 0 for c in rep.cases)
    assert rep.cases[0].margin == Fraction(2, 3)


def test_dsb_premise_fails_at_three_d1():
    assert dsb_check_2d5(18, kp.net_free_2d5(18, 30)).conclusion is DsbConclusion.PREMISE_FAILS


def test_dsb_errors():
    with pytest.raises(WrongType):
        dsb_check_2d5(6, kp.yyn_g6())
    with pytest.raises(WrongType):
        dsb_check_2d5(24, kp.yyy_g25())
    # degree-19 line subbundles may carry three sections at g = 25
    unknown = SystemProfile(CurveModel(25), SystemType(2, 39, 5, True), 19, (SectionCap(1, 19, 3),))
    with pytest.raises(NetStatusUnknown):
        dsb_check_2d5(25, unknown)


@pytest.mark.parametrize("g", range(18, 41))
def test_premise_fails_at_three_d1_everywhere(g):
    d = 3 * gonality(g, 1)
    assert dsb_check_2d5(g, kp.net_free_2d5(g, d)).conclusion is DsbConclusion.PREMISE_FAILS


@pytest.mark.parametrize("g", range(18, 41))
def test_nyn_profile_premise_fails(g):
    p = example_profile("NYN", g).profile
    assert p.sys.d >= 3 * gonality(g, 1)
    assert dsb_check_2d5(g, p).conclusion is DsbConclusion.PREMISE_FAILS


def _realizable(p):
    """Generated records respect the gonality floor d >= d_{n-r} of a general curve."""
    recs = [p.sys] + [rec for rec in p.all_declared() if rec.generated and rec.n > rec.r]
    return all(rec.d >= gonality(p.genus, rec.n - rec.r) for rec in recs)


@given(st.integers(10, 45).flatmap(lambda d: profiles(sys_type=(2, d, 5), generated=True)))
@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
def test_dsb_stable_never_linearly_unstable(p):
    assume(_realizable(p))
    try:
        rep = dsb_check_2d5(p.genus, p)
    except NetStatusUnknown:
        return
    if rep.conclusion is DsbConclusion.STABLE:
        assert verdict_linear(p).outcome is not Outcome.UNSTABLE


@pytest.mark.parametrize("name", ["NYN", "NYY", "YYY"])
def test_dsb_agrees_with_linear_on_examples(name):
    for g in range(max(18, DEFAULT_GENERA[name]), 41):
        p = example_profile(name, g).profile
        rep = dsb_check_2d5(g, p)
        lin = triple_verdict(p).linear
        if rep.conclusion is DsbConclusion.STABLE:
            assert lin.outcome is Outcome.STABLE
        else:
            assert rep.conclusion is DsbConclusion.PREMISE_FAILS


def test_diagram_search_g20():
    rep = butler_diagram_search(20, 31)
    assert rep.alpha_s_stable and not rep.boundary
    assert (rep.cases[0].lhs, rep.cases[0].rhs) == (11, Fraction(32, 3))


def test_diagram_search_boundary_g18():
    m = SystemProfile(CurveModel(18), SystemType(3, 28, 5, True))
    rep = butler_diagram_search(18, m)
    assert rep.boundary and rep.boundary_comparison is Comparison.SAFE
    assert rep.cases[1].lhs == -14 and rep.alpha_s_stable


def test_diagram_search_errors():
    with pytest.raises(GenusTooSmall):
        butler_diagram_search(17, 23)
    with pytest.raises(WrongType):
        butler_diagram_search(20, 29)
    with pytest.raises(WrongType):
        butler_diagram_search(20, SystemProfile(CurveModel(20), SystemType(2, 31, 5, True)))


def test_maind_examples():
    f = maind_conditions(20, "A")
    assert f.feasible and (f.d2, f.d) == (16, 31)
    assert f.checks[0].rhs == Fraction(46, 3)
    f = maind_conditions(18, Case.A, strict=True)
    assert not f.feasible
    assert f.reason == "d_2 > 2g/3 + 2 fails at equality"
    assert any("mod 3" in x for x in f.failures)
    f = maind_conditions(18, "b")
    assert f.feasible and f.d == 28 and f.checks[0].rhs == Fraction(41, 3)
    with pytest.raises(GenusTooSmall):
        maind_conditions(17, "B")


@pytest.mark.parametrize("g", range(18, 41))
def test_maind_modes(g):
    assert maind_conditions(g, "B").feasible
    assert maind_conditions(g, "A", strict=True).feasible is (g % 3 == 2)
    assert maind_conditions(g, "A", strict=False).feasible is (g % 3 != 0)


def test_sweep():
    rows = butler_sweep(range(18, 25))
    assert len(rows) == 7
    assert [r.g for r in rows if r.a_strict] == [20, 23]
    assert all(r.b_strict for r in rows)
    assert butler_sweep(range(18, 19))[0].b_strict
    assert butler_sweep(range(30, 18)) == []
    row = butler_sweep(range(17, 18))[0]
    assert row.a_strict is None and "GenusTooSmall" in row.note
