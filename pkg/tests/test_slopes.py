from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cohsys.errors import (
    EmptyCaps,
    NegativeAlpha,
    NoExcessSections,
    NonPositiveDegree,
    NotGenerated,
    NotProper,
)
from cohsys.slopes import (
    Caps,
    Comparison,
    SubsystemRecord as Sub,
    SystemType as Sys,
    alpha_slope,
    compare_at_alpha,
    critical_alphas,
    lex_compare_large_alpha,
    lex_compare_small_alpha,
    linear_slope,
    parse_rat,
    wall_alpha,
)
from cohsys.curve import max_line_sections

D, E, S = Comparison.DESTABILIZES, Comparison.EQUAL, Comparison.SAFE


def test_alpha_slope():
    assert alpha_slope(Sub(1, 5, 2), 0) == 5
    assert alpha_slope(Sub(1, 5, 2), 1) == 7
    assert alpha_slope(Sys(2, 11, 4), Fraction(3, 2)) == Fraction(17, 2)
    with pytest.raises(NegativeAlpha):
        alpha_slope(Sub(1, 5, 2), -1)


def test_linear_slope():
    assert linear_slope(Sub(1, 5, 2, True)) == 5
    assert linear_slope(Sys(2, 11, 4, True)) == Fraction(11, 2)
    assert linear_slope(Sys(2, 23, 5, True)) == Fraction(23, 3)
    with pytest.raises(NotGenerated):
        linear_slope(Sub(1, 5, 2))
    with pytest.raises(NonPositiveDegree):
        linear_slope(Sub(1, 0, 2, True))
    with pytest.raises(NoExcessSections):
        linear_slope(Sub(2, 5, 2, True))
    with pytest.raises(NoExcessSections):
        Sys(2, 5, 2, True)


def test_wall_alpha():
    w = wall_alpha(Sys(2, 23, 5), Sub(1, 11, 3))
    assert w.alpha == 1 and w.witness == Sub(1, 11, 3)
    assert wall_alpha(Sys(2, 11, 4), Sub(1, 5, 2)) is None
    assert wall_alpha(Sys(2, 9, 4), Sub(1, 5, 2)) is None
    with pytest.raises(NotProper):
        wall_alpha(Sys(2, 9, 4), Sub(2, 9, 4))
    with pytest.raises(NotProper):
        wall_alpha(Sys(2, 9, 4), Sub(3, 1, 1))


def test_lex_examples():
    assert lex_compare_small_alpha(Sub(1, 5, 2), Sys(2, 9, 4)) is D
    assert lex_compare_small_alpha(Sub(1, 11, 3), Sys(2, 23, 5)) is S
    assert lex_compare_small_alpha(Sub(1, 14, 3), Sys(2, 28, 5)) is D
    assert lex_compare_large_alpha(Sub(1, 11, 3), Sys(2, 23, 5)) is D
    assert lex_compare_large_alpha(Sub(1, 5, 2), Sys(2, 9, 4)) is D
    assert lex_compare_small_alpha(Sub(2, 10, 4), Sys(4, 20, 8)) is E


@given(st.integers(-100, 100), st.integers(-100, 100))
def test_pencils_never_large_destabilize_2d5(e, d):
    assert lex_compare_large_alpha(Sub(1, e, 2), Sys(2, d, 5)) is S


def test_parse_rat():
    assert parse_rat("3/2") == Fraction(3, 2)
    assert parse_rat(" 4 ") == 4
    with pytest.raises(ValueError):
        parse_rat("0.5")


def line_caps(g, top):
    return Caps({1: top}, lambda r, d: max_line_sections(g, d))


def test_critical_alphas_examples():
    assert critical_alphas(Sys(2, 11, 4), Caps({1: 5}, lambda r, d: 2)) == []
    walls = critical_alphas(Sys(2, 23, 5), line_caps(12, 11))
    assert [w.alpha for w in walls] == [1]
    assert walls[0].witness.triple == (1, 11, 3)
    assert critical_alphas(Sys(1, 7, 3), Caps({1: 7}, lambda r, d: 3)) == []
    with pytest.raises(EmptyCaps):
        critical_alphas(Sys(2, 11, 4), Caps({}, lambda r, d: 0))


def _all_records(sys, caps):
    for r, top in caps.max_degree.items():
        for d in range(-3, top + 1):
            for n in range(0, min(caps.max_sections(r, d), sys.n) + 1):
                if (r, d, n) != sys.triple:
                    yield Sub(r, d, n)


def _sign_changes(sys, records):
    return sorted({w.alpha for w in (wall_alpha(sys, x) for x in records) if w})


@given(st.integers(2, 3), st.integers(-5, 30), st.integers(1, 8), st.integers(4, 20), st.data())
def test_frontier_walls_bound_the_sign_changes(r, d, n, g, data):
    """Between consecutive frontier walls the worst comparison is constant."""
    sys = Sys(r, d, n)
    tops = {k: data.draw(st.integers(-2, d + 4)) for k in range(1, r + 1)}
    caps = Caps(tops, lambda k, e: max_line_sections(g, e) if k == 1 else n)
    walls = [w.alpha for w in critical_alphas(sys, caps)]
    recs = list(_all_records(sys, caps))
    points = sorted(set(walls) | {Fraction(0)})
    probes = [(a + b) / 2 for a, b in zip(points, points[1:])] + [points[-1] + 1]
    probes += [points[0] + Fraction(1, 10 ** 6)]
    for lo, hi in zip(points, points[1:] + [None]):
        inside = [p for p in probes if p > lo and (hi is None or p < hi)]
        if len(inside) < 2:
            continue
        worst = [max((_rank(compare_at_alpha(x, sys, a)) for x in recs), default=0) for a in inside]
        assert len(set(worst)) == 1


def _rank(c):
    return {S: 0, E: 1, D: 2}[c]


@given(st.integers(1, 4), st.integers(-50, 50), st.integers(0, 12),
       st.integers(1, 4), st.integers(-50, 50), st.integers(0, 12))
def test_lex_matches_numeric_limits(r, d, n, rf, df, nf):
    sys = Sys(r, d, n)
    if rf > r or (rf, df, nf) == (r, d, n):
        return
    sub = Sub(rf, df, nf)
    w = wall_alpha(sys, sub)
    # the slope difference is affine in alpha, so its sign is constant on each side of the wall
    small = Fraction(1) if w is None else w.alpha / 2
    large = Fraction(1) if w is None else w.alpha * 2
    assert lex_compare_small_alpha(sub, sys) is compare_at_alpha(sub, sys, small)
    assert lex_compare_large_alpha(sub, sys) is compare_at_alpha(sub, sys, large)
