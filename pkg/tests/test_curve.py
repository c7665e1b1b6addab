from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cohsys import curve as oc
from cohsys.curve import CurveModel
from cohsys.errors import (
    GenusTooSmall,
    InvalidK,
    InvalidRange,
    InvalidRank,
    NonGeneralCurve,
    UnsupportedRank,
)


def brute_gonality(g, k):
    e = 0
    while oc.bn_number(g, k, e) < 0:
        e += 1
    return e


@pytest.mark.parametrize("g,k,want", [(18, 1, 10), (12, 2, 10), (25, 3, 22), (4, 1, 3)])
def test_gonality_values(g, k, want):
    assert oc.gonality(g, k) == want
    assert brute_gonality(g, k) == want


@given(st.integers(2, 120), st.integers(1, 8))
def test_gonality_is_least_degree_with_nonnegative_bn(g, k):
    assert oc.gonality(g, k) == brute_gonality(g, k)


@given(st.integers(2, 80), st.integers(1, 6))
def test_gonality_strictly_increasing(g, k):
    assert oc.gonality(g, k) < oc.gonality(g, k + 1)


def test_gonality_errors():
    with pytest.raises(InvalidK):
        oc.gonality(6, 0)
    with pytest.raises(NonGeneralCurve):
        oc.gonality(CurveModel(6, general=False), 1)
    with pytest.raises(GenusTooSmall):
        CurveModel(1)


@pytest.mark.parametrize("g,k,d,want", [(18, 1, 10, 0), (18, 1, 9, -2), (18, 1, 12, 4)])
def test_bn_number(g, k, d, want):
    assert oc.bn_number(g, k, d) == want


def test_bn_number_range():
    with pytest.raises(InvalidRange):
        oc.bn_number(6, -1, 3)
    with pytest.raises(InvalidRange):
        oc.bn_number(6, 1, -3)


@pytest.mark.parametrize("g,k,d,want", [(6, 1, 4, True), (6, 1, 3, False), (25, 2, 19, True)])
def test_bn_nonempty(g, k, d, want):
    assert oc.bn_nonempty(g, k, d) is want


@pytest.mark.parametrize("g,e,want", [(6, -1, 0), (6, 5, 2), (18, 14, 3), (6, 0, 1), (6, 11, 6)])
def test_max_line_sections(g, e, want):
    assert oc.max_line_sections(g, e) == want


@given(st.integers(2, 60), st.integers(-5, 150))
def test_max_line_sections_monotone_and_consistent(g, e):
    n = oc.max_line_sections(g, e)
    assert n <= oc.max_line_sections(g, e + 1)
    assert n >= max(0, e - g + 1)
    if n >= 2 and n > e - g + 1:
        assert oc.gonality(g, n - 1) <= e


@pytest.mark.parametrize("g,k,ell,want", [(6, 1, 5, True), (6, 1, 3, False), (18, 2, 40, False)])
def test_bpf_general_ok(g, k, ell, want):
    assert oc.bpf_general_ok(g, k, ell) is want


def test_bpf_needs_genus_above_two():
    with pytest.raises(GenusTooSmall):
        oc.bpf_general_ok(2, 1, 3)


def test_clifford_gamma():
    assert oc.clifford_gamma(1, 8, 5).gamma == 0
    assert oc.clifford_gamma(2, 28, 4).gamma == 12
    assert oc.clifford_gamma(1, 10, 2).gamma == 8
    assert oc.clifford_gamma(2, 7, 3).gamma == Fraction(5, 2)
    with pytest.raises(InvalidRank):
        oc.clifford_gamma(0, 1, 1)


@pytest.mark.parametrize("g,r,want", [(18, 1, 8), (18, 2, 8), (25, 2, 12)])
def test_clifford_index(g, r, want):
    assert oc.clifford_index(g, r) == want


def test_clifford_index_errors():
    with pytest.raises(GenusTooSmall):
        oc.clifford_index(3, 1)
    with pytest.raises(UnsupportedRank):
        oc.clifford_index(10, 3)


def test_secant_expected_dim():
    assert oc.secant_expected_dim(5, 0, 1, 9).expected_dim == 5
    assert oc.secant_expected_dim(6, 1, 1, 7).expected_dim == 4
    assert oc.secant_expected_dim(6, 1, 2, 9).expected_dim == 8
    assert oc.secant_expected_dim(6, 1, 2, 7).expected_dim == 10
    with pytest.raises(InvalidRange):
        oc.secant_expected_dim(3, 4, 1, 5)
    with pytest.raises(InvalidRange):
        oc.secant_expected_dim(3, -1, 1, 5)
