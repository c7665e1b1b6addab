"""Hypothesis strategies for random evidence profiles."""

from hypothesis import strategies as st

from cohsys.curve import CurveModel
from cohsys.errors import ProfileInvalid
from cohsys.profile import Exclusion, SectionCap, SystemProfile, no_net
from cohsys.slopes import SubsystemRecord, SystemType


@st.composite
def exclusions(draw, r, n):
    if draw(st.booleans()):
        return no_net()
    rank = draw(st.integers(1, r))
    min_sections = draw(st.integers(0, n + 1))
    min_degree = draw(st.none() | st.integers(-2, 40))
    return Exclusion(rank, min_sections, min_degree)


@st.composite
def profiles(draw, ranks=(1, 2, 3), sys_type=None, generated=None, max_declared=3):
    """Valid profiles with a degree bound at every rank."""
    g = draw(st.integers(4, 30))
    if sys_type is None:
        r = draw(st.sampled_from(ranks))
        gen = draw(st.booleans()) if generated is None else generated
        if r == 3 and not gen:
            gen = True
        d = draw(st.integers(1 if gen else -10, 40))
        n_lo = r + 1 if gen else 0
        n = draw(st.integers(n_lo, max(n_lo, 10)))
    else:
        r, d, n = sys_type
        gen = draw(st.booleans()) if generated is None else generated
    sys = SystemType(r, d, n, gen)
    lmd = draw(st.integers(-2, 40)) if not gen else draw(st.none() | st.integers(-2, 40))
    caps = draw(st.lists(st.builds(SectionCap, st.integers(1, r), st.integers(-2, 40),
                                   st.integers(0, n)), max_size=3))
    excl = draw(st.lists(exclusions(r, n), max_size=2))
    base = SystemProfile(CurveModel(g), sys, lmd, tuple(caps), (), (), tuple(excl))
    declared = []
    for _ in range(draw(st.integers(0, max_declared))):
        rf = draw(st.integers(1, r))
        top = base.max_degree(rf)
        df = draw(st.integers(min(-3, top), top))
        nf = draw(st.integers(0, n))
        if base.admissible(rf, df, nf)[0]:
            declared.append(SubsystemRecord(rf, df, nf, draw(st.booleans())))
    fullrank = []
    if gen and d >= 1 and draw(st.booleans()):
        df = draw(st.integers(1, d))
        nf = draw(st.integers(r + 1, max(r + 1, n - 1)))
        if base.admissible(r, df, nf)[0]:
            fullrank.append(SubsystemRecord(r, df, nf, True))
    try:
        return SystemProfile(CurveModel(g), sys, lmd, tuple(caps), tuple(declared),
                             tuple(fullrank), tuple(excl))
    except ProfileInvalid:  # pragma: no cover - admissibility was checked above
        raise
