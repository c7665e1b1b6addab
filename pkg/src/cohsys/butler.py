"""Dual span bundle checks for rank-two systems with five sections.

The stability argument for the dual span bundle M of a generated (2, d, 5)
system splits a maximal destabilizing subbundle S by rank and by the number
of sections it sees; each branch reduces to one exact inequality.  The same
bookkeeping, run on the dual (3, d, 5) system, gives the destabilizer search
used for the Butler-conjecture cases d = 2 d_2 - 1 and d = 2 d_2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import curve as oracle
from .constructions import Check, ExtensionDatum, check, flag, mf_ext_condition
from .curve import CurveModel
from .errors import CohsysError, GenusTooSmall, InvalidRange, NetStatusUnknown, WrongType
from .profile import NetStatus, SystemProfile, contains_net, verdict_alpha_large
from .slopes import Comparison, SubsystemRecord, SystemType, lex_compare_small_alpha


class DsbConclusion(enum.Enum):
    STABLE = "DsbStable"
    PREMISE_FAILS = "PremiseFails"
    CASE_GAP = "CaseGap"


@dataclass(frozen=True)
class DsbCase:
    name: str
    bound: str
    margin: Optional[Fraction]  # None: branch excluded outright

    @property
    def safe(self) -> bool:
        return self.margin is None or self.margin > 0


@dataclass(frozen=True)
class DsbReport:
    g: int
    d: int
    premise_ok: bool
    premise: tuple
    cases: tuple
    conclusion: DsbConclusion

    @property
    def implies_linear_stable(self) -> bool:
        return self.conclusion is DsbConclusion.STABLE


def dsb_check_2d5(g: int, p: SystemProfile) -> DsbReport:
    if (p.sys.r, p.sys.n) != (2, 5) or not p.sys.generated:
        raise WrongType(f"dual span check needs a generated (2,d,5) system, got {p.sys}")
    if p.genus != g:
        raise WrongType(f"profile genus {p.genus} does not match g={g}")
    c = CurveModel(g)
    d = p.sys.d
    d1 = oracle.gonality(c, 1)
    mu_dual = Fraction(d, 3)
    premise = [check("d < 3*d_1", d, "<", 3 * d1)]
    cases = ()
    if premise[0].passed:
        net = contains_net(p)
        if net.status is NetStatus.UNKNOWN:
            raise NetStatusUnknown("net status of the profile is not determined")
        premise.append(flag("no rank-1 subsystem with 3 sections", net.status is NetStatus.NO))
        premise.append(flag("alpha_L-stable", verdict_alpha_large(p).stable))
        cases = (
            DsbCase("rank 1", "deg S^dual >= d_1", d1 - mu_dual),
            DsbCase("rank 2, dim W = 3", "gives a net; excluded", None),
            DsbCase("rank 2, dim W >= 4, contributes to gamma_2",
                    "mu(S) <= -d_1", d1 - mu_dual),
            DsbCase("rank 2, dim W >= 4, does not contribute",
                    "mu(S^dual) >= g - 1", (g - 1) - mu_dual),
        )
    ok = all(x.passed for x in premise)
    if not ok:
        conclusion = DsbConclusion.PREMISE_FAILS
    elif all(x.safe for x in cases):
        conclusion = DsbConclusion.STABLE
    else:
        conclusion = DsbConclusion.CASE_GAP
    return DsbReport(g, d, ok, tuple(premise), cases, conclusion)


@dataclass(frozen=True)
class ButlerSearchReport:
    g: int
    d: int
    d2: int
    cases: tuple
    boundary: bool
    boundary_comparison: Optional[Comparison]
    alpha_s_stable: bool


def butler_diagram_search(g: int, m_profile) -> ButlerSearchReport:
    """Destabilizer search for the dual of a (3, d, 5) system.

    ``m_profile`` is a SystemProfile for the (3, d, 5) system or just its degree.
    """
    if g < 18:
        raise GenusTooSmall(f"the destabilizer search needs g >= 18, got {g}")
    if isinstance(m_profile, SystemProfile):
        sys = m_profile.sys
        if m_profile.genus != g:
            raise WrongType(f"profile genus {m_profile.genus} does not match g={g}")
    else:
        sys = SystemType(3, int(m_profile), 5, generated=True)
    c = CurveModel(g)
    d2 = oracle.gonality(c, 2)
    if (sys.r, sys.n) != (3, 5) or sys.d not in (2 * d2 - 1, 2 * d2):
        raise WrongType(f"need type (3, d, 5) with d in {{{2 * d2 - 1}, {2 * d2}}}, got {sys}")
    d = sys.d
    mu_m = Fraction(-d, 2)
    cases = (
        # S^dual is generated with 2 sections; E_1 semistable of slope d/3 <= 2 d_2 / 3
        check("dim W = 2: g/2 + 1 > 2*d_2/3", Fraction(g, 2) + 1, ">", Fraction(2 * d2, 3)),
        check("dim W >= 3: deg S <= -d_2 <= mu(M)", -d2, "<=", mu_m),
    )
    boundary = Fraction(-d2) == mu_m
    comparison = None
    if boundary:
        # M^dual is a nontrivial extension of S^dual by T with T of type (1, d_2, 2)
        comparison = lex_compare_small_alpha(SubsystemRecord(1, d2, 2), SystemType(2, d, 5))
    stable = all(x.passed for x in cases) and (not boundary or comparison is Comparison.SAFE)
    return ButlerSearchReport(g, d, d2, cases, boundary, comparison, stable)


class Case(enum.Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class ButlerFeasibility:
    g: int
    case: Case
    d2: int
    d: int
    epsilon: int
    checks: tuple
    strict_mode: bool

    @property
    def feasible(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple:
        return tuple(_reason(c) for c in self.checks if not c.passed)

    @property
    def reason(self) -> str:
        """The first failing condition, empty when feasible."""
        fails = self.failures
        return fails[0] if fails else ""


def _reason(c: Check) -> str:
    if c.relation == ">" and c.lhs == c.rhs:
        return f"{c.name} fails at equality"
    return f"{c.name} fails"


def _parse_case(case) -> Case:
    if isinstance(case, Case):
        return case
    try:
        return Case(str(case).upper())
    except ValueError:
        raise InvalidRange(f"case must be A or B, got {case!r}") from None


def maind_conditions(g: int, case, strict: bool = True) -> ButlerFeasibility:
    if g < 18:
        raise GenusTooSmall(f"the Butler cases need g >= 18, got {g}")
    case = _parse_case(case)
    c = CurveModel(g)
    eps = 0 if case is Case.A else 1
    d1, d2 = oracle.gonality(c, 1), oracle.gonality(c, 2)
    d = 2 * d2 - 1 + eps
    name = "d_2 > 2g/3 + 2" if eps == 0 else "d_2 > (2g - 1)/3 + 2"
    checks = [check(name, d2, ">", Fraction(2 * g - eps, 3) + 2)]
    if case is Case.A:
        if strict:
            checks.append(check("g = 2 mod 3", g % 3, "==", 2))
        else:
            checks.append(check("g != 0 mod 3", g % 3, "!=", 0))
    checks.append(check("d < 3*d_1", d, "<", 3 * d1))
    ell1, ell2 = d2 - 1, d2 + eps
    checks += [
        check(f"W^1_{ell1} nonempty", oracle.bn_number(c, 1, ell1), ">=", 0),
        flag(f"general member of W^1_{ell1} generated with 2 sections", oracle.bpf_general_ok(c, 1, ell1)),
        check(f"W^2_{ell2} nonempty", oracle.bn_number(c, 2, ell2), ">=", 0),
        flag(f"general member of W^2_{ell2} generated with 3 sections", oracle.bpf_general_ok(c, 2, ell2)),
    ]
    checks += mf_ext_condition(ExtensionDatum(ell1, 2, ell2, 3, g))[1]
    return ButlerFeasibility(g, case, d2, d, eps, tuple(checks), strict)


@dataclass(frozen=True)
class SweepRow:
    g: int
    d2: Optional[int]
    a_strict: Optional[bool]
    a_proof: Optional[bool]
    b_strict: Optional[bool]
    b_proof: Optional[bool]
    note: str = ""


def butler_sweep(g_range) -> list:
    rows = []
    for g in g_range:
        try:
            a_s = maind_conditions(g, Case.A, True)
            a_p = maind_conditions(g, Case.A, False)
            b_s = maind_conditions(g, Case.B, True)
            b_p = maind_conditions(g, Case.B, False)
        except CohsysError as exc:
            rows.append(SweepRow(g, None, None, None, None, None, f"{type(exc).__name__}: {exc}"))
            continue
        note = a_s.reason if not a_s.feasible else ""
        rows.append(SweepRow(g, a_s.d2, a_s.feasible, a_p.feasible, b_s.feasible, b_p.feasible, note))
    return rows
