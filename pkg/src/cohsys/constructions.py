"""Generators for the seven rank-two example systems.

Each generator picks the smallest parameter in its window, checks every
numeric hypothesis (Brill-Noether nonemptiness, base-point-freeness, the
section-lifting inequality for extensions), builds an evidence profile and
compares the computed stability triple with the expected one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import curve as oracle
from .curve import CurveModel, ceil_frac
from .errors import GenusTooSmall, InfeasibleExtension, VerdictMismatch, WindowEmpty
from .profile import (
    Exclusion,
    SectionCap,
    SystemProfile,
    TriVerdict,
    no_net,
    triple_verdict,
)
from .slopes import SubsystemRecord, SystemType


@dataclass(frozen=True)
class Check:
    """One numeric hypothesis: ``lhs relation rhs``."""

    name: str
    lhs: Fraction
    relation: str
    rhs: Fraction
    passed: bool


_RELATIONS = {
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
}


def check(name: str, lhs, relation: str, rhs) -> Check:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    return Check(name, lhs, relation, rhs, _RELATIONS[relation](lhs, rhs))


def flag(name: str, ok: bool) -> Check:
    """A yes/no hypothesis, recorded as 1 == 1 or 0 == 1."""
    return Check(name, Fraction(int(ok)), "==", Fraction(1), ok)


@dataclass(frozen=True)
class ExtensionDatum:
    """Degrees ``ell_i`` and section counts ``k_i`` of the sub and quotient line bundles."""

    ell1: int
    k1: int
    ell2: int
    k2: int
    g: int

    def __post_init__(self):
        if self.k1 < 1 or self.k2 < 1:
            raise ValueError(f"section counts must be >= 1, got k1={self.k1}, k2={self.k2}")
        if self.ell1 < 0 or self.ell2 < 0:
            raise ValueError(f"degrees must be >= 0, got {self.ell1}, {self.ell2}")


def mf_ext_condition(dat: ExtensionDatum, strict: bool = True) -> tuple:
    """Whether every section of the quotient lifts to a general extension.

    Returns ``(ok, trace)``. ``strict=False`` evaluates the non-strict variant,
    kept only to probe the boundary.
    """
    rhs = dat.k1 * dat.k2 + (dat.k2 - 1) * (dat.g - 1 - dat.ell1)
    c = check("sections lift: ell2 > k1*k2 + (k2-1)(g-1-ell1)", dat.ell2,
              ">" if strict else ">=", rhs)
    return c.passed, [c]


def _line_bundle_checks(g: int, ell: int, k: int, label: str) -> list:
    """Hypotheses for a general generated L in W^{k-1}_ell with exactly k sections."""
    c = CurveModel(g)
    return [
        check(f"{label}: Brill-Noether number of W^{k - 1}_{ell} >= 0",
              oracle.bn_number(c, k - 1, ell), ">=", 0),
        flag(f"{label}: general member of W^{k - 1}_{ell} is generated with {k} sections",
             oracle.bpf_general_ok(c, k - 1, ell)),
    ]


def extension_checks(dat: ExtensionDatum) -> list:
    trace = _line_bundle_checks(dat.g, dat.ell1, dat.k1, "L_1")
    trace += _line_bundle_checks(dat.g, dat.ell2, dat.k2, "L_2")
    trace += mf_ext_condition(dat)[1]
    return trace


def build_mf_ext_profile(dat: ExtensionDatum, extra_exclusions=(),
                         declared_generated_fullrank=()) -> SystemProfile:
    """Profile of the complete system of a general extension 0 -> L_1 -> E -> L_2 -> 0.

    A line subbundle either lies in L_1 or maps nonzero to L_2; the extension
    is nontrivial and L_2 is generated, so in the second case both degree
    and sections drop below those of L_2.
    """
    trace = extension_checks(dat)
    failed = [c for c in trace if not c.passed]
    if failed:
        raise InfeasibleExtension(f"infeasible extension {dat}: {failed[0].name} fails", failed[0])
    top = max(dat.ell1, dat.ell2 - 1)
    return SystemProfile(
        curve=CurveModel(dat.g),
        sys=SystemType(2, dat.ell1 + dat.ell2, dat.k1 + dat.k2, generated=True),
        line_max_degree=top,
        section_caps=(SectionCap(1, top, max(dat.k1, dat.k2 - 1)),),
        declared=(SubsystemRecord(1, dat.ell1, dat.k1, True),),
        declared_generated_fullrank=tuple(declared_generated_fullrank),
        exclusions=tuple(extra_exclusions),
    )


# -- the seven examples ---------------------------------------------------------

EXAMPLES = ("NNN", "YYN", "YNN", "NYN", "NNY", "NYY", "YYY")
DEFAULT_GENERA = {"NNN": 6, "YYN": 6, "YNN": 12, "NYN": 18, "NNY": 4, "NYY": 25, "YYY": 25}
# genus from which the window argument is guaranteed; smaller genera are tried and flagged
STATED_MIN = dict(DEFAULT_GENERA)
# below this the construction has no meaning at all
HARD_MIN = {"NNN": 3, "YYN": 3, "YNN": 3, "NYN": 18, "NNY": 3, "NYY": 3, "YYY": 3}


@dataclass
class ExampleReport:
    name: str
    genus: int
    params: dict
    profile: SystemProfile
    expected: tuple
    computed: TriVerdict
    trace: list
    flags: list = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return all(c.passed for c in self.trace)

    @property
    def matches(self) -> bool:
        return self.computed.cells() == self.expected


def _expected(name: str) -> tuple:
    return tuple(name)


def _window(low: int, high: int, name: str, g: int) -> range:
    if low > high:
        raise WindowEmpty(f"{name} at genus {g}: no integer in [{low}, {high}]", low, high)
    return range(low, high + 1)


def _first_feasible(name: str, g: int, window: range, attempt) -> tuple:
    """Smallest parameter in ``window`` whose trace passes; ``attempt(p)`` -> (trace, payload)."""
    first = None
    for p in window:
        trace, payload = attempt(p)
        if all(c.passed for c in trace):
            return p, trace, payload
        if first is None:
            first = next(c for c in trace if not c.passed)
    raise InfeasibleExtension(f"{name} at genus {g}: no feasible parameter, {first.name} fails", first)


def _nnn(g: int):
    c = CurveModel(g)
    d1, d2 = oracle.gonality(c, 1), oracle.gonality(c, 2)
    # deg M = deg L + 1 with both below d_2, so both have exactly two sections

    def attempt(ell):
        trace = _line_bundle_checks(g, ell, 2, "L") + _line_bundle_checks(g, ell + 1, 2, "M")
        trace.append(check("M has no third section: deg M < d_2", ell + 1, "<", d2))
        return trace, None

    ell, trace, _ = _first_feasible("NNN", g, _window(d1, d2 - 2, "NNN", g), attempt)
    prof = SystemProfile(
        curve=c,
        sys=SystemType(2, 2 * ell + 1, 4, generated=True),
        line_max_degree=ell + 1,
        declared=(SubsystemRecord(1, ell, 2, True), SubsystemRecord(1, ell + 1, 2, True)),
    )
    return {"ell_L": ell, "ell_M": ell + 1}, prof, trace


def _ext_example(name, g, window, datum_of, extras=lambda ell: ((), ())):
    def attempt(ell):
        dat = datum_of(ell)
        return extension_checks(dat), dat

    ell, trace, dat = _first_feasible(name, g, window, attempt)
    exclusions, fullrank = extras(ell)
    prof = build_mf_ext_profile(dat, exclusions, fullrank)
    return ell, dat, prof, trace


def _yyn(g: int):
    d1 = oracle.gonality(g, 1)
    ell, dat, prof, trace = _ext_example(
        "YYN", g, _window(d1 + 1, g, "YYN", g), lambda ell: ExtensionDatum(ell, 2, ell + 1, 2, g))
    return {"ell": ell}, prof, trace


def _ynn(g: int):
    d2 = oracle.gonality(g, 2)
    ell, dat, prof, trace = _ext_example(
        "YNN", g, _window(d2 + 1, g, "YNN", g), lambda ell: ExtensionDatum(ell, 3, ell + 1, 2, g))
    return {"ell": ell}, prof, trace


def _nny(g: int):
    # open window g/2 + 1 < ell < 2g/3 + 3/2
    low = Fraction(g, 2) + 1
    high = Fraction(2 * g, 3) + Fraction(3, 2)
    window = _window(int(low) + 1, ceil_frac(high) - 1, "NNY", g)

    def extras(ell):
        only_pencil = Exclusion(1, 2, ell + 1,
                                "line subbundles with two sections are the subbundle L_1")
        # a rank-2 generated subsheaf through L_1 is an extension of O_C by L_1
        return (only_pencil,), (SubsystemRecord(2, ell + 1, 3, True),)

    ell, dat, prof, trace = _ext_example(
        "NNY", g, window, lambda ell: ExtensionDatum(ell + 1, 2, ell, 2, g), extras)
    d3 = oracle.gonality(g, 3)
    trace = trace + [
        check("deg E < 2*d_3", 2 * ell + 1, "<", 2 * d3),
        check("ell < d_3 - 1", ell, "<", d3 - 1),
    ]
    return {"ell": ell}, prof, trace


def _dsb_window(g: int, name: str) -> range:
    # d_2 <= ell < 3g/4 + 1
    high = ceil_frac(Fraction(3 * g, 4) + 1) - 1
    return _window(oracle.gonality(g, 2), high, name, g)


def _dsb_trace(g: int, ell: int) -> list:
    d1 = oracle.gonality(g, 1)
    return [check("deg E < 3*d_1", 2 * ell + 1, "<", 3 * d1)]


def _nyy(g: int):
    def extras(ell):
        return (no_net("line subbundles with three sections would split the extension"),), ()

    ell, dat, prof, trace = _ext_example(
        "NYY", g, _dsb_window(g, "NYY"), lambda ell: ExtensionDatum(ell + 1, 2, ell, 3, g), extras)
    return {"ell": ell}, prof, trace + _dsb_trace(g, ell)


def _yyy(g: int):
    def extras(ell):
        return (no_net("line subbundles with three sections would split the extension"),), ()

    ell, dat, prof, trace = _ext_example(
        "YYY", g, _dsb_window(g, "YYY"), lambda ell: ExtensionDatum(ell, 2, ell + 1, 3, g), extras)
    return {"ell": ell}, prof, trace + _dsb_trace(g, ell)


@dataclass(frozen=True)
class NynReport:
    g: int
    epsilon: int
    e: int
    beta: int
    secant_dim: int
    pointed_secant_dim: int
    quot_secant_dim: int
    checks: tuple

    @property
    def feasible(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def dims(self) -> tuple:
        return (self.secant_dim, self.pointed_secant_dim, self.quot_secant_dim)


def nyn_feasibility(g: int) -> NynReport:
    """Numeric hypotheses of the elementary-transformation construction."""
    if g < 18:
        raise GenusTooSmall(f"the elementary-transformation example needs g >= 18, got {g}")
    c = CurveModel(g)
    eps = next(x for x in (1, 2, 3) if (g - 1 + x) % 3 == 0)
    e = (g - 1 + eps) // 3
    d1 = oracle.gonality(c, 1)
    beta = oracle.bn_number(c, 1, g - e)
    # h^0(K L^-1) = e + 1 for L in W^1_{g-e}; h^0(K M^-1) = 0 for M general of degree g + 1
    h0 = e + 1
    secant = oracle.secant_expected_dim(e, 1, 1, h0).expected_dim
    pointed = oracle.secant_expected_dim(e - 1, 1, 1, h0).expected_dim
    quot = oracle.secant_expected_dim(e, 1, 2, h0).expected_dim
    checks = (
        check("beta of W^1_{g-e} = g - 2e - 2 > 0", beta, ">", 0),
        check("beta of W^1_{g-e} equals g - 2e - 2", beta, "==", g - 2 * e - 2),
        flag("general L in W^1_{g-e} is generated with 2 sections", oracle.bpf_general_ok(c, 1, g - e)),
        check("e >= 6", e, ">=", 6),
        check("e >= g - beta of W^2_g (codimension of W^2_g)", e, ">=", g - oracle.bn_number(c, 2, g)),
        check("e <= (g+2)/3", e, "<=", Fraction(g + 2, 3)),
        check("(g+2)/3 < d_1", Fraction(g + 2, 3), "<", d1),
        check("e - 1 < d_1", e - 1, "<", d1),
        check("secant locus expected dimension = e - 2", secant, "==", e - 2),
        check("pointed secant locus expected dimension = e - 4", pointed, "==", e - 4),
        check("Quot secant locus expected dimension = 2e - 2", quot, "==", 2 * e - 2),
        check("split family dimension e < 2e - 2", e, "<", 2 * e - 2),
    )
    return NynReport(g, eps, e, beta, secant, pointed, quot, checks)


def _nyn(g: int):
    rep = nyn_feasibility(g)
    e = rep.e
    prof = SystemProfile(
        curve=CurveModel(g),
        sys=SystemType(2, 2 * g + 1, 5, generated=True),
        line_max_degree=g + 1,
        declared=(SubsystemRecord(1, g + 1, 2, True), SubsystemRecord(1, g - e, 2, True)),
        exclusions=(no_net("a line subbundle with three sections would split F; "
                           "the split family has dimension e < 2e - 2"),),
    )
    return {"epsilon": rep.epsilon, "e": e}, prof, list(rep.checks)


_BUILDERS = {"NNN": _nnn, "YYN": _yyn, "YNN": _ynn, "NYN": _nyn,
             "NNY": _nny, "NYY": _nyy, "YYY": _yyy}


def example_profile(name: str, g: Optional[int] = None) -> ExampleReport:
    name = name.upper()
    if name not in _BUILDERS:
        raise ValueError(f"unknown example {name!r}; expected one of {', '.join(EXAMPLES)}")
    if g is None:
        g = DEFAULT_GENERA[name]
    if g < HARD_MIN[name]:
        raise GenusTooSmall(f"{name} needs genus >= {HARD_MIN[name]}, got {g}")
    params, prof, trace = _BUILDERS[name](g)
    flags = []
    if g < STATED_MIN[name]:
        flags.append(f"genus {g} is below the guaranteed bound {STATED_MIN[name]}; "
                     "window found nonempty by direct search")
    computed = triple_verdict(prof)
    if name in ("NYY", "YYY") and computed.linear.basis == "enumeration":
        flags.append("linear verdict decided without the dual span bundle route")
    rep = ExampleReport(name, g, params, prof, _expected(name), computed, trace, flags)
    if rep.feasible and not rep.matches:
        raise VerdictMismatch(
            f"{name} at genus {g}: computed {computed.row()}, expected {' '.join(rep.expected)}")
    return rep


FORBIDDEN_ROW_LABEL = "Impossible by Proposition 3.2"


@dataclass(frozen=True)
class OverviewRow:
    cells: tuple
    label: str
    genus: Optional[int] = None
    error: Optional[str] = None


def overview_table(genus_map: Optional[dict] = None) -> list:
    """The seven example rows followed by the forbidden combination.

    A failing example yields a row with ``error`` set instead of raising.
    """
    genera = dict(DEFAULT_GENERA)
    for key, val in (genus_map or {}).items():
        key = key.upper()
        if key not in genera:
            raise ValueError(f"unknown example {key!r}")
        genera[key] = val
    rows = []
    for name in EXAMPLES:
        g = genera[name]
        try:
            rep = example_profile(name, g)
        except (GenusTooSmall, WindowEmpty, InfeasibleExtension, VerdictMismatch) as exc:
            rows.append(OverviewRow(("-", "-", "-"), name, g, f"{type(exc).__name__}: {exc}"))
            continue
        rows.append(OverviewRow(rep.computed.cells(), name, g))
    rows.append(OverviewRow(("Y", "N", "Y"), FORBIDDEN_ROW_LABEL))
    return rows
