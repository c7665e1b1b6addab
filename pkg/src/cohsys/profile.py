"""Evidence profiles and stability verdicts.

A :class:`SystemProfile` describes a concrete coherent system only through
finitely many facts: degree and section caps, subsystems asserted to exist
("declared") and subsystem patterns asserted not to occur ("exclusions").
Verdicts are decided from that evidence alone and are three-valued: when the
evidence does not settle a question the answer is ``Undetermined`` together
with the candidates that would have to be ruled in or out.

Admissibility of a subsystem type is upward closed in the degree and downward
closed in the number of sections, so for the alpha regimes a single Pareto
point per rank is enough, and for linear stability only the least admissible
degree at each (rank, sections) matters.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Optional

from . import curve as oracle
from .curve import CurveModel
from .errors import (
    ContradictionError,
    ForbiddenRow,
    NetStatusUnknown,
    NonPositiveAlpha,
    NonPositiveDegree,
    NotGenerated,
    ProfileInvalid,
    SchemaError,
    TooFewSections,
    WrongType,
)
from .slopes import (
    Caps,
    Comparison,
    SubsystemRecord,
    SystemType,
    alpha_slope,
    compare_at_alpha,
    large_key,
    lex_compare_large_alpha,
    lex_compare_small_alpha,
    linear_slope,
    small_key,
)

RULE_GONALITY = "gonality"
RULE_RANK2 = "rank2_no_pencil"
RULE_OVERRIDE = "fullrank_override"
DEFAULT_RULES = (RULE_GONALITY, RULE_RANK2, RULE_OVERRIDE)


@dataclass(frozen=True)
class Exclusion:
    """No subsystem of ``rank`` with at least ``min_sections`` sections,
    or, when ``min_degree`` is set, none of degree below ``min_degree``."""

    rank: int
    min_sections: int
    min_degree: Optional[int] = None
    reason: Optional[str] = None

    def forbids(self, r: int, d: int, n: int) -> bool:
        if r != self.rank or n < self.min_sections:
            return False
        return self.min_degree is None or d < self.min_degree


def no_net(reason: str = "no_net") -> Exclusion:
    return Exclusion(1, 3, None, reason)


@dataclass(frozen=True)
class SectionCap:
    """Subsystems of this rank and degree at most ``degree`` have at most
    ``max_sections`` sections."""

    rank: int
    degree: int
    max_sections: int


class Outcome(enum.Enum):
    STABLE = "Stable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    UNSTABLE = "Unstable"
    UNDETERMINED = "Undetermined"


class Regime(enum.Enum):
    SMALL = "SmallAlpha"
    LARGE = "LargeAlpha"
    AT_ALPHA = "AtAlpha"
    LINEAR = "Linear"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    regime: Regime
    witness: Optional[SubsystemRecord] = None
    alpha: Optional[Fraction] = None
    unresolved: tuple = ()
    basis: str = "enumeration"

    def __post_init__(self):
        needs = self.outcome in (Outcome.UNSTABLE, Outcome.STRICTLY_SEMISTABLE)
        if needs and self.witness is None:
            raise ValueError(f"{self.outcome.value} verdict needs a witness")
        if self.outcome is Outcome.STABLE and self.witness is not None:
            raise ValueError("Stable verdict carries no witness")

    @property
    def determined(self) -> bool:
        return self.outcome is not Outcome.UNDETERMINED

    @property
    def stable(self) -> bool:
        return self.outcome is Outcome.STABLE


@dataclass(frozen=True)
class TriVerdict:
    alpha_small: Verdict
    alpha_large: Verdict
    linear: Verdict

    def cells(self) -> tuple:
        return tuple(_yn(v) for v in (self.alpha_small, self.alpha_large, self.linear))

    def row(self) -> str:
        return " ".join(self.cells())


def _yn(v: Verdict) -> str:
    if v.outcome is Outcome.STABLE:
        return "Y"
    if v.outcome is Outcome.UNDETERMINED:
        return "?"
    return "N"


class NetStatus(enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class NetResult:
    status: NetStatus
    witness: Optional[SubsystemRecord] = None


@dataclass(frozen=True)
class SystemProfile:
    curve: CurveModel
    sys: SystemType
    line_max_degree: Optional[int] = None
    section_caps: tuple = ()
    declared: tuple = ()
    declared_generated_fullrank: tuple = ()
    exclusions: tuple = ()
    lower_degree_rules: tuple = DEFAULT_RULES

    def __post_init__(self):
        for name in ("section_caps", "declared", "declared_generated_fullrank",
                     "exclusions", "lower_degree_rules"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        self.curve._require_general()
        unknown = set(self.lower_degree_rules) - set(DEFAULT_RULES)
        if unknown:
            raise ProfileInvalid(f"unknown lower-degree rules: {sorted(unknown)}")
        for cap in self.section_caps:
            if cap.rank < 1 or cap.max_sections < 0:
                raise ProfileInvalid(f"bad section cap {cap}")
        for ex in self.exclusions:
            if ex.rank < 1 or ex.min_sections < 0:
                raise ProfileInvalid(f"bad exclusion {ex}")
        for rec in self.declared:
            self._check_declared(rec)
        for rec in self.declared_generated_fullrank:
            if rec.r != self.sys.r or not rec.generated:
                raise ProfileInvalid(
                    f"declared full-rank record {rec} must be generated of rank {self.sys.r}")
            self._check_declared(rec)

    def _check_declared(self, rec: SubsystemRecord) -> None:
        ok, why = self.admissible(rec.r, rec.d, rec.n)
        if not ok:
            raise ContradictionError(f"declared subsystem {rec} contradicts the profile: {why}")

    # -- admissibility --------------------------------------------------

    @property
    def genus(self) -> int:
        return self.curve.genus

    def section_limit(self) -> int:
        # W = V would generate all of E, so proper subsystems of a generated
        # system have fewer sections than the whole.
        return self.sys.n - 1 if self.sys.generated else self.sys.n

    def max_degree(self, rank: int) -> Optional[int]:
        if rank == self.sys.r:
            return self.sys.d
        bounds = []
        if rank == 1 and self.line_max_degree is not None:
            bounds.append(self.line_max_degree)
        if self.sys.generated:
            # quotients of a generated sheaf are generated, hence of degree >= 0
            bounds.append(self.sys.d)
        return min(bounds) if bounds else None

    def sections_cap(self, rank: int, degree: int) -> int:
        """Largest admissible section count at (rank, degree), ignoring the degree cap."""
        cap = self.section_limit()
        if rank == 1:
            cap = min(cap, oracle.max_line_sections(self.curve, degree))
        for sc in self.section_caps:
            if sc.rank == rank and degree <= sc.degree:
                cap = min(cap, sc.max_sections)
        for ex in self.exclusions:
            if ex.rank == rank and (ex.min_degree is None or degree < ex.min_degree):
                cap = min(cap, ex.min_sections - 1)
        return cap

    def admissible(self, r: int, d: int, n: int) -> tuple:
        if r < 1 or r > self.sys.r:
            return False, f"rank {r} outside 1..{self.sys.r}"
        if (r, d, n) == self.sys.triple:
            return False, "not a proper subsystem"
        if n < 0:
            return False, "negative section count"
        top = self.max_degree(r)
        if top is not None and d > top:
            return False, f"degree {d} exceeds the rank-{r} degree cap {top}"
        if n > self.section_limit():
            return False, f"{n} sections exceed the limit {self.section_limit()}"
        if r == 1 and n > oracle.max_line_sections(self.curve, d):
            return False, (f"a degree-{d} line bundle on a general genus-{self.genus} curve "
                           f"has at most {oracle.max_line_sections(self.curve, d)} sections")
        for sc in self.section_caps:
            if sc.rank == r and d <= sc.degree and n > sc.max_sections:
                return False, f"section cap {sc.rank},{sc.degree},{sc.max_sections}"
        for ex in self.exclusions:
            if ex.forbids(r, d, n):
                return False, f"exclusion {ex.reason or ex}"
        return True, ""

    def min_degree(self, rank: int, sections: int, floor: Optional[int] = None) -> Optional[int]:
        """Least admissible degree for (rank, sections) at or above ``floor``; None if none."""
        if sections > self.section_limit() or rank < 1 or rank > self.sys.r:
            return None
        lo = floor
        if rank == 1 and sections >= 1:
            need = 0 if sections == 1 else oracle.gonality(self.curve, sections - 1)
            lo = need if lo is None else max(lo, need)
        for sc in self.section_caps:
            if sc.rank == rank and sc.max_sections < sections:
                lo = sc.degree + 1 if lo is None else max(lo, sc.degree + 1)
        for ex in self.exclusions:
            if ex.rank == rank and sections >= ex.min_sections:
                if ex.min_degree is None:
                    return None
                lo = ex.min_degree if lo is None else max(lo, ex.min_degree)
        top = self.max_degree(rank)
        if lo is None:
            return top
        if top is not None and lo > top:
            return None
        if (rank, lo, sections) == self.sys.triple:
            return None
        return lo

    def caps(self) -> Caps:
        bounds = {}
        for rank in range(1, self.sys.r + 1):
            top = self.max_degree(rank)
            if top is None:
                raise ProfileInvalid(
                    f"rank-{rank} subsystems have no degree bound; give lineMaxDegree "
                    "or mark the system generated")
            bounds[rank] = top
        return Caps(bounds, self.sections_cap)

    def all_declared(self) -> tuple:
        return self.declared + self.declared_generated_fullrank

    def known_to_exist(self, rec: SubsystemRecord) -> Optional[SubsystemRecord]:
        """A declared record implying ``rec`` exists (same rank and degree, at least as many sections)."""
        for dec in self.all_declared():
            if dec.r == rec.r and dec.d == rec.d and dec.n >= rec.n:
                return dec if dec.n == rec.n else SubsystemRecord(rec.r, rec.d, rec.n)
        return None


# -- candidate enumeration --------------------------------------------------


def _canonical(rec: SubsystemRecord) -> tuple:
    return (rec.r, -rec.d, -rec.n)


def _dedupe(records) -> list:
    seen = {}
    for rec in records:
        prev = seen.get(rec.triple)
        if prev is None or (rec.generated and not prev.generated):
            seen[rec.triple] = rec
    return sorted(seen.values(), key=_canonical)


def _alpha_candidates(p: SystemProfile) -> list:
    return _dedupe(list(p.caps().frontier(p.sys)) + list(p.all_declared()))


def _linear_region(p: SystemProfile) -> list:
    """Least-degree generated candidates per (rank, sections, branch).

    Returns (record, label) pairs; declared generated records are added by the caller.
    """
    sys = p.sys
    rules = set(p.lower_degree_rules)
    out = []
    for rank in range(1, sys.r + 1):
        for n_f in range(rank + 1, p.section_limit() + 1):
            floor = 1
            if RULE_GONALITY in rules:
                # r-1 general sections of a generated sheaf span a trivial
                # subbundle; the determinant keeps n_f - r + 1 sections
                floor = max(floor, oracle.gonality(p.curve, n_f - rank))
            base = p.min_degree(rank, n_f, floor)
            if base is None:
                continue
            if rank == 2 and RULE_RANK2 in rules:
                d2 = oracle.gonality(p.curve, 2)
                lo = p.min_degree(rank, n_f, max(base, d2))
                if lo is not None:
                    out.append((SubsystemRecord(rank, lo, n_f, True), "rank 2 without sub-pencil"))
                overrides = [rec for rec in p.declared_generated_fullrank if rec.n == n_f]
                if RULE_OVERRIDE in rules and rank == sys.r and overrides:
                    continue
                pencil = p.min_degree(1, 2)
                if pencil is None:
                    continue
                lo = p.min_degree(rank, n_f, max(base, pencil))
                if lo is not None:
                    out.append((SubsystemRecord(rank, lo, n_f, True), "rank 2 with sub-pencil"))
            else:
                out.append((SubsystemRecord(rank, base, n_f, True), f"rank {rank}"))
    return out


def enumerate_candidates(p: SystemProfile, regime: Regime) -> list:
    if regime is Regime.LINEAR:
        recs = [rec for rec, _ in _linear_region(p)]
        recs += [rec for rec in p.all_declared() if _linear_ok(rec)]
        return _dedupe(recs)
    return _alpha_candidates(p)


def _linear_ok(rec: SubsystemRecord) -> bool:
    return rec.generated and rec.d > 0 and rec.n > rec.r


# -- verdicts -----------------------------------------------------------------

_ORDER = {Comparison.SAFE: 0, Comparison.EQUAL: 1, Comparison.DESTABILIZES: 2}


def _decide(p: SystemProfile, regime: Regime, compare: Callable, key: Callable,
            alpha: Optional[Fraction] = None) -> Verdict:
    cands = _alpha_candidates(p)
    results = [(compare(c), c) for c in cands]

    def pick(items):
        return sorted(items, key=lambda c: (tuple(-k for k in key(c)), _canonical(c)))[0]

    destab = [p.known_to_exist(c) for o, c in results if o is Comparison.DESTABILIZES]
    destab = [c for c in destab if c is not None]
    if destab:
        return Verdict(Outcome.UNSTABLE, regime, pick(destab), alpha)
    best = max((_ORDER[o] for o, _ in results), default=0)
    if best == 0:
        return Verdict(Outcome.STABLE, regime, None, alpha)
    if best == 1:
        equal = [p.known_to_exist(c) for o, c in results if o is Comparison.EQUAL]
        equal = [c for c in equal if c is not None]
        if equal:
            return Verdict(Outcome.STRICTLY_SEMISTABLE, regime, pick(equal), alpha)
        open_ = tuple(c for o, c in results if o is Comparison.EQUAL)
    else:
        open_ = tuple(c for o, c in results if o is Comparison.DESTABILIZES)
    return Verdict(Outcome.UNDETERMINED, regime, None, alpha, open_)


def verdict_alpha_small(p: SystemProfile) -> Verdict:
    return _decide(p, Regime.SMALL, lambda c: lex_compare_small_alpha(c, p.sys), small_key)


def verdict_alpha_large(p: SystemProfile) -> Verdict:
    return _decide(p, Regime.LARGE, lambda c: lex_compare_large_alpha(c, p.sys), large_key)


def verdict_at_alpha(p: SystemProfile, alpha) -> Verdict:
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise NonPositiveAlpha(f"alpha must be > 0, got {alpha}")
    return _decide(p, Regime.AT_ALPHA, lambda c: compare_at_alpha(c, p.sys, alpha),
                   lambda c: (alpha_slope(c, alpha),), alpha)


def verdict_linear(p: SystemProfile) -> Verdict:
    sys = p.sys
    if not sys.generated:
        raise NotGenerated("linear stability is defined for generated systems only")
    if sys.d <= 0:
        raise NonPositiveDegree("linear stability needs positive degree")
    target = linear_slope(sys)
    declared = [rec for rec in p.all_declared() if _linear_ok(rec)]

    def pick(items):
        return sorted(items, key=lambda c: (linear_slope(c), _canonical(c)))[0]

    below = [rec for rec in declared if linear_slope(rec) < target]
    if below:
        return Verdict(Outcome.UNSTABLE, Regime.LINEAR, pick(below))
    region = [rec for rec, _ in _linear_region(p)] + declared
    low = [rec for rec in region if linear_slope(rec) < target]
    if low:
        return Verdict(Outcome.UNDETERMINED, Regime.LINEAR, unresolved=tuple(_dedupe(low)))
    tie = [rec for rec in region if linear_slope(rec) == target]
    if not tie:
        return Verdict(Outcome.STABLE, Regime.LINEAR)
    tie_declared = [rec for rec in declared if linear_slope(rec) == target]
    if tie_declared:
        return Verdict(Outcome.STRICTLY_SEMISTABLE, Regime.LINEAR, pick(tie_declared))
    return Verdict(Outcome.UNDETERMINED, Regime.LINEAR, unresolved=tuple(_dedupe(tie)))


def contains_net(p: SystemProfile) -> NetResult:
    if p.sys.n < 3:
        raise TooFewSections(f"nets need n >= 3, got n={p.sys.n}")
    nets = [rec for rec in p.all_declared() if rec.r == 1 and rec.n >= 3]
    if nets:
        return NetResult(NetStatus.YES, sorted(nets, key=_canonical)[0])
    top = p.max_degree(1)
    if top is None:
        cap = p.section_limit()
        for ex in p.exclusions:
            if ex.rank == 1 and ex.min_degree is None:
                cap = min(cap, ex.min_sections - 1)
    else:
        cap = p.sections_cap(1, top)
    if cap < 3:
        return NetResult(NetStatus.NO)
    return NetResult(NetStatus.UNKNOWN)


def verdict_2d5_large(p: SystemProfile) -> Verdict:
    if (p.sys.r, p.sys.n) != (2, 5):
        raise WrongType(f"net criterion applies to type (2,d,5), got {p.sys}")
    net = contains_net(p)
    if net.status is NetStatus.YES:
        return Verdict(Outcome.UNSTABLE, Regime.LARGE, net.witness, basis="net criterion")
    if net.status is NetStatus.NO:
        return Verdict(Outcome.STABLE, Regime.LARGE, basis="net criterion")
    return Verdict(Outcome.UNDETERMINED, Regime.LARGE,
                   unresolved=("rank-1 subsystem with 3 sections",), basis="net criterion")


def triple_verdict(p: SystemProfile) -> TriVerdict:
    if not p.sys.generated:
        raise NotGenerated("triple verdicts need a generated system")
    if p.sys.d <= 0:
        raise NonPositiveDegree("triple verdicts need positive degree")
    small = verdict_alpha_small(p)
    large = verdict_alpha_large(p)
    linear = verdict_linear(p)
    if linear.outcome is Outcome.UNDETERMINED and (p.sys.r, p.sys.n) == (2, 5):
        from .butler import DsbConclusion, dsb_check_2d5

        try:
            report = dsb_check_2d5(p.genus, p)
        except NetStatusUnknown:
            report = None
        if report is not None and report.conclusion is DsbConclusion.STABLE:
            linear = Verdict(Outcome.STABLE, Regime.LINEAR, basis="dual span bundle stable")
    tri = TriVerdict(small, large, linear)
    if small.stable and linear.stable and large.determined and not large.stable:
        raise ForbiddenRow(
            f"profile {p.sys} is small-alpha and linearly stable but not large-alpha stable")
    return tri


# -- JSON schema ----------------------------------------------------------------

_TOP_KEYS = {"genus", "system", "lineMaxDegree", "sectionCaps", "declared",
             "declaredGeneratedFullRank", "exclusions", "lowerDegreeRules"}


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{where}: expected an integer, got {value!r}")
    return value


def _bool(value, where: str) -> bool:
    if not isinstance(value, bool):
        raise SchemaError(f"{where}: expected true or false, got {value!r}")
    return value


def _keys(obj, allowed: set, required: set, where: str) -> None:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    extra = set(obj) - allowed
    if extra:
        raise SchemaError(f"{where}: unknown key(s) {sorted(extra)}")
    missing = required - set(obj)
    if missing:
        raise SchemaError(f"{where}: missing key(s) {sorted(missing)}")


def _record(obj, where: str, generated_default: bool = False) -> SubsystemRecord:
    _keys(obj, {"r", "d", "n", "generated"}, {"r", "d", "n"}, where)
    gen = _bool(obj["generated"], where + ".generated") if "generated" in obj else generated_default
    try:
        return SubsystemRecord(_int(obj["r"], where + ".r"), _int(obj["d"], where + ".d"),
                               _int(obj["n"], where + ".n"), gen)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def _list(obj, key: str) -> list:
    value = obj.get(key, [])
    if not isinstance(value, list):
        raise SchemaError(f"{key}: expected a list")
    return value


def profile_from_dict(obj) -> SystemProfile:
    _keys(obj, _TOP_KEYS, {"genus", "system"}, "profile")
    genus = _int(obj["genus"], "genus")
    s = obj["system"]
    _keys(s, {"r", "d", "n", "generated"}, {"r", "d", "n"}, "system")
    try:
        sys = SystemType(_int(s["r"], "system.r"), _int(s["d"], "system.d"),
                         _int(s["n"], "system.n"),
                         _bool(s.get("generated", False), "system.generated"))
        curve = CurveModel(genus)
    except SchemaError:
        raise
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    lmd = obj.get("lineMaxDegree")
    if lmd is not None:
        lmd = _int(lmd, "lineMaxDegree")
    caps = []
    for i, item in enumerate(_list(obj, "sectionCaps")):
        if not isinstance(item, list) or len(item) != 3:
            raise SchemaError(f"sectionCaps[{i}]: expected [rF, dF, maxN]")
        caps.append(SectionCap(*(_int(v, f"sectionCaps[{i}]") for v in item)))
    declared = [_record(o, f"declared[{i}]") for i, o in enumerate(_list(obj, "declared"))]
    full = [_record(o, f"declaredGeneratedFullRank[{i}]", True)
            for i, o in enumerate(_list(obj, "declaredGeneratedFullRank"))]
    exclusions = []
    for i, item in enumerate(_list(obj, "exclusions")):
        where = f"exclusions[{i}]"
        if item == "no_net":
            exclusions.append(no_net())
            continue
        if isinstance(item, str):
            raise SchemaError(f"{where}: unknown exclusion {item!r}")
        _keys(item, {"rank", "minSections", "minDegree", "reason"}, {"rank", "minSections"}, where)
        reason = item.get("reason")
        if reason is not None and not isinstance(reason, str):
            raise SchemaError(f"{where}.reason: expected a string")
        min_deg = item.get("minDegree")
        exclusions.append(Exclusion(
            _int(item["rank"], where + ".rank"), _int(item["minSections"], where + ".minSections"),
            None if min_deg is None else _int(min_deg, where + ".minDegree"), reason))
    rules = obj.get("lowerDegreeRules", list(DEFAULT_RULES))
    if not isinstance(rules, list) or not all(isinstance(x, str) for x in rules):
        raise SchemaError("lowerDegreeRules: expected a list of names")
    return SystemProfile(curve, sys, lmd, tuple(caps), tuple(declared), tuple(full),
                         tuple(exclusions), tuple(rules))


def _record_dict(rec: SubsystemRecord, with_generated: bool = True) -> dict:
    out = {"r": rec.r, "d": rec.d, "n": rec.n}
    if with_generated:
        out["generated"] = rec.generated
    return out


def profile_to_dict(p: SystemProfile) -> dict:
    out = {
        "genus": p.genus,
        "system": {"r": p.sys.r, "d": p.sys.d, "n": p.sys.n, "generated": p.sys.generated},
    }
    if p.line_max_degree is not None:
        out["lineMaxDegree"] = p.line_max_degree
    out["sectionCaps"] = [[c.rank, c.degree, c.max_sections] for c in p.section_caps]
    out["declared"] = [_record_dict(r) for r in p.declared]
    out["declaredGeneratedFullRank"] = [_record_dict(r, False) for r in p.declared_generated_fullrank]
    exclusions = []
    for ex in p.exclusions:
        item = {"rank": ex.rank, "minSections": ex.min_sections}
        if ex.min_degree is not None:
            item["minDegree"] = ex.min_degree
        if ex.reason is not None:
            item["reason"] = ex.reason
        exclusions.append(item)
    out["exclusions"] = exclusions
    if tuple(p.lower_degree_rules) != DEFAULT_RULES:
        out["lowerDegreeRules"] = list(p.lower_degree_rules)
    return out


def with_declared(p: SystemProfile, *records: SubsystemRecord) -> SystemProfile:
    return replace(p, declared=p.declared + tuple(records))


def with_exclusions(p: SystemProfile, *exclusions: Exclusion) -> SystemProfile:
    return replace(p, exclusions=p.exclusions + tuple(exclusions))
