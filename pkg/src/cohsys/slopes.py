"""Exact slope arithmetic for coherent systems.

alpha-slopes, linear slopes, walls (critical values of alpha) and the
lexicographic limit comparisons that decide the small-alpha and large-alpha
regimes without ever fixing a numeric alpha.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Union

from .errors import (
    EmptyCaps,
    InvalidRank,
    NegativeAlpha,
    NoExcessSections,
    NonPositiveDegree,
    NotGenerated,
    NotProper,
)

Rat = Fraction


def parse_rat(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals are refused to keep everything exact."""
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"rationals must be written as p/q, got {text!r}")
    return Fraction(text)


@dataclass(frozen=True)
class SystemType:
    r: int
    d: int
    n: int
    generated: bool = False

    def __post_init__(self):
        if self.r < 1:
            raise InvalidRank(f"rank must be >= 1, got {self.r}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.generated and self.d > 0 and self.n <= self.r:
            raise NoExcessSections(
                f"a generated system of positive degree needs n > r, got {self.triple}"
            )

    @property
    def triple(self):
        return (self.r, self.d, self.n)

    def __str__(self):
        return f"({self.r},{self.d},{self.n})"


@dataclass(frozen=True)
class SubsystemRecord:
    r: int
    d: int
    n: int
    generated: bool = False

    def __post_init__(self):
        if self.r < 1:
            raise InvalidRank(f"subsystem rank must be >= 1, got {self.r}")
        if self.n < 0:
            raise ValueError(f"subsystem sections must be >= 0, got {self.n}")

    @property
    def triple(self):
        return (self.r, self.d, self.n)

    def __str__(self):
        return f"({self.r},{self.d},{self.n})"


Typed = Union[SystemType, SubsystemRecord]


@dataclass(frozen=True)
class Wall:
    alpha: Fraction
    witness: SubsystemRecord
    sys: SystemType

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))


class Comparison(enum.Enum):
    DESTABILIZES = "destabilizes"
    EQUAL = "equal"
    SAFE = "safe"


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def alpha_slope(t: Typed, alpha) -> Fraction:
    alpha = Fraction(alpha)
    if alpha < 0:
        raise NegativeAlpha(f"alpha must be >= 0, got {alpha}")
    return (t.d + alpha * t.n) / t.r


def slope(t: Typed) -> Fraction:
    return Fraction(t.d, t.r)


def linear_slope(t: Typed) -> Fraction:
    if not t.generated:
        raise NotGenerated(f"linear slope is defined only for generated systems, got {t}")
    if t.d <= 0:
        raise NonPositiveDegree(f"linear slope needs positive degree, got {t}")
    if t.n <= t.r:
        raise NoExcessSections(f"linear slope needs more sections than rank, got {t}")
    return Fraction(t.d, t.n - t.r)


def check_proper(sys: SystemType, sub: Typed) -> None:
    if sub.r > sys.r:
        raise NotProper(f"subsystem {sub} has larger rank than {sys}")
    if sub.triple == sys.triple:
        raise NotProper(f"subsystem {sub} has the same type as {sys}")


def wall_alpha(sys: SystemType, sub: Typed) -> Optional[Wall]:
    """The positive alpha where ``sub`` and ``sys`` have equal alpha-slope, if any."""
    check_proper(sys, sub)
    den = sub.n * sys.r - sys.n * sub.r
    if den == 0:
        return None
    alpha = Fraction(sys.d * sub.r - sub.d * sys.r, den)
    if alpha <= 0:
        return None
    witness = sub if isinstance(sub, SubsystemRecord) else SubsystemRecord(*sub.triple)
    return Wall(alpha, witness, sys)


def _lex(a: tuple, b: tuple) -> Comparison:
    if a > b:
        return Comparison.DESTABILIZES
    if a == b:
        return Comparison.EQUAL
    return Comparison.SAFE


def small_key(t: Typed) -> tuple:
    return (Fraction(t.d, t.r), Fraction(t.n, t.r))


def large_key(t: Typed) -> tuple:
    return (Fraction(t.n, t.r), Fraction(t.d, t.r))


def lex_compare_small_alpha(sub: Typed, sys: SystemType) -> Comparison:
    """Whether ``sub`` has larger alpha-slope than ``sys`` for all small alpha > 0."""
    check_proper(sys, sub)
    return _lex(small_key(sub), small_key(sys))


def lex_compare_large_alpha(sub: Typed, sys: SystemType) -> Comparison:
    """Same comparison for all sufficiently large alpha: section density first."""
    check_proper(sys, sub)
    return _lex(large_key(sub), large_key(sys))


def compare_at_alpha(sub: Typed, sys: SystemType, alpha) -> Comparison:
    check_proper(sys, sub)
    return _lex((alpha_slope(sub, alpha),), (alpha_slope(sys, alpha),))


@dataclass(frozen=True)
class Caps:
    """Enumeration bounds for subsystem types.

    ``max_degree`` maps each subsystem rank to its largest admissible degree;
    ``max_sections(rank, degree)`` bounds the sections at that degree and is
    nondecreasing in the degree.
    """

    max_degree: Mapping[int, int]
    max_sections: Callable[[int, int], int]

    def frontier(self, sys: SystemType) -> list[SubsystemRecord]:
        """Pareto-maximal proper (degree, sections) pairs, one or two per rank."""
        out = []
        for rank in sorted(self.max_degree):
            if rank < 1 or rank > sys.r:
                continue
            top = self.max_degree[rank]
            if rank == sys.r:
                top = min(top, sys.d)
            n_top = min(self.max_sections(rank, top), sys.n)
            if n_top < 0:
                continue
            if (rank, top, n_top) == sys.triple:
                if sys.n > 0:
                    out.append(SubsystemRecord(rank, top, sys.n - 1))
                n_below = min(self.max_sections(rank, top - 1), sys.n)
                if n_below >= 0:
                    out.append(SubsystemRecord(rank, top - 1, n_below))
            else:
                out.append(SubsystemRecord(rank, top, n_top))
        return out


def _witness_key(rec: SubsystemRecord) -> tuple:
    return (rec.r, -rec.d, -rec.n)


def critical_alphas(sys: SystemType, caps: Caps) -> list[Wall]:
    """Ascending, duplicate-free walls of the dominance frontier inside ``caps``.

    alpha-slopes are monotone in degree and sections for alpha >= 0, so the
    sign of max(mu_alpha(sub) - mu_alpha(sys)) can only change at a wall of a
    frontier candidate.
    """
    if not caps.max_degree:
        raise EmptyCaps("no subsystem ranks supplied")
    best: dict[Fraction, Wall] = {}
    for rec in caps.frontier(sys):
        w = wall_alpha(sys, rec)
        if w is None:
            continue
        cur = best.get(w.alpha)
        if cur is None or _witness_key(rec) < _witness_key(cur.witness):
            best[w.alpha] = w
    return [best[a] for a in sorted(best)]
