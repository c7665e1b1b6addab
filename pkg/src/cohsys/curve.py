"""Arithmetic facts about a curve that is general in moduli.

Everything here is integer or exact-rational arithmetic: gonality sequence,
Brill-Noether numbers, Clifford indices, section caps for line bundles,
base-point-freeness hypotheses and expected dimensions of secant loci.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    GenusTooSmall,
    InvalidK,
    InvalidRange,
    InvalidRank,
    NonGeneralCurve,
    UnsupportedRank,
)


def ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


@dataclass(frozen=True)
class CurveModel:
    genus: int
    general: bool = True

    def __post_init__(self):
        if self.genus < 2:
            raise GenusTooSmall(f"genus must be at least 2, got {self.genus}")

    def _require_general(self):
        if not self.general:
            raise NonGeneralCurve("oracle formulas hold only for curves general in moduli")


@dataclass(frozen=True)
class CliffordDatum:
    rank: int
    degree: int
    sections: int
    gamma: Fraction


@dataclass(frozen=True)
class SecantDatum:
    e: int
    f: int
    ambient_rank: int
    ambient_sections: int
    expected_dim: int


def _curve(curve) -> CurveModel:
    if isinstance(curve, CurveModel):
        return curve
    return CurveModel(int(curve))


def gonality(curve, k: int) -> int:
    """Return d_k, the least degree of a line bundle with at least k+1 sections."""
    c = _curve(curve)
    c._require_general()
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    g = c.genus
    return ceil_frac(Fraction(k * g, k + 1) + k)


def bn_number(curve, k: int, d: int) -> int:
    """Brill-Noether number g - (k+1)(k - d + g); may be negative."""
    c = _curve(curve)
    if k < 0 or d < 0:
        raise InvalidRange(f"need k >= 0 and d >= 0, got k={k}, d={d}")
    g = c.genus
    return g - (k + 1) * (k - d + g)


def bn_nonempty(curve, k: int, d: int) -> bool:
    c = _curve(curve)
    c._require_general()
    return bn_number(c, k, d) >= 0


def max_line_sections(curve, e: int) -> int:
    """Upper bound for h^0 of a degree-e line bundle on a general curve.

    Blends the gonality cap with the Riemann-Roch floor e - g + 1 so the
    bound stays valid in the non-special range.
    """
    c = _curve(curve)
    c._require_general()
    if e < 0:
        return 0
    k = 0
    while gonality(c, k + 1) <= e:
        k += 1
    return max(k + 1, e - c.genus + 1)


def bpf_general_ok(curve, k: int, ell: int) -> bool:
    """True when a general member of W^k_ell has exactly k+1 sections and no base points."""
    c = _curve(curve)
    c._require_general()
    if c.genus <= 2:
        raise GenusTooSmall("base-point-freeness check needs g > 2")
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    return ell >= gonality(c, k) and k - ell + c.genus >= 0


def clifford_gamma(r: int, d: int, h0: int) -> CliffordDatum:
    if r < 1:
        raise InvalidRank(f"rank must be >= 1, got {r}")
    if h0 < 0:
        raise InvalidRange(f"h0 must be >= 0, got {h0}")
    return CliffordDatum(r, d, h0, Fraction(d - 2 * (h0 - r), r))


def clifford_index(curve, r: int) -> int:
    """gamma'_r for r in {1, 2} on a general curve, both equal to d_1 - 2."""
    c = _curve(curve)
    c._require_general()
    if c.genus < 4:
        raise GenusTooSmall("Clifford indices are used only for g >= 4")
    if r not in (1, 2):
        raise UnsupportedRank(f"Clifford index is only known for ranks 1 and 2, got {r}")
    return gonality(c, 1) - 2


def secant_expected_dim(e: int, f: int, ambient_rank: int, ambient_sections: int) -> SecantDatum:
    if f < 0 or f > e:
        raise InvalidRange(f"need 0 <= f <= e, got e={e}, f={f}")
    if ambient_rank < 1:
        raise InvalidRank(f"ambient rank must be >= 1, got {ambient_rank}")
    if ambient_sections < 0:
        raise InvalidRange("ambient sections must be >= 0")
    dim = ambient_rank * e - f * (ambient_sections - e + f)
    return SecantDatum(e, f, ambient_rank, ambient_sections, dim)
