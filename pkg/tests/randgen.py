"""Seeded random profiles for the counted acceptance runs.

Mirrors strategies.profiles without hypothesis so counts are exact and
reproducible.
"""

import random

from cohsys.curve import CurveModel
from cohsys.profile import Exclusion, SectionCap, SystemProfile, no_net
from cohsys.slopes import SubsystemRecord, SystemType


def random_profile(rng: random.Random, sys_type=None, ranks=(1, 2, 3), generated=None):
    g = rng.randint(4, 30)
    if sys_type is None:
        r = rng.choice(ranks)
        gen = rng.random() < 0.5 if generated is None else generated
        gen = gen or r == 3
        d = rng.randint(1 if gen else -10, 40)
        n_lo = r + 1 if gen else 0
        n = rng.randint(n_lo, max(n_lo, 10))
    else:
        r, d, n = sys_type
        gen = rng.random() < 0.5 if generated is None else generated
    sys = SystemType(r, d, n, gen)
    lmd = rng.randint(-2, 40) if not gen or rng.random() < 0.5 else None
    caps = [SectionCap(rng.randint(1, r), rng.randint(-2, 40), rng.randint(0, n))
            for _ in range(rng.randint(0, 3))]
    excl = []
    for _ in range(rng.randint(0, 2)):
        if rng.random() < 0.5:
            excl.append(no_net())
        else:
            md = None if rng.random() < 0.3 else rng.randint(-2, 40)
            excl.append(Exclusion(rng.randint(1, r), rng.randint(0, n + 1), md))
    base = SystemProfile(CurveModel(g), sys, lmd, tuple(caps), (), (), tuple(excl))
    declared = []
    for _ in range(rng.randint(0, 3)):
        rf = rng.randint(1, r)
        top = base.max_degree(rf)
        df = rng.randint(min(-3, top), top)
        nf = rng.randint(0, n)
        if base.admissible(rf, df, nf)[0]:
            declared.append(SubsystemRecord(rf, df, nf, rng.random() < 0.5))
    fullrank = []
    if gen and d >= 1 and rng.random() < 0.5:
        df = rng.randint(1, d)
        nf = rng.randint(r + 1, max(r + 1, n - 1))
        if base.admissible(r, df, nf)[0]:
            fullrank.append(SubsystemRecord(r, df, nf, True))
    return SystemProfile(CurveModel(g), sys, lmd, tuple(caps), tuple(declared),
                         tuple(fullrank), tuple(excl))
