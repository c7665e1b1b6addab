"""Exact stability bookkeeping for coherent systems on general curves."""

from .butler import butler_diagram_search, butler_sweep, dsb_check_2d5, maind_conditions
from .constructions import (
    ExtensionDatum,
    build_mf_ext_profile,
    example_profile,
    mf_ext_condition,
    nyn_feasibility,
    overview_table,
)
from .curve import (
    CurveModel,
    bn_nonempty,
    bn_number,
    bpf_general_ok,
    clifford_gamma,
    clifford_index,
    gonality,
    max_line_sections,
    secant_expected_dim,
)
from .errors import CohsysError
from .profile import (
    Exclusion,
    Outcome,
    SectionCap,
    SystemProfile,
    TriVerdict,
    Verdict,
    contains_net,
    enumerate_candidates,
    profile_from_dict,
    profile_to_dict,
    triple_verdict,
    verdict_2d5_large,
    verdict_alpha_large,
    verdict_alpha_small,
    verdict_at_alpha,
    verdict_linear,
)
from .slopes import (
    Caps,
    Comparison,
    SubsystemRecord,
    SystemType,
    alpha_slope,
    critical_alphas,
    lex_compare_large_alpha,
    lex_compare_small_alpha,
    linear_slope,
    wall_alpha,
)

__version__ = "0.1.0"
