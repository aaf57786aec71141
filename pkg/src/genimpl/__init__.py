"""Generated fuzzy connectives, residual implications, and a numeric
property-verification engine with witness-carrying reports."""

from .bijections import Bijection, identity_bijection, power_bijection
from .classes import (
    ClassProbeResult,
    build_intersection_member,
    check_self_dual_phi,
    conjugate_lk_probe,
    r_probe,
    sn_probe,
)
from .connectives import (
    BinaryConnective,
    Negation,
    archimedean_witness,
    basic,
    basic_tnorm,
    dual_of,
    generated_tconorm,
    generated_tnorm,
    n_ary_power,
    quasi_arithmetic_mean,
    standard_negation,
    yager_negation,
    yager_tnorm,
)
from .generators import (
    Generator,
    eval_generator,
    neg_log,
    piecewise_f,
    power_gp,
    pseudo_inverse,
    verify_generator,
    yager_f,
)
from .implications import (
    ImplicationCandidate,
    ig_implication,
    ign_implication,
    lukasiewicz_implication,
    mean_residual,
    natural_negation,
    phi_conjugate,
    piecewise_f_implication,
    residual_numeric,
    sn_implication,
    yager_residual,
)
from .properties import (
    check_implication_axioms,
    check_property,
    check_tnorm_axioms,
    compare_surfaces,
    find_associativity_counterexample,
    probe_continuity,
)
from .reports import PropertyReport, SampleSpec

__all__ = [name for name in dir() if not name.startswith("_")]
