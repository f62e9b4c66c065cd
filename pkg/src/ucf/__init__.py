"""Separating union-closed set families: constructions, weight bounds, and
exhaustive small-domain searches."""

from .bounds import (
    AsymptoticBound,
    BoundsReport,
    ExpectedDegreeLower,
    avg_degree_lower,
    avg_degree_lower_at,
    expected_l_degree_lower,
    generalized_binomial,
    knill_lower,
    min_l_weight_upper,
    min_weight_upper,
    reimer_l_lower,
    reimer_lower,
    satisfiable,
    separation_lower,
    subcube_base_l_weight_cap,
    subcube_base_weight_cap,
)
from .constructions import (
    KINDS,
    IntermediateTrace,
    build,
    intermediate,
    plateau,
    powerset,
    staircase,
)
from .errors import (
    FamilyFormatError,
    InvalidInputError,
    InvariantError,
    UnsupportedScaleError,
)
from .family import (
    MAX_DOMAIN,
    ConjectureWitness,
    DegreeProfile,
    SeparationPartition,
    SetFamily,
)
from .io import (
    dump_family,
    family_from_dict,
    family_to_dict,
    format_family_text,
    load_family,
    loads_family,
    parse_family_text,
    save_family,
)
from .search import (
    SearchOutcome,
    SweepRow,
    VerificationReport,
    canonical_family,
    canonical_form,
    enumerate_union_closed,
    enumerate_union_closed_naive,
    iter_union_closed,
    min_weight_search,
    satisfiable_grid,
    sqrt_regime_pair,
    sweep_constructions,
    verify_conjectures,
    verify_enumerator_consistency,
    verify_equality_structure,
    verify_staircase_extremality,
    verify_weight_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticBound",
    "BoundsReport",
    "ConjectureWitness",
    "DegreeProfile",
    "ExpectedDegreeLower",
    "FamilyFormatError",
    "IntermediateTrace",
    "InvalidInputError",
    "InvariantError",
    "KINDS",
    "MAX_DOMAIN",
    "SearchOutcome",
    "SeparationPartition",
    "SetFamily",
    "SweepRow",
    "UnsupportedScaleError",
    "VerificationReport",
    "avg_degree_lower",
    "avg_degree_lower_at",
    "build",
    "canonical_family",
    "canonical_form",
    "dump_family",
    "enumerate_union_closed",
    "enumerate_union_closed_naive",
    "expected_l_degree_lower",
    "family_from_dict",
    "family_to_dict",
    "format_family_text",
    "generalized_binomial",
    "intermediate",
    "iter_union_closed",
    "knill_lower",
    "load_family",
    "loads_family",
    "min_l_weight_upper",
    "min_weight_search",
    "min_weight_upper",
    "parse_family_text",
    "plateau",
    "powerset",
    "reimer_l_lower",
    "reimer_lower",
    "satisfiable",
    "satisfiable_grid",
    "save_family",
    "separation_lower",
    "sqrt_regime_pair",
    "staircase",
    "subcube_base_l_weight_cap",
    "subcube_base_weight_cap",
    "sweep_constructions",
    "verify_conjectures",
    "verify_enumerator_consistency",
    "verify_equality_structure",
    "verify_staircase_extremality",
    "verify_weight_bounds",
    "__version__",
]
