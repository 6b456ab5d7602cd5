"""Copy-cup: CSS codes from balanced products of group-algebra codes, with
constant-depth CZ/CCZ gate synthesis from cup-product pre-orientations."""

from .groups import (
    FiniteGroup,
    GroupAlgebraElement,
    PreOrientation,
    antipode,
    coprime_collapse,
    enumerate_check_elements,
    enumerate_labelings,
    regular_representation,
)
from .orientation import (
    ConditionSet,
    CupVariant,
    closed_form_check,
    enumerate_preorientations,
    master_eval,
    theorem_condition_check,
    theorem_ids,
    verify_preorientation,
)
from .matching import (
    Configuration,
    EquationSpec,
    ScreenResult,
    build_equations,
    conditions_consistent,
    count_raw_matchings,
    enumerate_configurations,
    screen,
)

from .complexes import (
    CssCode,
    DistanceResult,
    TwoTermComplex,
    build_product_code,
    cohomology_basis,
    distance_exact_by_weight,
    distance_upper_randomized,
)
from .gates import (
    GateCircuit,
    cup_integral_direct,
    logical_action_ccz,
    logical_action_cz,
    preserves_codespace,
    synth_ccz_circuit,
    synth_cz_circuit,
)
from .search import (
    SearchConfig,
    SearchResult,
    canonical_tuple,
    load_manifest,
    manifest_names,
    run_search,
    verify_manifest,
)

__all__ = [
    "CssCode",
    "DistanceResult",
    "TwoTermComplex",
    "build_product_code",
    "cohomology_basis",
    "distance_exact_by_weight",
    "distance_upper_randomized",
    "GateCircuit",
    "cup_integral_direct",
    "logical_action_ccz",
    "logical_action_cz",
    "preserves_codespace",
    "synth_ccz_circuit",
    "synth_cz_circuit",
    "SearchConfig",
    "SearchResult",
    "canonical_tuple",
    "load_manifest",
    "manifest_names",
    "run_search",
    "verify_manifest",
    "FiniteGroup",
    "GroupAlgebraElement",
    "PreOrientation",
    "antipode",
    "coprime_collapse",
    "enumerate_check_elements",
    "enumerate_labelings",
    "regular_representation",
    "ConditionSet",
    "CupVariant",
    "closed_form_check",
    "enumerate_preorientations",
    "master_eval",
    "theorem_condition_check",
    "theorem_ids",
    "verify_preorientation",
    "Configuration",
    "EquationSpec",
    "ScreenResult",
    "build_equations",
    "conditions_consistent",
    "count_raw_matchings",
    "enumerate_configurations",
    "screen",
]

__version__ = "0.1.0"
