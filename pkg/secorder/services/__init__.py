"""
Service modules for the toolkit.
"""

# Import services for easy access
from secorder.services.family_service import (
    chi, section_product, enumerate_sections, is_section, divide, canonical_form,
    canonical_family, pointwise_included, hall_condition, variant_hall_applies,
    covering_components, common_component, permute_family, random_family,
    all_families, render_section
)
from secorder.services.order_service import (
    least_cover_map, fast_check, naive_check, witness, lift, equiv_check
)
from secorder.services.boolfn_service import (
    is_increasing, is_contractive, is_weight_preserving, is_strictly_increasing,
    is_bijective, is_injective_on_units, permutes_units, equals, identity, constant,
    complement, permutation_action, as_permutation, compose, and_or_cell,
    all_functions, monotone_functions, random_monotone_contractive
)
from secorder.services.refutation_service import (
    counterexample_fn, case_tag, case_conditions, differentiates, refute_arity
)
from secorder.services.bench_service import run_bench, parse_range

__all__ = [
    'chi',
    'section_product',
    'enumerate_sections',
    'is_section',
    'divide',
    'canonical_form',
    'canonical_family',
    'pointwise_included',
    'hall_condition',
    'variant_hall_applies',
    'covering_components',
    'common_component',
    'permute_family',
    'random_family',
    'all_families',
    'render_section',
    'least_cover_map',
    'fast_check',
    'naive_check',
    'witness',
    'lift',
    'equiv_check',
    'is_increasing',
    'is_contractive',
    'is_weight_preserving',
    'is_strictly_increasing',
    'is_bijective',
    'is_injective_on_units',
    'permutes_units',
    'equals',
    'identity',
    'constant',
    'complement',
    'permutation_action',
    'as_permutation',
    'compose',
    'and_or_cell',
    'all_functions',
    'monotone_functions',
    'random_monotone_contractive',
    'counterexample_fn',
    'case_tag',
    'case_conditions',
    'differentiates',
    'refute_arity',
    'run_bench',
    'parse_range'
]
