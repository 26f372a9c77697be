from .characteristic import (
    chern_character, chern_components, chern_from_character, dual, exponential, inverse, todd_class, twist,
)
from .conic_bundle import (
    RieroResult,
    bogomolov_form,
    chi_structure_sheaf_P,
    chi_structure_sheaf_X,
    conic_bundle_tangent,
    conic_bundle_tangent_chern,
    conic_class,
    euler_characteristic_T_X,
    evaluate,
    integrate_over_P,
    integrate_over_S,
    integrate_over_X,
    projective_bundle_tangent_chern,
    pushforward_to_S,
    relative_tangent_character,
    relative_tangent_chern,
    riero_target,
    threefold_numbers,
    todd_integral_S,
    verify_riero,
)

__all__ = [
    'chern_character', 'chern_components', 'chern_from_character', 'dual', 'exponential', 'inverse',
    'todd_class', 'twist',
    'RieroResult', 'bogomolov_form', 'chi_structure_sheaf_P', 'chi_structure_sheaf_X',
    'conic_bundle_tangent', 'conic_bundle_tangent_chern', 'conic_class', 'euler_characteristic_T_X',
    'evaluate', 'integrate_over_P', 'integrate_over_S', 'integrate_over_X',
    'projective_bundle_tangent_chern', 'pushforward_to_S', 'relative_tangent_character',
    'relative_tangent_chern', 'riero_target', 'threefold_numbers', 'todd_integral_S', 'verify_riero',
]
