from discriminant.services.verifier import (
    MAX_MU,
    admissible_mu_eps,
    classify_two_zero,
    decide_a0,
    discriminant_numbers,
    discriminant_value,
    minimal_elliptic_base,
    mueps_table,
    verify_inductive,
)

__all__ = [
    'MAX_MU',
    'admissible_mu_eps',
    'classify_two_zero',
    'decide_a0',
    'discriminant_numbers',
    'discriminant_value',
    'minimal_elliptic_base',
    'mueps_table',
    'verify_inductive',
]
