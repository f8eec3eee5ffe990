"""Exact and numeric eta_D functions for the Hecke groups H(sqrt D)."""

from ._core import (
    Error,
    a_via_convolution,
    bound_envelope,
    char_table,
    check_inversion,
    check_translation,
    check_u_gamma,
    delta5_coefficients,
    eta_coefficients,
    eval_eta,
    is_fundamental,
    kronecker,
    l_minus_one,
    l_prime_zero,
    length_distribution,
    p_nr_table,
    p_table,
    period_polynomials,
    predicted_u,
    theorem21_check,
    verify_table,
    word_matrix,
)

__all__ = [
    "Error",
    "a_via_convolution",
    "bound_envelope",
    "char_table",
    "check_inversion",
    "check_translation",
    "check_u_gamma",
    "delta5_coefficients",
    "eta_coefficients",
    "eval_eta",
    "is_fundamental",
    "kronecker",
    "l_minus_one",
    "l_prime_zero",
    "length_distribution",
    "p_nr_table",
    "p_table",
    "period_polynomials",
    "predicted_u",
    "theorem21_check",
    "verify_table",
    "word_matrix",
]
