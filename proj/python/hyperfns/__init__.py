from ._hyperfns import (
    HyperfnsError,
    c_function,
    classify,
    e_poles,
    eisenstein,
    eisenstein_regularized,
    fourier_smooth_bump,
    gamma_coeffs,
    hyp2f1,
    log_gamma,
    verify,
)

__all__ = [
    "HyperfnsError",
    "c_function",
    "classify",
    "e_poles",
    "eisenstein",
    "eisenstein_regularized",
    "fourier_smooth_bump",
    "gamma_coeffs",
    "hyp2f1",
    "log_gamma",
    "verify",
]
