"""Numerical laboratory for weighted interpolation inequalities.

Thin python surface over the C++ core: periodic-box grids, Riesz/Bessel
fractional multipliers, Muckenhoupt weight machinery, and the admissibility
checkers and numerical verifiers of the interpolation inequalities.
"""

from ._core import (
    Grid,
    GridFunction,
    TestFunction,
    Weight,
    ap_range,
    apply_multiplier,
    bessel_kernel,
    bessel_kernel_normalization,
    bracket_apq_check,
    build_grid,
    check_bracket,
    check_homogeneous,
    cone_mass_check,
    corpus_functions,
    estimate_apq_constant,
    gamma_fn,
    gamma_modulus_sq,
    lp_norm,
    maximal_function_field,
    mellin_difference,
    multiplier_constants,
    oscillatory_bessel_kernel,
    power_apq_check,
    riesz_constant,
    riesz_potential_direct,
    sample,
    scaling_exponent_gap,
    semigroup_check,
    tau_growth_bound,
    verify_inequality,
    weighted_norm,
)

__all__ = [
    "Grid", "GridFunction", "TestFunction", "Weight",
    "ap_range", "apply_multiplier", "bessel_kernel", "bessel_kernel_normalization",
    "bracket_apq_check", "build_grid", "check_bracket", "check_homogeneous",
    "cone_mass_check", "corpus_functions", "estimate_apq_constant", "gamma_fn",
    "gamma_modulus_sq", "lp_norm", "maximal_function_field", "mellin_difference",
    "multiplier_constants", "oscillatory_bessel_kernel", "power_apq_check",
    "riesz_constant", "riesz_potential_direct", "sample", "scaling_exponent_gap",
    "semigroup_check", "tau_growth_bound", "verify_inequality", "weighted_norm",
]

__version__ = "0.1.0"
