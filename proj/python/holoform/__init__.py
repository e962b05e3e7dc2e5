from ._core import (
    TruncSeries,
    WeightFun,
    check_conditions,
    disc_quadrature,
    eval_phi_K,
    frac_deriv_coeff,
    besov_norm,
    green,
    make_function,
    mobius,
    mobius_defect,
    run_experiment,
    solve_ode_series,
)

__all__ = [
    "TruncSeries",
    "WeightFun",
    "check_conditions",
    "disc_quadrature",
    "eval_phi_K",
    "frac_deriv_coeff",
    "besov_norm",
    "green",
    "make_function",
    "mobius",
    "mobius_defect",
    "run_experiment",
    "solve_ode_series",
]
