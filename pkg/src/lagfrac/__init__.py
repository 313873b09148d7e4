"""Variable-order fractional calculus on generalized Laguerre expansions.

Functions on the half line are expanded in generalized Laguerre polynomials;
fractional integrals and Caputo derivatives of the expansion follow from
recurrences on the basis, with the order free to vary with x. A spectral
collocation solver built on the same machinery handles first and second
order initial value problems with an added variable-order fractional term.
"""

from . import exprs
from .fractional import (
    FracBasisValues,
    OrderFunction,
    caputo_exp_exact,
    caputo_of_sin,
    caputo_power_rule,
    caputo_row,
    frac_integral_basis,
    vo_derivative,
    vo_integral,
)
from .laguerre import (
    InterpolantCoeffs,
    LaguerreParams,
    QuadratureRule,
    derivative_basis,
    eval_basis,
    eval_interpolant,
    gauss_rule,
    interpolate,
    norm,
    value_at_zero,
)
from .solver import (
    ErrorReport,
    IvpSpec,
    LinearSystem,
    SolverError,
    assemble,
    collocation_nodes,
    max_abs_error,
    solve,
)
from .special import (
    DomainError,
    gamma_ratio,
    log_gamma,
    reg_lower_incomplete_gamma,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "ErrorReport",
    "FracBasisValues",
    "InterpolantCoeffs",
    "IvpSpec",
    "LaguerreParams",
    "LinearSystem",
    "OrderFunction",
    "QuadratureRule",
    "SolverError",
    "assemble",
    "caputo_exp_exact",
    "caputo_of_sin",
    "caputo_power_rule",
    "caputo_row",
    "collocation_nodes",
    "derivative_basis",
    "eval_basis",
    "eval_interpolant",
    "exprs",
    "frac_integral_basis",
    "gamma_ratio",
    "gauss_rule",
    "interpolate",
    "log_gamma",
    "max_abs_error",
    "norm",
    "reg_lower_incomplete_gamma",
    "solve",
    "value_at_zero",
    "vo_derivative",
    "vo_integral",
    "__version__",
]
