"""Hypergeometric zeta functions zeta_N(s), generalized Bernoulli numbers and
the zeros of e^z - T_{N-1}(z)."""

from .bernoulli import (
    BernoulliTable,
    bernoulli_number,
    bernoulli_via_roots,
    generalized_bernoulli,
    howard_bounds,
)
from .errors import (
    BracketError,
    ConvergenceError,
    DomainError,
    HyperZetaError,
    InsufficientRootsError,
    PoleError,
)
from .numerics import (
    DEFAULT_CONTEXT,
    PrecisionContext,
    complex_gamma,
    digamma_int,
    exp_remainder,
    hurwitz_zeta,
    integrate_semi_infinite,
    pochhammer,
    taylor_poly,
)
from .roots import Root, RootTable, asymptotic_seed, refine_root, root_table, solve_root_n2, solve_root_n3
from .zeta import (
    EvalResult,
    contour_function,
    evaluate,
    limit_at_one,
    mu_coefficient,
    poly_power_coeffs,
    residue_at,
    zeta_integral,
    zeta_left_series,
    zeta_negative_int,
    zeta_right_series,
    zeta_strip,
)

__version__ = "0.1.0"
