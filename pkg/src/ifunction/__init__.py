"""Numerical evaluation of the I-function.

The I-function extends Fox's H-function by letting every gamma factor in the
Mellin-Barnes kernel carry a positive real exponent.
"""

from .convergence import (
    ConvergenceReport,
    Verdict,
    analyze,
    compute_delta,
    compute_mu,
    compute_nabla,
    compute_nu,
    sigma_strip,
)
from .errors import (
    ContourError,
    DomainError,
    HigherOrderPoleError,
    IFunctionError,
    NoAdmissibleMethodError,
    NonConvergentError,
    PreconditionError,
    SingularityError,
    UnsupportedOrderError,
    ValidationError,
)
from .evaluate import evaluate, evaluate_log
from .gamma_kernel import (
    bernoulli_number,
    bernoulli_polynomial,
    log_gamma,
    log_gamma_asymptotic,
    powered_gamma_log,
    stirling_magnitude,
)
from .integrand import gamma_factors, integrand_at, log_phi
from .params import GammaTriple, IFunctionParams, invert, reduce, rescale, shift, validate
from .quadrature import EvalResult, eval_contour_a
from .series import (
    SeriesExpansion,
    SeriesTerm,
    coincident_pole_series,
    procedure1_leading,
    residue_series_inside,
    residue_series_outside,
    series_eval,
    small_z_order,
)
from .special_cases import (
    SpecialCaseSpec,
    feynman_g,
    from_g_function,
    from_h_bar,
    from_h_function,
    gaussian_free_energy,
    lrc_density,
    lrc_density_term,
)

__version__ = "0.1.0"
