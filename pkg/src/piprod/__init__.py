"""Log-space evaluation and verification of the corrected product for pi.

    pi = e^(3/2) * prod_{n>=2} (1 - 1/n^2)^(n^2) * e
"""

from .afunc import A_closed, AFunctionValue, limit_at_one, log_A_series, p_ratio, pi_from_product
from .errors import DomainError, NumericalFailure
from .prodcore import PartialEvaluation, classify, corrected_partial, log_term, tail_correction
from .quad import QuadratureResult, integrate_t_logsin, r_of_y
from .specfun import ZetaCache, log_gamma, zeta, zeta_even_minus_1
from .verify import IdentityCheck, run_all, run_check

__version__ = "0.1.0"

__all__ = [
    "AFunctionValue",
    "A_closed",
    "DomainError",
    "IdentityCheck",
    "NumericalFailure",
    "PartialEvaluation",
    "QuadratureResult",
    "ZetaCache",
    "classify",
    "corrected_partial",
    "integrate_t_logsin",
    "limit_at_one",
    "log_A_series",
    "log_gamma",
    "log_term",
    "p_ratio",
    "pi_from_product",
    "r_of_y",
    "run_all",
    "run_check",
    "tail_correction",
    "zeta",
    "zeta_even_minus_1",
]
