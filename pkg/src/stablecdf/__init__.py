"""Distribution function of strictly stable laws (form C) with certified tails.

Far tails come from a power series whose truncation error is bounded
rigorously; the mid-range from a definite-integral representation.
"""

from .errors import (BracketError, ContractError, DomainError, OracleAccuracyError,
                     OutOfValidatedRange, QuadratureFailure, StableError)
from .evaluator import EvalPolicy, EvalReport, cdf, pdf_tail
from .params import StableParams, validate
from .quadrature import QuadratureSpec, cdf_integral
from .tail_series import CertifiedValue, Method, cdf_series, pdf_tail_series
from .threshold import Convention, ThresholdResult, solve_threshold

__all__ = [
    "BracketError", "CertifiedValue", "ContractError", "Convention", "DomainError",
    "EvalPolicy", "EvalReport", "Method", "OracleAccuracyError", "OutOfValidatedRange",
    "QuadratureFailure", "QuadratureSpec", "StableError", "StableParams", "ThresholdResult",
    "cdf", "cdf_integral", "cdf_series", "pdf_tail", "pdf_tail_series", "solve_threshold",
    "validate",
]
__version__ = "0.1.0"
