"""Construct, verify and certify linear realizations of edge-length multisets."""

from .core import (
    BudgetExhausted, CapExceeded, ConstructionExhausted, Inapplicable,
    LengthMultiset, MultisetParseError, Realization, RealizationError,
    VerificationFailure, VerifyReport, admissible, certify, is_type_cy,
    lengths_of, reduce_cyclic, verify,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted", "CapExceeded", "ConstructionExhausted", "Inapplicable",
    "LengthMultiset", "MultisetParseError", "Realization", "RealizationError",
    "VerificationFailure", "VerifyReport", "admissible", "certify", "is_type_cy",
    "lengths_of", "reduce_cyclic", "verify",
]
