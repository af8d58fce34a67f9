"""Exact lattice scattering models on the discrete half-space Z x N."""

from ._core import (
    Catalog,
    NoStabilization,
    NotIsometryError,
    ParamError,
    RuleDefinitionError,
    UnknownOperatorError,
    verify,
)

__all__ = [
    "Catalog",
    "NoStabilization",
    "NotIsometryError",
    "ParamError",
    "RuleDefinitionError",
    "UnknownOperatorError",
    "verify",
]
