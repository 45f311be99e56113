# SPDX-License-Identifier: Apache-2.0
"""alpha-eta-F and alpha-kappa-F composite fading distributions."""

from ._core import (
    AefDist,
    AefEnvelope,
    AefParams,
    AkfDist,
    AkfEnvelope,
    AkfParams,
    ConvergenceError,
    DomainError,
    Format,
    GainPair,
    SeriesControl,
    SeriesResult,
    UnsupportedError,
    asymptotic_outage,
    convert_format,
    gains,
    ks_distance,
    omega,
    outage,
    sample_aef_envelope,
    sample_akf_envelope,
    specfun,
    upsilon,
)

__all__ = [
    "AefDist",
    "AefEnvelope",
    "AefParams",
    "AkfDist",
    "AkfEnvelope",
    "AkfParams",
    "ConvergenceError",
    "DomainError",
    "Format",
    "GainPair",
    "SeriesControl",
    "SeriesResult",
    "UnsupportedError",
    "asymptotic_outage",
    "convert_format",
    "gains",
    "ks_distance",
    "omega",
    "outage",
    "sample_aef_envelope",
    "sample_akf_envelope",
    "specfun",
    "upsilon",
]
