"""Expected exit times of planar Brownian motion from conformal maps."""

from ._exittime import (
    Error,
    ReportRow,
    catalog_names,
    coefficients,
    default_tolerance,
    describe,
    exit_time,
    green,
    reproduce,
    simulate,
    special,
)

__all__ = [
    "Error",
    "ReportRow",
    "catalog_names",
    "coefficients",
    "default_tolerance",
    "describe",
    "exit_time",
    "green",
    "reproduce",
    "simulate",
    "special",
]
