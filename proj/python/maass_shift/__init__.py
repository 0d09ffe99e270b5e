"""Shifted convolution sums of level one cusp forms via harmonic Maass forms."""

import json

from ._core import (
    ConvergenceError,
    DomainError,
    IllConditionedError,
    LinearFit,
    PrecisionError,
    Report,
    ResultCell,
    ResultRow,
    RunConfig,
    Session,
    agrees_to_digits,
    loglog_fit,
    projection_integral,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "IllConditionedError",
    "LinearFit",
    "PrecisionError",
    "Report",
    "ResultCell",
    "ResultRow",
    "RunConfig",
    "Session",
    "agrees_to_digits",
    "dhat",
    "loglog_fit",
    "projection_integral",
    "report_dict",
    "tau",
]


def report_dict(report):
    """The JSON rendering of a report as Python objects."""
    return json.loads(report.to_json())


def _config(**options):
    cfg = RunConfig()
    for key, value in options.items():
        if not hasattr(cfg, key):
            raise TypeError(f"unknown option {key!r}")
        setattr(cfg, key, value)
    cfg.validate()
    return cfg


def tau(max_n):
    """Ramanujan tau(n) for n = 1..max_n as Python ints."""
    rows = Session(_config()).tau(max_n).rows
    return [int(r.cells[0].value) for r in rows]


def dhat(h, route="mock", **options):
    """Dhat(Delta, Delta, h; 11) as a float with its error estimate.

    route is "mock", "projection" or "direct"; options set RunConfig fields.
    """
    if route not in ("mock", "projection", "direct"):
        raise ValueError(f"unknown route {route!r}")
    cell = Session(_config(**options)).dhat([h], route).rows[0].cells[0]
    return float(cell.value), cell.error
