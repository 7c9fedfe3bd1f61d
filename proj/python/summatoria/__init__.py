"""Summatory arithmetic functions, empirical statistics and limit-law checks."""

import json

from ._core import (
    ArgumentError,
    BoundError,
    CapacityError,
    DegenerateSampleError,
    NumericError,
    RangeError,
    UnsupportedArityError,
    empirical_moments,
    geometric_checkpoints,
    independence,
    ks_distance,
    liouville,
    liouville_trace,
    mertens_trace,
    mobius,
    realize,
    run_cli,
    schedule_mean,
    schedule_summatory,
    sieve_block,
    summatory_trace,
    weighted_mobius_trace,
)
from ._core import _classify_remainders, _full_verdict


def classify_remainders(checkpoints, remainders):
    fit = json.loads(_classify_remainders(list(checkpoints), list(remainders)))
    return {k: fit[k] for k in ("class", "slope", "stderr", "notes")}


def full_verdict(function, N, checkpoints=None):
    if checkpoints is None:
        checkpoints = geometric_checkpoints(10, 2.0, N)
    return json.loads(_full_verdict(function, N, list(checkpoints)))


__all__ = [
    "ArgumentError",
    "BoundError",
    "CapacityError",
    "DegenerateSampleError",
    "NumericError",
    "RangeError",
    "UnsupportedArityError",
    "classify_remainders",
    "empirical_moments",
    "full_verdict",
    "geometric_checkpoints",
    "independence",
    "ks_distance",
    "liouville",
    "liouville_trace",
    "mertens_trace",
    "mobius",
    "realize",
    "run_cli",
    "schedule_mean",
    "schedule_summatory",
    "sieve_block",
    "summatory_trace",
    "weighted_mobius_trace",
]
