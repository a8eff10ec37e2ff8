"""Invariant functions and pseudometrics on model domains."""

import json

from ._core import (
    Error,
    demo,
    demo_names,
    phi,
    suite_names,
)
from ._core import contains as _contains
from ._core import evaluate as _evaluate
from ._core import verify as _verify

__all__ = [
    "Error",
    "contains",
    "demo",
    "demo_names",
    "evaluate",
    "phi",
    "suite_names",
    "verify",
]


def _spec_text(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def evaluate(spec, metric, base, point, order=None):
    """Evaluate `metric` at `base` towards `point` (a target or a direction)."""
    return _evaluate(_spec_text(spec), metric, order, list(base), list(point))


def verify(suite="all", seed=0, samples=200):
    """Run property suites and return the parsed JSON report."""
    return json.loads(_verify(suite, seed, samples))


def contains(spec, z):
    """Whether the point `z` lies in the domain."""
    return _contains(_spec_text(spec), list(z))
