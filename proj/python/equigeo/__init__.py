"""Equigeodesic vectors on compact homogeneous spaces."""

import json

from ._core import (
    ConstructionError,
    Space,
    build_space,
    classify,
    randers_equigeodesic_test,
    riemannian_equigeodesic_test,
    sampled_metric_oracle,
    space_names,
    verify,
)
from ._core import analyze_json


def analyze(name, n=1, n1=1, n2=1, tol=1e-8, seed=0):
    """Analysis report as a dict."""
    return json.loads(analyze_json(name, n=n, n1=n1, n2=n2, tol=tol, seed=seed))


__all__ = [
    "ConstructionError",
    "Space",
    "analyze",
    "analyze_json",
    "build_space",
    "classify",
    "randers_equigeodesic_test",
    "riemannian_equigeodesic_test",
    "sampled_metric_oracle",
    "space_names",
    "verify",
]
