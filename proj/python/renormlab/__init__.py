"""Python front end for the renormlab core."""

import json

from ._renormlab import (
    DomainError,
    ParseError,
    ResourceError,
    adequate_norm,
    day_norm_sq,
    evaluate,
    generate,
    validate_certificate,
)
from ._renormlab import verify as _verify

__all__ = [
    "DomainError",
    "ParseError",
    "ResourceError",
    "adequate_norm",
    "day_norm_sq",
    "evaluate",
    "generate",
    "validate_certificate",
    "verify",
]


def verify(instance, suites=("all",), seed=1, epsilon="1/4", samples=200):
    """Run suites on an instance (JSON text or dict). Returns (pass, report dict, artifacts dict)."""
    if not isinstance(instance, str):
        instance = json.dumps(instance)
    ok, report, artifacts = _verify(instance, list(suites), seed, str(epsilon), samples)
    return ok, json.loads(report), {name: json.loads(text) for name, text in artifacts}
