"""Evaluation errors with stable machine-readable signal names.

Every refusal to evaluate raises a subclass of EvaluationError carrying a
`signal` string; callers (the CLI in particular) report the signal rather
than the Python class name.
"""

from __future__ import annotations

__all__ = [
    "EvaluationError",
    "PoleError",
    "DomainError",
    "DivergenceError",
    "QuadratureError",
]


class EvaluationError(Exception):
    """Base class for refusals; `signal` is the stable identifier."""

    signal = "evaluation-error"


class PoleError(EvaluationError):
    """The requested point is a pole of the function being evaluated."""

    signal = "pole"


class DomainError(EvaluationError):
    """A parameter lies outside the function's domain (e.g. x <= 0)."""

    signal = "domain"


class DivergenceError(EvaluationError):
    """A series route was asked for outside its region of convergence."""

    signal = "divergent-region"


class QuadratureError(EvaluationError):
    """Numerical integration failed to reach the requested accuracy."""

    signal = "quadrature-failure"
