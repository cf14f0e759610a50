"""Result container and error types shared by every module."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Eval:
    """A numeric result with an absolute error estimate and a work counter.

    ``work`` counts the dominant unit of effort of the producing routine
    (quadrature cells, series terms, refinement levels).  ``info`` carries
    optional diagnostics and never takes part in comparisons.
    """

    value: float
    err_est: float = 0.0
    work: int = 0
    info: dict[str, Any] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not self.err_est >= 0.0:
            raise ValueError(f"err_est must be non-negative, got {self.err_est!r}")
        if self.work < 0:
            raise ValueError(f"work must be non-negative, got {self.work!r}")

    def __float__(self) -> float:
        return float(self.value)

    def shifted(self, offset: float = 0.0, scale: float = 1.0, err: float = 0.0) -> "Eval":
        """Return ``scale*value + offset`` with the error scaled accordingly."""
        return Eval(scale * self.value + offset, abs(scale) * self.err_est + err,
                    self.work, dict(self.info))


def combine(terms, coeffs=None, const: float = 0.0, const_err: float = 0.0) -> Eval:
    """Linear combination ``const + sum(c*e.value)`` with summed errors and work."""
    terms = list(terms)
    if coeffs is None:
        coeffs = [1.0] * len(terms)
    value = const
    err = const_err
    work = 0
    for c, e in zip(coeffs, terms):
        value += c * e.value
        err += abs(c) * e.err_est
        work += e.work
    return Eval(value, err, work)


class DomainError(ValueError):
    """Arguments outside the region where an operation is defined."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class EvaluationError(ArithmeticError):
    """An integrand or summand produced a non-finite value."""

    def __init__(self, message: str, abscissa: float | None = None):
        super().__init__(message if abscissa is None else f"{message} at x={abscissa!r}")
        self.abscissa = abscissa


class TruncationError(ArithmeticError):
    """A series or quadrature did not reach its tolerance within its budget.

    ``partial`` holds the best value obtained before giving up.
    """

    def __init__(self, message: str, partial: Eval | None = None):
        super().__init__(message)
        self.partial = partial


class PrecisionError(ArithmeticError):
    """Double precision cannot deliver a meaningful result for this input."""
