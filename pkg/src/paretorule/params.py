"""Parameter and result records shared by both models."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


def check_positive(name: str, value: float) -> float:
    value = float(value)
    if not (math.isfinite(value) and value > 0.0):
        raise DomainError(f"{name} must be a finite positive number, got {value!r}")
    return value


def check_ratio(r: float) -> float:
    """Validate a shape ratio sigma/mu."""
    return check_positive("shape ratio sigma/mu", r)


@dataclass(frozen=True)
class GaussianParams:
    """Mean and standard deviation of the cause-magnitude distribution.

    ``mu`` must be positive because the effect fraction divides by the
    total effect ``mu``.
    """

    mu: float
    sigma: float

    def __post_init__(self):
        check_positive("mu", self.mu)
        check_positive("sigma", self.sigma)

    @property
    def ratio(self) -> float:
        return self.sigma / self.mu

    @classmethod
    def from_ratio(cls, r: float, mu: float = 1.0) -> "GaussianParams":
        return cls(mu, check_ratio(r) * mu)


@dataclass(frozen=True)
class ParetoParams:
    """Type I Pareto shape ``alpha`` and lower bound ``x_min``."""

    alpha: float
    x_min: float = 1.0

    def __post_init__(self):
        check_positive("alpha", self.alpha)
        check_positive("x_min", self.x_min)


@dataclass(frozen=True)
class RulePoint:
    """A (cause fraction, effect fraction) pair.

    The effect fraction is never clamped: Gaussian tails can return more
    than the whole effect once negative contributors are left out.
    """

    i_cause: float
    i_effect: float

    def __post_init__(self):
        if not (math.isfinite(self.i_cause) and math.isfinite(self.i_effect)):
            raise DomainError(f"rule point must be finite, got {self!r}")
        if not 0.0 <= self.i_cause <= 1.0:
            raise DomainError(f"cause fraction must lie in [0, 1], got {self.i_cause!r}")

    def __iter__(self):
        yield self.i_cause
        yield self.i_effect

    def percentages(self) -> tuple[float, float]:
        return 100.0 * self.i_cause, 100.0 * self.i_effect
