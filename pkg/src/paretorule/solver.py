"""Inverse problems for the Gaussian model and named rule tables."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DomainError
from .gaussian import rule_point
from .params import RulePoint, check_ratio
from .special import std_normal_isf, std_normal_pdf


def threshold_from_cause(target: float) -> float:
    """Normalized threshold ``t`` whose upper tail holds ``target`` of the causes."""
    target = float(target)
    if not 0.0 < target < 1.0:
        raise DomainError(f"cause fraction must lie in (0, 1), got {target!r}")
    return std_normal_isf(target)


def ratio_from_point(p: RulePoint) -> float:
    """Shape ratio sigma/mu whose curve passes exactly through ``p``.

    The threshold is fixed by the cause fraction alone, after which the
    effect fraction is linear in the ratio:
    ``r = (i_effect - i_cause) / pdf(t)``.
    """
    if not 0.0 < p.i_cause < 1.0:
        raise DomainError(f"cause fraction must lie in (0, 1), got {p.i_cause!r}")
    if not p.i_effect > p.i_cause:
        raise DomainError("effect fraction must exceed cause fraction")
    t = threshold_from_cause(p.i_cause)
    return (p.i_effect - p.i_cause) / std_normal_pdf(t)


def round_to_5(fraction: float) -> int:
    """Percentage rounded to the nearest multiple of 5, halves going up."""
    return 5 * math.floor(20.0 * fraction + 0.5)


@dataclass(frozen=True)
class NamedRule:
    name: str
    t: float
    point: RulePoint
    rounded: tuple[int, int]  # (effect %, cause %), as in the name


def name_rule(t: float, point: RulePoint) -> NamedRule:
    effect, cause = round_to_5(point.i_effect), round_to_5(point.i_cause)
    return NamedRule(f"{effect}/{cause}", t, point, (effect, cause))


def rule_table(
    r: float,
    targets: Optional[Sequence[float]] = None,
    thresholds: Optional[Sequence[float]] = None,
) -> list[NamedRule]:
    """Named rules on the curve for shape ratio ``r``.

    Give either cause-fraction ``targets`` or normalized ``thresholds``.
    Names read effect share first, e.g. ``"45/10"``.
    """
    r = check_ratio(r)
    if (targets is None) == (thresholds is None):
        raise DomainError("give exactly one of targets or thresholds")
    if targets is not None:
        thresholds = [threshold_from_cause(c) for c in targets]
    return [name_rule(float(t), rule_point(t, r)) for t in thresholds]
