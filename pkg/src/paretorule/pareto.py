"""Type I Pareto tail fractions, Pareto-index fitting and iterated rules.

For a threshold ``A >= x_min`` with ``q = x_min / A``::

    i_cause  = q ** alpha
    i_effect = q ** (alpha - 1)     (alpha > 1; exactly 1 otherwise)

so ``log(i_effect) / log(i_cause) = (alpha - 1) / alpha`` at every
threshold. Raising a rule point to any power ``n`` keeps it on the same
curve, which is where the 64/4, 51.2/0.8, ... family comes from.

For ``alpha <= 1`` the mean diverges, every finite tail carries all of the
effect and ``i_effect`` is reported as 1.
"""

from __future__ import annotations

import math

from . import quadrature
from .errors import DomainError, IndeterminateAlphaError, UnboundedAlphaError
from .params import ParetoParams, RulePoint


def _ratio(A: float, params: ParetoParams) -> float:
    A = float(A)
    if not A >= params.x_min:
        raise DomainError(f"threshold A={A!r} lies below x_min={params.x_min!r}")
    if math.isinf(A):
        raise DomainError("threshold must be finite")
    return params.x_min / A


def pdf_pareto(x: float, params: ParetoParams) -> float:
    q = _ratio(x, params)
    # alpha * x_min**alpha / x**(alpha+1), written to avoid overflow
    return params.alpha / params.x_min * q ** (params.alpha + 1.0)


def i_cause_pareto(A: float, params: ParetoParams) -> float:
    return _ratio(A, params) ** params.alpha


def i_effect_pareto(A: float, params: ParetoParams) -> float:
    q = _ratio(A, params)
    if params.alpha <= 1.0:
        return 1.0
    return q ** (params.alpha - 1.0)


def rule_point_pareto(A: float, params: ParetoParams) -> RulePoint:
    return RulePoint(i_cause_pareto(A, params), i_effect_pareto(A, params))


def threshold_for_cause(i_cause: float, params: ParetoParams) -> float:
    """Threshold ``A`` whose tail holds the cause fraction ``i_cause``."""
    if not 0.0 < i_cause <= 1.0:
        raise DomainError(f"cause fraction must lie in (0, 1], got {i_cause!r}")
    return params.x_min * i_cause ** (-1.0 / params.alpha)


def effect_for_cause(i_cause: float, alpha: float) -> float:
    """Effect fraction on the alpha curve at cause fraction ``i_cause``."""
    params = ParetoParams(alpha)
    return i_effect_pareto(threshold_for_cause(i_cause, params), params)


def _check_point(p: RulePoint) -> None:
    if not 0.0 < p.i_cause < 1.0:
        raise DomainError(f"cause fraction must lie in (0, 1), got {p.i_cause!r}")
    if not 0.0 < p.i_effect <= 1.0:
        raise DomainError(f"effect fraction must lie in (0, 1], got {p.i_effect!r}")
    if p.i_effect < p.i_cause:
        raise DomainError(
            "effect fraction must be at least the cause fraction for a Pareto fit"
        )


def alpha_from_point(p: RulePoint) -> float:
    """Pareto index whose curve passes through ``p``.

    ``alpha = log(i_cause) / (log(i_cause) - log(i_effect))``.

    Raises:
        DomainError: If ``p`` is outside the region a Pareto curve can reach.
        UnboundedAlphaError: If ``i_effect == i_cause`` (no concentration).
        IndeterminateAlphaError: If ``i_effect == 1`` (any alpha <= 1 fits).
    """
    _check_point(p)
    if p.i_effect == 1.0:
        raise IndeterminateAlphaError(
            "effect fraction 1 is reproduced by every alpha <= 1"
        )
    if p.i_effect == p.i_cause:
        raise UnboundedAlphaError(
            "effect fraction equals cause fraction: no concentration, alpha is unbounded"
        )
    log_c = math.log(p.i_cause)
    return log_c / (log_c - math.log(p.i_effect))


def iterate_point(base: RulePoint, n: float) -> RulePoint:
    """``(i_cause**n, i_effect**n)``; ``n`` need not be an integer."""
    _check_point(base)
    if not (math.isfinite(n) and n > 0):
        raise DomainError(f"iteration count must be positive, got {n!r}")
    return RulePoint(base.i_cause**n, base.i_effect**n)


def iterated_rules(base: RulePoint, n_max: int) -> list[RulePoint]:
    """Iterated rule family ``n = 1 .. n_max`` generated by ``base``."""
    if int(n_max) != n_max or n_max < 1:
        raise DomainError(f"n_max must be a positive integer, got {n_max!r}")
    return [iterate_point(base, n) for n in range(1, int(n_max) + 1)]


def i_cause_pareto_quadrature(A: float, params: ParetoParams, tol: float = 1e-12) -> float:
    _ratio(A, params)
    f = lambda x: pdf_pareto(x, params)  # noqa: E731
    num = quadrature.integrate_upper_tail(f, A, tol).value
    den = quadrature.integrate_upper_tail(f, params.x_min, tol).value
    return num / den


def i_effect_pareto_quadrature(A: float, params: ParetoParams, tol: float = 1e-12) -> float:
    """Ratio of first-moment tail integrals. Requires ``alpha > 1``."""
    _ratio(A, params)
    if params.alpha <= 1.0:
        raise DomainError("first moment diverges for alpha <= 1")
    f = lambda x: x * pdf_pareto(x, params)  # noqa: E731
    scale = params.x_min
    num = quadrature.integrate_upper_tail(f, A, tol * scale).value
    den = quadrature.integrate_upper_tail(f, params.x_min, tol * scale).value
    return num / den
