"""Cause and effect fractions for a Gaussian cause-magnitude distribution.

Causes have magnitude ``x ~ N(mu, sigma)``. For a threshold ``mu + X``
the cause fraction is the probability mass above the threshold and the
effect fraction is the share of the first moment ``mu`` carried by that
mass. Both depend on ``mu`` and ``sigma`` only through ``t = X/sigma`` and
``r = sigma/mu``, so the analytic functions take those two numbers.

Closed forms:

    i_cause(t)     = sf(t)
    i_effect(t, r) = sf(t) + r * pdf(t)

The ``*_quadrature`` functions evaluate the defining integrals directly on
a concrete ``GaussianParams`` and exist to check the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import quadrature
from .errors import DomainError
from .params import GaussianParams, RulePoint, check_ratio
from .special import (
    std_normal_isf_array,
    std_normal_pdf,
    std_normal_sf,
)

MC_CHUNK = 1 << 20


def pdf(x: float, params: GaussianParams) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    return std_normal_pdf((x - params.mu) / params.sigma) / params.sigma


def i_cause(t: float) -> float:
    """Fraction of causes whose magnitude exceeds ``mu + t*sigma``."""
    return std_normal_sf(t)


def i_effect(t: float, r: float) -> float:
    """Share of the total effect contributed by causes above ``mu + t*sigma``.

    Not clamped to [0, 1]. For ``t`` below ``-1/r`` the tail excludes only
    negative contributors and the share exceeds 1.
    """
    r = check_ratio(r)
    return std_normal_sf(t) + r * std_normal_pdf(t)


def rule_point(t: float, r: float) -> RulePoint:
    return RulePoint(i_cause(t), i_effect(t, r))


def negative_cause_fraction(r: float) -> float:
    """Probability mass of causes with negative magnitude, ``P(x < 0)``."""
    return std_normal_sf(1.0 / check_ratio(r))


def negative_effect_fraction(r: float) -> float:
    """Share of the total effect contributed by negative-magnitude causes.

    Equals ``sf(1/r) - r*pdf(1/r)``, which is never positive (Mills-ratio
    bound).
    """
    u = 1.0 / check_ratio(r)
    return min(std_normal_sf(u) - r * std_normal_pdf(u), 0.0)


# -- quadrature cross-checks -------------------------------------------------


def i_cause_quadrature(t: float, params: GaussianParams, tol: float = 1e-13) -> float:
    """Cause fraction by integrating the density from ``mu + t*sigma``."""
    lower = params.mu + t * params.sigma
    cutoff = quadrature.gaussian_cutoff(params.mu, params.sigma)
    if lower >= cutoff:
        return 0.0
    return quadrature.integrate_upper_tail(
        lambda x: pdf(x, params), lower, tol, cutoff=cutoff
    ).value


def i_effect_quadrature(t: float, params: GaussianParams, tol: float = 1e-13) -> float:
    """Effect fraction by integrating ``x*f(x)`` from ``mu + t*sigma``, over ``mu``."""
    lower = params.mu + t * params.sigma
    cutoff = quadrature.gaussian_cutoff(params.mu, params.sigma)
    if lower >= cutoff:
        return 0.0
    # Absolute tolerance scales with mu since the integral is divided by it.
    res = quadrature.integrate_upper_tail(
        lambda x: x * pdf(x, params), lower, tol * params.mu, cutoff=cutoff
    )
    return res.value / params.mu


def negative_effect_quadrature(params: GaussianParams, tol: float = 1e-13) -> float:
    """Integral of ``x*f(x)`` over ``(mu - 12*sigma, 0]``, divided by ``mu``."""
    lower = params.mu - quadrature.GAUSSIAN_CUTOFF_SIGMAS * params.sigma
    if lower >= 0.0:
        return 0.0
    res = quadrature.integrate(lambda x: x * pdf(x, params), lower, 0.0, tol * params.mu)
    return res.value / params.mu


# -- Monte Carlo ---------------------------------------------------------------


@dataclass(frozen=True)
class MonteCarloCheck:
    """Simulated rule point next to the analytic one.

    ``se_cause`` is the binomial standard error at the analytic cause
    fraction; ``se_effect`` is the delta-method standard error of the
    effect ratio estimator.
    """

    ratio: float
    t: float
    n: int
    seed: int
    analytic: RulePoint
    empirical: RulePoint
    se_cause: float
    se_effect: float

    @property
    def delta_cause(self) -> float:
        return self.empirical.i_cause - self.analytic.i_cause

    @property
    def delta_effect(self) -> float:
        return self.empirical.i_effect - self.analytic.i_effect

    def within(self, k: float = 5.0) -> bool:
        return (
            abs(self.delta_cause) <= k * self.se_cause
            and abs(self.delta_effect) <= k * self.se_effect
        )


def _sample_sums(r: float, t: float, n: int, seed: int):
    rng = np.random.Generator(np.random.PCG64(seed))
    above = 0
    sum_a = sum_b = sum_aa = sum_bb = sum_ab = 0.0
    remaining = n
    while remaining:
        m = min(remaining, MC_CHUNK)
        remaining -= m
        # k / 2**53 with k >= 1 keeps u strictly inside (0, 1).
        u = rng.integers(1, 1 << 53, size=m, dtype=np.int64) * 2.0**-53
        z = std_normal_isf_array(u)
        x = 1.0 + r * z
        mask = z > t
        a = np.where(mask, x, 0.0)
        above += int(np.count_nonzero(mask))
        sum_a += float(a.sum())
        sum_b += float(x.sum())
        sum_aa += float(a @ a)
        sum_bb += float(x @ x)
        sum_ab += float(a @ x)
    return above, sum_a, sum_b, sum_aa, sum_bb, sum_ab


def mc_estimate(r: float, t: float, n: int, seed: int = 0) -> RulePoint:
    """Empirical rule point from ``n`` draws of ``N(1, r)``.

    Normal variates come from inverse-transform sampling of 53-bit uniforms
    produced by a PCG64 generator seeded with ``seed``. The result is
    deterministic for a fixed ``(r, t, n, seed)``.
    """
    return mc_check(r, t, n, seed).empirical


def mc_check(r: float, t: float, n: int, seed: int = 0) -> MonteCarloCheck:
    r = check_ratio(r)
    t = float(t)
    if not math.isfinite(t):
        raise DomainError(f"threshold must be finite, got {t!r}")
    if int(n) != n or n < 1:
        raise DomainError(f"sample count must be a positive integer, got {n!r}")
    n = int(n)
    above, sum_a, sum_b, sum_aa, sum_bb, sum_ab = _sample_sums(r, t, n, seed)
    ratio_est = sum_a / sum_b
    resid = max(sum_aa - 2.0 * ratio_est * sum_ab + ratio_est**2 * sum_bb, 0.0)
    analytic = rule_point(t, r)
    p = analytic.i_cause
    return MonteCarloCheck(
        ratio=r,
        t=t,
        n=n,
        seed=seed,
        analytic=analytic,
        empirical=RulePoint(above / n, ratio_est),
        se_cause=math.sqrt(p * (1.0 - p) / n),
        se_effect=math.sqrt(resid) / abs(sum_b),
    )
