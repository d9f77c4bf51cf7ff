"""Sampled curves and density profiles behind the figures.

A :class:`CurveSeries` holds ``(x, i_cause, i_effect)`` rows where ``x`` is
the normalized Gaussian threshold ``t`` or the Pareto threshold ratio
``A/x_min``. A :class:`ProfileSeries` holds the density ``f(x)`` and the
effect density ``x*f(x)`` on an ``x`` grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import gaussian, pareto
from .errors import DomainError
from .params import GaussianParams, ParetoParams, check_ratio
from .special import std_normal_isf

ALPHA_80_20 = math.log(5.0) / math.log(4.0)

FIG2_RATIOS = (0.25, 0.5, 1.0, 2.0, 4.0)
FIG2_T_RANGE = (-0.5, 4.0)
FIG2_STEPS = 451
COMPARE_CAUSE_MIN = 1e-4


@dataclass(frozen=True)
class CurveSeries:
    label: str
    model: dict
    points: tuple
    x_name: str = "t"
    generation: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.points:
            raise DomainError("series has no points")
        xs = [p[0] for p in self.points]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise DomainError("series abscissae must be strictly increasing")

    @property
    def columns(self) -> tuple[str, ...]:
        return (self.x_name, "i_cause", "i_effect")

    def column(self, name: str) -> list:
        return [p[self.columns.index(name)] for p in self.points]


@dataclass(frozen=True)
class ProfileSeries:
    label: str
    params: GaussianParams
    points: tuple  # (x, f, xf, in_region)
    shade_t: Optional[float] = None
    generation: dict = field(default_factory=dict)

    columns = ("x", "f", "xf", "in_region")

    def __post_init__(self):
        if not self.points:
            raise DomainError("series has no points")

    @property
    def model(self) -> dict:
        return {"family": "gaussian", "mu": self.params.mu, "sigma": self.params.sigma}

    def column(self, name: str) -> list:
        return [p[self.columns.index(name)] for p in self.points]


def _linspace(lo: float, hi: float, steps: int) -> list[float]:
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise DomainError(f"need finite lower < upper, got [{lo!r}, {hi!r}]")
    if int(steps) != steps or steps < 2:
        raise DomainError(f"steps must be an integer >= 2, got {steps!r}")
    h = (hi - lo) / (steps - 1)
    return [lo + i * h for i in range(steps - 1)] + [hi]


def _fmt_ratio(r: float) -> str:
    return f"{r:g}"


def gaussian_curve(
    r: float,
    t_min: float = FIG2_T_RANGE[0],
    t_max: float = FIG2_T_RANGE[1],
    steps: int = FIG2_STEPS,
    label: Optional[str] = None,
) -> CurveSeries:
    """Rule points on a uniform threshold grid for shape ratio ``r``."""
    r = check_ratio(r)
    rows = []
    for t in _linspace(t_min, t_max, steps):
        p = gaussian.rule_point(t, r)
        rows.append((t, p.i_cause, p.i_effect))
    return CurveSeries(
        label=label or f"Gaussian σ/μ={_fmt_ratio(r)}",
        model={"family": "gaussian", "ratio": r},
        points=tuple(rows),
        x_name="t",
        generation={"t_min": t_min, "t_max": t_max, "steps": steps},
    )


def pareto_curve(
    alpha: float,
    ratio_max: float,
    steps: int,
    extra: Sequence[float] = (),
    label: Optional[str] = None,
) -> CurveSeries:
    """Rule points for ``A/x_min`` swept log-uniformly over ``[1, ratio_max]``.

    ``extra`` threshold ratios inside the range are merged into the grid,
    e.g. the exact 80/20 threshold ``5**(1/alpha)``.
    """
    if not (math.isfinite(alpha) and alpha > 1.0):
        raise DomainError(f"pareto_curve needs alpha > 1, got {alpha!r}")
    if not (math.isfinite(ratio_max) and ratio_max > 1.0):
        raise DomainError(f"ratio_max must exceed 1, got {ratio_max!r}")
    grid = [math.exp(u) for u in _linspace(0.0, math.log(ratio_max), steps)]
    grid[0], grid[-1] = 1.0, ratio_max
    for a in extra:
        if not 1.0 <= a <= ratio_max:
            raise DomainError(f"extra ratio {a!r} outside [1, {ratio_max!r}]")
    grid = sorted(set(grid) | {float(a) for a in extra})
    params = ParetoParams(alpha, 1.0)
    rows = []
    for a in grid:
        p = pareto.rule_point_pareto(a, params)
        rows.append((a, p.i_cause, p.i_effect))
    return CurveSeries(
        label=label or f"Pareto α={alpha:.4g}",
        model={"family": "pareto", "alpha": alpha},
        points=tuple(rows),
        x_name="a_ratio",
        generation={"ratio_max": ratio_max, "steps": steps, "extra": list(extra)},
    )


def profile(
    params: GaussianParams,
    x_min: Optional[float] = None,
    x_max: Optional[float] = None,
    steps: int = 401,
    shade_t: Optional[float] = None,
    label: Optional[str] = None,
) -> ProfileSeries:
    """Sample ``f(x)`` and ``x*f(x)``; defaults span ``mu +/- 4 sigma``.

    With ``shade_t`` each row flags whether ``x >= mu + shade_t*sigma``,
    the region counted by the tail fractions.
    """
    if x_min is None:
        x_min = params.mu - 4.0 * params.sigma
    if x_max is None:
        x_max = params.mu + 4.0 * params.sigma
    edge = None if shade_t is None else params.mu + float(shade_t) * params.sigma
    rows = []
    for x in _linspace(x_min, x_max, steps):
        f = gaussian.pdf(x, params)
        rows.append((x, f, x * f, edge is not None and x >= edge))
    return ProfileSeries(
        label=label or f"μ={params.mu:g}, σ={params.sigma:g}",
        params=params,
        points=tuple(rows),
        shade_t=shade_t,
        generation={"x_min": x_min, "x_max": x_max, "steps": steps, "shade_t": shade_t},
    )


def fraction_curves(
    ratios: Sequence[float] = FIG2_RATIOS,
    t_min: float = FIG2_T_RANGE[0],
    t_max: float = FIG2_T_RANGE[1],
    steps: int = FIG2_STEPS,
) -> list[CurveSeries]:
    """Effect-vs-cause curves for several shape ratios (one per ratio)."""
    return [gaussian_curve(r, t_min, t_max, steps) for r in ratios]


def comparison_curves(
    r: float = 2.0,
    alpha: float = ALPHA_80_20,
    cause_min: float = COMPARE_CAUSE_MIN,
    steps: int = 401,
) -> list[CurveSeries]:
    """Gaussian and Pareto curves over cause fractions ``[cause_min, 1]``.

    The Gaussian grid runs between the thresholds holding ``1 - cause_min``
    and ``cause_min`` of the causes. The Pareto grid includes the iterated
    rule thresholds ``5**(n/alpha)`` that fall in range.
    """
    if not 0.0 < cause_min < 1.0:
        raise DomainError(f"cause_min must lie in (0, 1), got {cause_min!r}")
    t_hi = std_normal_isf(cause_min)
    gauss = gaussian_curve(r, -t_hi, t_hi, steps)
    ratio_max = cause_min ** (-1.0 / alpha)
    extra = []
    n = 1
    while 0.2**n >= cause_min:
        extra.append(5.0 ** (n / alpha))
        n += 1
    extra = [a for a in extra if a <= ratio_max]
    return [gauss, pareto_curve(alpha, ratio_max, steps, extra=extra)]
