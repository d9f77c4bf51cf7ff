"""Cause and effect integrated fractions for Gaussian and Pareto models of the 80/20 rule."""

from .errors import (
    ConvergenceError,
    DegenerateFitError,
    DomainError,
    IndeterminateAlphaError,
    UnboundedAlphaError,
)
from .gaussian import (
    i_cause,
    i_effect,
    mc_check,
    mc_estimate,
    negative_cause_fraction,
    negative_effect_fraction,
    rule_point,
)
from .pareto import (
    alpha_from_point,
    i_cause_pareto,
    i_effect_pareto,
    iterate_point,
    iterated_rules,
    pdf_pareto,
)
from .params import GaussianParams, ParetoParams, RulePoint
from .solver import NamedRule, ratio_from_point, rule_table, threshold_from_cause
from .special import std_normal_isf, std_normal_pdf, std_normal_sf

__version__ = "0.1.0"
