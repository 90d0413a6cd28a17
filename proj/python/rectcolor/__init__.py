"""Coloring and weighted packing of axis-parallel rectangles.

Exact quantities (weights, LP values, bounds) are returned as Fractions.
"""

from fractions import Fraction

from ._rectcolor import (
    BudgetExceeded,
    Error,
    Instance,
    InternalBoundExceeded,
    MissingAssignment,
    ParseError,
    PreconditionViolated,
    SolverFailure,
    UnknownId,
    ValidationError,
    clique_number,
    color,
    dumps,
    generate,
    load,
    loads,
    maximal_cliques,
    perturb,
    render_svg,
    save,
    validate_coloring,
    validate_independent,
)
from . import _rectcolor

__all__ = [
    "BudgetExceeded", "Error", "Instance", "InternalBoundExceeded", "MissingAssignment",
    "ParseError", "PreconditionViolated", "SolverFailure", "UnknownId", "ValidationError",
    "approximate_mwis", "clique_number", "color", "dumps", "exact_mwis", "generate", "load",
    "loads", "maximal_cliques", "perturb", "render_svg", "save", "validate_coloring",
    "validate_independent",
]


def approximate_mwis(instance, feas_tol=1e-9, opt_tol=1e-7):
    """LP, derandomized rounding and coloring; the heaviest color class."""
    out = _rectcolor.approximate_mwis(instance, feas_tol, opt_tol)
    for key in ("weight", "w_star", "certified_lower_bound"):
        out[key] = Fraction(out[key])
    return out


def exact_mwis(instance):
    """Branch and bound optimum as (ids, weight); refuses more than 24 rectangles."""
    ids, weight = _rectcolor.exact_mwis(instance)
    return ids, Fraction(weight)
