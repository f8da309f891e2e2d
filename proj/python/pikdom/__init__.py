"""Minimum k-domination and total k-domination on proper interval graphs."""

from fractions import Fraction

from ._core import (
    Model,
    PikdomError,
    clique_model,
    dump_digraph,
    first_violation,
    generate_random,
    parse_model,
    read_model,
    representative_check,
    with_random_costs,
)
from ._core import solve as _solve

__all__ = [
    "Model",
    "PikdomError",
    "clique_model",
    "dump_digraph",
    "first_violation",
    "generate_random",
    "is_dominating",
    "parse_model",
    "read_model",
    "representative_check",
    "solve",
    "with_random_costs",
]


def solve(model, k=1, variant="total", engine="fast", weighted=None, e1_rule="head-max"):
    """Returns a dict with feasible, cost (Fraction or None), set and engine."""
    result = _solve(model, k, variant, engine, weighted, e1_rule)
    if result["cost"] is not None:
        result["cost"] = Fraction(result["cost"])
    return result


def is_dominating(model, vertices, k=1, variant="total"):
    return first_violation(model, list(vertices), k, variant) is None
