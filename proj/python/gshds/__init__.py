"""Exact arithmetic for generalized skew Hadamard difference sets.

Thin wrappers over the C++ core: each helper returns the parsed JSON
payload produced by the extension module.
"""

import json

try:
    from . import _gshds  # packaged layout
except ImportError:  # flat build-tree layout
    import _gshds

__all__ = [
    "group_summary",
    "amatrix",
    "verify_paley",
    "check_gshds",
    "search",
    "l0_instance",
    "power_coefficients",
    "bounds_report",
]


def group_summary(group):
    """Orbit-table summary for a group DSL string like 'p=3;exps=1,1,1'."""
    return json.loads(_gshds.group_summary_json(group))


def amatrix(group):
    """Incidence matrix with its square-identity verdict."""
    return json.loads(_gshds.amatrix_json(group))


def verify_paley(p, m):
    """Certificate for the Paley construction in F_{p^m}."""
    return json.loads(_gshds.verify_paley_json(p, m))


def check_gshds(group, elements):
    """Convolution certificate for a subset given as coordinate lists."""
    return json.loads(_gshds.check_gshds_json(group, elements))


def search(group, budget=1 << 20, seed=0, jobs=1, prune_level=0):
    """Sign-vector search report; exhaustive when 2^r fits the budget."""
    return json.loads(_gshds.search_json(group, budget, seed, jobs, prune_level))


def l0_instance(p, alpha, embedding=0):
    """Lambda-matrix / L0 artifact with its identity verdicts."""
    return json.loads(_gshds.l0_json(p, alpha, embedding))


def power_coefficients(p, m, k=1):
    """Power coefficients of the Paley set in F_{p^m}."""
    return json.loads(_gshds.power_json(p, m, k))


def bounds_report(group):
    """Exponent-bound exclusion report."""
    return json.loads(_gshds.bounds_json(group))
