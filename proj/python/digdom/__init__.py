"""Exact domination, packing and product invariants of digraphs."""

import json

from ._digdom import (
    Digraph,
    FamilySpecError,
    GraphError,
    ParseError,
    SuiteConfigError,
    brute_force_invariant,
    cartesian_product,
    default_suite_text,
    direct_product,
    domination_number,
    family,
    format_arc_list,
    is_acyclic,
    is_ditree,
    max_out_degree,
    min_in_degree,
    open_packing_number,
    packing_number,
    parse_arc_list,
    total_domination_number,
)
from . import _digdom

__all__ = [
    "Digraph",
    "FamilySpecError",
    "GraphError",
    "ParseError",
    "SuiteConfigError",
    "brute_force_invariant",
    "cartesian_product",
    "check_half_bound",
    "check_vizing",
    "default_suite_text",
    "direct_product",
    "domination_number",
    "family",
    "format_arc_list",
    "invariants",
    "is_acyclic",
    "is_ditree",
    "max_out_degree",
    "min_in_degree",
    "open_packing_number",
    "packing_number",
    "parse_arc_list",
    "run_suite",
    "total_domination_number",
]


def invariants(digraph, id="", timeout=60.0, timing=True):
    """gamma, gamma_t, rho and rho_open with witnesses, as a dict."""
    return json.loads(_digdom._invariants_json(digraph, id, timeout, timing))


def run_suite(config=None, jobs=0, seed=None):
    """Run a suite config (default: the built-in one).

    Returns (records, summary, errors) with records as dicts in task order.
    """
    text = default_suite_text() if config is None else config
    records, summary, errors = _digdom._run_suite(text, jobs, seed)
    return [json.loads(r) for r in records], json.loads(summary), errors


def check_vizing(g, h, timeout=60.0, exact_threshold=64):
    return json.loads(_digdom._check_vizing_json(g, h, timeout, exact_threshold))


def check_half_bound(g, h, timeout=60.0, exact_threshold=64):
    return json.loads(_digdom._check_half_bound_json(g, h, timeout, exact_threshold))
