"""Fault diagnosability toolkit for interconnection networks.

Thin wrapper over the C++ core: topology generators for the hypercube,
(n,k)-star and arrangement families, PMC / MM* distinguishability deciders
with an independent syndrome oracle, brute-force M-connectivity and
M-diagnosability, the closed-form formula catalog, and the witness
constructions behind the upper bounds.
"""

import json as _json

from diaglab._core import (
    DiaglabError,
    FormulaRangeError,
    Graph,
    InvalidInputError,
    NeedsIsolationArgumentError,
    NoCutExistsError,
    NotApplicableError,
    VerificationFailedError,
    arrangement,
    closed_neighborhood,
    common_neighbors,
    components,
    decompose_by_last_symbol,
    default_diagnosability_cap,
    distance,
    evaluate_formula,
    evaluate_formula_interval,
    graph_from_json,
    hypercube,
    hypercube_bit_split,
    is_faulty_set,
    is_m_cut,
    is_vertex_cut,
    nk_star,
    open_neighborhood,
    q4_indistinguishable_pair,
    syndrome_oracle_distinguishable,
)
from diaglab import _core

__version__ = "0.1.0"


def graph_to_json(graph):
    return _json.loads(_core.graph_to_json(graph))


def m_connectivity(graph, kind, g=0, cap=None):
    return _json.loads(_core.m_connectivity_json(graph, kind, g, cap))


def super_connected_check(graph, m, q):
    return _json.loads(_core.super_connected_check_json(graph, m, q))


def pmc_distinguishable(graph, f1, f2):
    return _json.loads(_core.pmc_distinguishable_json(graph, list(f1), list(f2)))


def mmstar_distinguishable(graph, f1, f2):
    return _json.loads(_core.mmstar_distinguishable_json(graph, list(f1), list(f2)))


def brute_force_diagnosability(graph, kind, g, model, cap=None, workers=1):
    if cap is None:
        cap = _core.default_diagnosability_cap(graph, kind, g)
    return _json.loads(
        _core.brute_force_diagnosability_json(graph, kind, g, model, cap, workers)
    )


def hypercube_star_witness(n, g):
    return _json.loads(_core.hypercube_star_witness_json(n, g))


def nk_star_witness(n, k, g):
    return _json.loads(_core.nk_star_witness_json(n, k, g))


def arrangement_witness(n, k, shape):
    return _json.loads(_core.arrangement_witness_json(n, k, shape))


def formula_catalog():
    return _json.loads(_core.formula_catalog_json())


def run_verification(suite="all", seed=42, workers=1):
    return _json.loads(_core.run_verification_json(suite, seed, workers))
