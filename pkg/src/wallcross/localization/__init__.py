"""Torus localization on moduli of stable maps to P^1 (genus <= 1)."""
from .engine import (
    Contribution,
    Insertion,
    edge_factor,
    edge_weight_enumeration,
    graph_contribution,
    gw_invariant,
    localization_trunc,
    omega_degree_zero,
    omega_from_localization,
    vertex_factor,
)
from .graphs import DecoratedGraph, Edge, GraphAut, ScopeError, Vertex, canonicalize, enumerate_graphs
from .intersection import IntegralValue, dimension_matches, dvv, psi_hodge_integral

__all__ = [
    "Contribution", "Insertion", "edge_factor", "edge_weight_enumeration", "graph_contribution",
    "gw_invariant", "localization_trunc", "omega_degree_zero", "omega_from_localization",
    "vertex_factor", "DecoratedGraph", "Edge", "GraphAut", "ScopeError", "Vertex", "canonicalize",
    "enumerate_graphs", "IntegralValue", "dimension_matches", "dvv", "psi_hodge_integral",
]
