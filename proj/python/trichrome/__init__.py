"""Exact coloring invariants, extremal constructions, exhaustive verification."""

from ._core import (
    analyze,
    basic_bipartite,
    certify,
    connected_graphs,
    count_connected,
    extended_graph,
    g_star,
    is_realizable,
    l_graph,
    min_order,
    realize,
    reduced_graph,
    verify_min_order,
)

__all__ = [
    "analyze",
    "basic_bipartite",
    "certify",
    "connected_graphs",
    "count_connected",
    "extended_graph",
    "g_star",
    "is_realizable",
    "l_graph",
    "min_order",
    "realize",
    "reduced_graph",
    "verify_min_order",
]
