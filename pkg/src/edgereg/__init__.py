"""Regularity of products of edge ideals, checked exactly at desk scale."""

from .betti import BettiTable, betti_hochster, betti_koszul, betti_lcm, betti_table, has_linear_resolution, regularity
from .cochordal import CochordalCover, benzaken_prefix_check, cochord, cochord_cover_number, cochordal_edge_order, is_chordal, is_cochordal
from .colon import associated_graph, colon_by_theorem, direct_colon
from .graph import Graph, GraphError, complement, parse_graph, serialize_graph, standard_graph
from .homology import SimplicialComplex, reduced_homology_ranks
from .invariants import induced_matching_number, matching_number, min_maximal_matching, nu_gh, recognize_class
from .limits import DEFAULT_LIMITS, LimitExceeded, Limits
from .monomial import Monomial, MonomialIdeal, colon, edge_ideal, ideal_stats, minimalize, polarize, product
from .transfer import transfer_cover, verify_cover

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "betti_hochster", "betti_koszul", "betti_lcm", "betti_table", "has_linear_resolution", "regularity",
    "CochordalCover", "benzaken_prefix_check", "cochord", "cochord_cover_number", "cochordal_edge_order",
    "is_chordal", "is_cochordal", "associated_graph", "colon_by_theorem", "direct_colon",
    "Graph", "GraphError", "complement", "parse_graph", "serialize_graph", "standard_graph",
    "SimplicialComplex", "reduced_homology_ranks",
    "induced_matching_number", "matching_number", "min_maximal_matching", "nu_gh", "recognize_class",
    "DEFAULT_LIMITS", "LimitExceeded", "Limits",
    "Monomial", "MonomialIdeal", "colon", "edge_ideal", "ideal_stats", "minimalize", "polarize", "product",
    "transfer_cover", "verify_cover",
]
