"""The colon ideal (IJ : ab) of a product of edge ideals, and its graph.

For edge ideals I = I(H) inside J = I(G) and an edge ab of H, the colon
(IJ : ab) is J plus the products pq with p a G-neighbour of a and q an
H-neighbour of b, plus the symmetric products with the roles of G and H
swapped.  It is generated in degree two, so its polarization is the edge
ideal of a graph containing G; squares x^2 become pendant edges x z_x.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, neighborhood, subgraph_relation, NOT_SUBGRAPH
from .monomial import Monomial, MonomialIdeal, colon, edge_ideal, polarize, product


@dataclass(frozen=True)
class ColonDecomposition:
    edge: tuple[str, str]
    base: MonomialIdeal
    k1: frozenset[Monomial]
    k2: frozenset[Monomial]
    ideal: MonomialIdeal

    @property
    def new_generators(self) -> tuple[Monomial, ...]:
        """Minimal generators of the colon that are not already in J."""
        base = self.base.gen_set()
        return tuple(g for g in self.ideal.gens if g not in base)


def _check_pair(h: Graph, g: Graph, ab: tuple[str, str]) -> tuple[str, str]:
    if subgraph_relation(h, g) == NOT_SUBGRAPH:
        raise GraphError("H is not a subgraph of G")
    a, b = ab
    if not h.has_edge(a, b):
        raise GraphError(f"{a}{b} is not an edge of H")
    return a, b


def colon_by_theorem(h: Graph, g: Graph, ab: tuple[str, str]) -> ColonDecomposition:
    a, b = _check_pair(h, g, ab)
    j = edge_ideal(g)
    hg = h if set(h.vertices) == set(g.vertices) else Graph(g.vertices, h.edges)
    na_g, nb_g = neighborhood(g, [a]), neighborhood(g, [b])
    na_h, nb_h = neighborhood(hg, [a]), neighborhood(hg, [b])
    k1 = frozenset(Monomial.from_vars(p, q) for p in na_g for q in nb_h)
    k2 = frozenset(Monomial.from_vars(r, s) for r in na_h for s in nb_g)
    ideal = j.with_gens(k1 | k2)
    return ColonDecomposition((a, b), j, k1, k2, ideal)


def direct_colon(h: Graph, g: Graph, ab: tuple[str, str]) -> MonomialIdeal:
    """(IJ : ab) computed from the expanded product, for cross-checking."""
    a, b = _check_pair(h, g, ab)
    i = edge_ideal(h, g.vertices)
    j = edge_ideal(g)
    return colon(product(i, j), Monomial.from_vars(a, b))


def fresh_name(x: str) -> str:
    return f"z_{x}"


@dataclass(frozen=True)
class AssociatedGraph:
    graph: Graph
    fresh_vertex_map: dict[str, str]
    decomposition: ColonDecomposition

    def new_edges(self, g: Graph) -> list[tuple[str, str]]:
        return [e for e in self.graph.edges if not g.has_edge(*e)]


def associated_graph(h: Graph, g: Graph, ab: tuple[str, str]) -> AssociatedGraph:
    dec = colon_by_theorem(h, g, ab)
    pol = polarize(dec.ideal)
    fresh = {}
    for (var, k), name in pol.copies:
        if k == 2:
            fresh[var] = fresh_name(var)
        elif k > 2:
            raise AssertionError(f"colon has a cube of {var}; it should be quadratic")
    rename = {name: (fresh_name(var) if k == 2 else var) for (var, k), name in pol.copies}
    edges = []
    for m in pol.target.gens:
        if m.degree != 2:
            raise AssertionError(f"colon generator {m} is not quadratic")
        u, v = (rename[x] for x, _ in m.powers)
        edges.append((u, v))
    taken = set(g.vertices)
    for z in fresh.values():
        if z in taken:
            raise GraphError(f"fresh vertex name {z!r} clashes with a vertex of G")
    verts = g.vertices + tuple(fresh[v] for v in g.vertices if v in fresh)
    p = Graph(verts, tuple(edges))
    if not g.edge_set <= p.edge_set:
        raise AssertionError("G is not a subgraph of the associated graph")
    return AssociatedGraph(p, fresh, dec)
