"""Transfer a co-chordal cover of G to the graph associated with (IJ : ab).

Each ordered class of the cover is rewritten edge by edge.  After an edge
{a, a_mu} the block [a_mu, b_1] < ... < [a_mu, b_beta'] is inserted, after
an edge {b, b_mu} the block [b_mu, a_1] < ... < [b_mu, a_alpha'], and after
{a, b} the edges {a, a_i} (i <= alpha'), {b, b_j} (j <= beta') and all
[a_p, b_q] (p <= alpha', q <= beta') in lexicographic order.  Here [x, y]
is {x, y} for distinct vertices and the pendant {x, z_x} otherwise.  The
neighbour lists put H-neighbours first.  Later duplicates inside a class
are dropped.  The number of classes never changes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cochordal import CochordalCover, benzaken_prefix_check, cochord_cover_number
from .colon import AssociatedGraph, associated_graph, fresh_name
from .graph import Edge, Graph, GraphError, sorted_neighbors, spanning
from .limits import DEFAULT_LIMITS, Limits


class TransferError(ValueError):
    pass


@dataclass(frozen=True)
class CoverCheck:
    ok: bool
    missing_edge: Edge | None = None
    class_index: int | None = None
    r: int | None = None
    pair: tuple[Edge, Edge] | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "cover verified"
        if self.missing_edge is not None:
            return f"edge {self.missing_edge} is not covered"
        return f"class {self.class_index}: prefix {self.r} contains the induced 2K2 {self.pair}"


def verify_cover(g: Graph, cover: CochordalCover) -> CoverCheck:
    """Union of classes must be E(g) and every ordered class must pass the prefix check."""
    covered: set[frozenset[str]] = set()
    for c in cover.classes:
        for u, v in c:
            if not g.has_edge(u, v):
                raise GraphError(f"cover uses {u}{v}, which is not an edge of the graph")
            covered.add(frozenset((u, v)))
    for e in g.edges:
        if frozenset(e) not in covered:
            return CoverCheck(False, missing_edge=e)
    for ci, c in enumerate(cover.classes):
        keys = [frozenset(e) for e in c]
        if len(set(keys)) != len(keys):
            raise GraphError(f"class {ci} lists an edge twice")
        sub = Graph(g.vertices, tuple(c))
        res = benzaken_prefix_check(sub, c)
        if not res.ok:
            return CoverCheck(False, class_index=ci, r=res.r, pair=res.pair)
    return CoverCheck(True)


@dataclass(frozen=True)
class NeighbourLists:
    a_list: tuple[str, ...]
    alpha_h: int
    b_list: tuple[str, ...]
    beta_h: int


def neighbour_lists(h: Graph, g: Graph, a: str, b: str) -> NeighbourLists:
    hg = spanning(h, g)

    def ordered(x: str, other: str) -> tuple[tuple[str, ...], int]:
        in_h = [v for v in sorted_neighbors(hg, x) if v != other]
        rest = [v for v in sorted_neighbors(g, x) if v != other and v not in in_h]
        return tuple(in_h + rest), len(in_h)

    a_list, alpha_h = ordered(a, b)
    b_list, beta_h = ordered(b, a)
    return NeighbourLists(a_list, alpha_h, b_list, beta_h)


def transfer_cover(
    cover: CochordalCover,
    h: Graph,
    g: Graph,
    ab: tuple[str, str],
    p: AssociatedGraph | None = None,
) -> CochordalCover:
    check = verify_cover(g, cover)
    if not check.ok:
        raise TransferError(f"input cover does not verify on G: {check.describe()}")
    a, b = ab
    if p is None:
        p = associated_graph(h, g, ab)
    nl = neighbour_lists(h, g, a, b)
    a_all, b_all = nl.a_list, nl.b_list
    a_h, b_h = a_all[: nl.alpha_h], b_all[: nl.beta_h]
    pg = p.graph

    def bracket(x: str, y: str) -> Edge:
        if x != y:
            return pg.edge_key(x, y)
        z = p.fresh_vertex_map.get(x, fresh_name(x))
        if not pg.has_edge(x, z):
            raise AssertionError(f"pendant {x}{z} missing from the associated graph")
        return pg.edge_key(x, z)

    a_pos = {v: i for i, v in enumerate(a_all)}
    b_pos = {v: i for i, v in enumerate(b_all)}
    out_classes = []
    for cls in cover.classes:
        seq: list[Edge] = []
        for u, v in cls:
            seq.append(pg.edge_key(u, v))
            pair = {u, v}
            if pair == {a, b}:
                seq.extend(pg.edge_key(a, x) for x in a_h)
                seq.extend(pg.edge_key(b, y) for y in b_h)
                seq.extend(bracket(x, y) for x in a_h for y in b_h)
                continue
            if a in pair:
                mu = (pair - {a}).pop()
                if mu in a_pos:
                    seq.extend(bracket(mu, y) for y in b_h)
            if b in pair:
                mu = (pair - {b}).pop()
                if mu in b_pos:
                    seq.extend(bracket(mu, x) for x in a_h)
        seen: set[frozenset[str]] = set()
        kept = []
        for e in seq:
            key = frozenset(e)
            if key in seen:
                continue
            if not pg.has_edge(*e):
                raise AssertionError(f"transferred edge {e} is not an edge of the associated graph")
            seen.add(key)
            kept.append(e)
        out_classes.append(tuple(kept))
    return CochordalCover(tuple(out_classes))


@dataclass(frozen=True)
class TransferResult:
    g_cover: CochordalCover
    p: AssociatedGraph
    p_cover: CochordalCover
    check: CoverCheck


def run_transfer(
    h: Graph,
    g: Graph,
    ab: tuple[str, str],
    cover: CochordalCover | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> TransferResult:
    """Transfer ``cover`` (a minimum cover of G when omitted) and verify the result."""
    if cover is None:
        _, cover = cochord_cover_number(g, limits)
    p = associated_graph(h, g, ab)
    new = transfer_cover(cover, h, g, ab, p)
    return TransferResult(cover, p, new, verify_cover(p.graph, new))


def edge_tuple(e: Sequence[str]) -> Edge:
    return (e[0], e[1])
