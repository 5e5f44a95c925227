import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from edgereg.cochordal import (
    CochordalCover,
    benzaken_prefix_check,
    cochord,
    cochord_cover_number,
    cochordal_edge_order,
    cover_from_classes,
    is_chordal,
    is_cochordal,
    maximal_cochordal_classes,
)
from edgereg.graph import Graph, GraphError, complement, complete, cycle, edgeless, two_k2
from edgereg.invariants import induced_matching_number, matching_number, min_maximal_matching
from edgereg.limits import LimitExceeded, Limits
from edgereg.transfer import verify_cover

from conftest import graphs, to_nx


def _nx_cochordal(g, edges):
    return nx.is_chordal(nx.complement(to_nx(Graph(g.vertices, tuple(edges)))))


def brute_cochord(g):
    """Minimum number of co-chordal edge sets covering E(g), by exhaustive enumeration."""
    if not g.edges:
        return 0
    good = []
    for r in range(1, g.m + 1):
        for sub in itertools.combinations(g.edges, r):
            if _nx_cochordal(g, sub):
                good.append(frozenset(sub))
    maximal = [s for s in good if not any(s < t for t in good)]
    for k in range(1, g.m + 1):
        for combo in itertools.combinations(maximal, k):
            if frozenset().union(*combo) == frozenset(g.edges):
                return k
    raise AssertionError


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_chordality_matches_networkx_with_certificates(g):
    res = is_chordal(g)
    assert bool(res) == nx.is_chordal(to_nx(g))
    if res:
        assert sorted(res.peo) == sorted(g.vertices)
    else:
        hole = res.hole
        assert len(hole) >= 4
        sub = to_nx(g).subgraph(hole)
        assert nx.is_connected(sub) and all(d == 2 for _, d in sub.degree())


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_cochord_matches_exhaustive_search(g):
    if g.m > 9:
        return
    assert cochord(g) == brute_cochord(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_certificate_verifies_and_chain_holds(g):
    k, cover = cochord_cover_number(g)
    assert cover.size == k
    assert verify_cover(g, cover).ok
    assert induced_matching_number(g) <= k <= min_maximal_matching(g) <= matching_number(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7, min_edges=1))
def test_cochordal_equivalences(g):
    order = cochordal_edge_order(g)
    flag = is_cochordal(g)
    assert (order is not None) == flag == (cochord(g) <= 1)
    if order is not None:
        assert benzaken_prefix_check(g, order).ok


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=7))
def test_search_methods_agree(g):
    a = sorted(maximal_cochordal_classes(g, method="triangulation"))
    b = sorted(maximal_cochordal_classes(g, method="growth"))
    assert a == b


def test_prefix_check_examples():
    e = Graph(("a", "b"), (("a", "b"),))
    assert benzaken_prefix_check(e, [("a", "b")]).ok
    g = two_k2()
    res = benzaken_prefix_check(g, [("a", "b"), ("c", "d")])
    assert not res.ok and res.r == 2
    c4 = cycle(4)
    assert benzaken_prefix_check(c4, [("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x1")]).ok


def test_prefix_check_wants_a_permutation():
    with pytest.raises(GraphError):
        benzaken_prefix_check(cycle(4), [("x1", "x2")])
    with pytest.raises(GraphError):
        benzaken_prefix_check(cycle(4), [("x1", "x3"), ("x1", "x2"), ("x2", "x3"), ("x3", "x4")])


def test_edge_orders_for_small_patterns():
    assert cochordal_edge_order(complete(3)) is not None
    assert cochordal_edge_order(two_k2()) is None
    assert cochordal_edge_order(cycle(4)) is not None


@pytest.mark.parametrize("n,expected", [(3, 1), (4, 1), (5, 2), (6, 2), (7, 3), (8, 3), (9, 3), (10, 4), (16, 6)])
def test_cycle_cover_numbers(n, expected):
    assert cochord(cycle(n)) == expected


def test_c8_listed_classes_are_a_cover():
    listed = cover_from_classes([
        [("x1", "x2"), ("x2", "x3"), ("x3", "x4")],
        [("x4", "x5"), ("x5", "x6"), ("x6", "x7")],
        [("x7", "x8"), ("x8", "x1")],
    ])
    assert verify_cover(cycle(8), listed).ok


def test_edgeless_and_complete():
    assert cochord_cover_number(edgeless(3)) == (0, CochordalCover(()))
    assert cochord(complete(5)) == 1
    assert is_cochordal(complement(cycle(5))) is False


def test_cover_json_round_trip():
    _, cover = cochord_cover_number(cycle(6))
    assert CochordalCover.from_json(cover.to_json()) == cover
    with pytest.raises(GraphError):
        CochordalCover.from_json('{"classes": [[["a"]]]}')


def test_cover_search_refuses_beyond_limits():
    with pytest.raises(LimitExceeded):
        cochord(cycle(16), Limits(cochord_vertices=4, cochord_edges=8))
