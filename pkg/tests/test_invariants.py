import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from edgereg.graph import (
    Graph,
    GraphError,
    butterfly_pair,
    claw,
    complement,
    complete,
    cricket,
    cycle,
    diamond,
    disjoint_edges,
    path,
)
from edgereg.invariants import (
    contains_induced,
    has_dominating_induced_matching,
    induced_matching_number,
    is_bipartite,
    is_gap_free,
    is_induced_matching,
    is_matching,
    is_maximal_matching,
    is_unmixed,
    is_weakly_chordal,
    matching_number,
    max_induced_matching,
    min_maximal_matching,
    nu_gh,
    recognize_class,
)
from edgereg.limits import LimitExceeded, Limits

from conftest import graph_pairs, graphs, to_nx


# brute-force oracles over all edge subsets

def _matchings(g):
    for r in range(g.m + 1):
        for sub in itertools.combinations(g.edges, r):
            verts = [v for e in sub for v in e]
            if len(verts) == len(set(verts)):
                yield sub


def _induced(g, sub):
    verts = {v for e in sub for v in e}
    touched = [e for e in g.edges if set(e) <= verts]
    return len(touched) == len(sub)


def brute_mat(g):
    return max(len(s) for s in _matchings(g))


def brute_nu(g, pool=None):
    best = 0
    for s in _matchings(g):
        if pool is not None and not all(frozenset(e) in pool for e in s):
            continue
        if _induced(g, s):
            best = max(best, len(s))
    return best


def brute_mm(g):
    out = None
    for s in _matchings(g):
        used = {v for e in s for v in e}
        if all(u in used or v in used for u, v in g.edges):
            out = len(s) if out is None else min(out, len(s))
    return out


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_matching_numbers_match_brute_force(g):
    assert matching_number(g) == brute_mat(g)
    assert induced_matching_number(g) == brute_nu(g)
    assert min_maximal_matching(g) == brute_mm(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_witness_is_an_induced_matching(g):
    w = max_induced_matching(g)
    assert len(w) == induced_matching_number(g)
    assert is_matching(g, w) and is_induced_matching(g, w)


@settings(max_examples=60, deadline=None)
@given(graph_pairs(max_n=7))
def test_nu_gh_properties(pair):
    h, g = pair
    k = nu_gh(h, g)
    assert k == brute_nu(g, pool=h.edge_set)
    assert k <= min(induced_matching_number(h), induced_matching_number(g))


@given(graphs(max_n=7))
def test_nu_gh_of_a_graph_with_itself(g):
    assert nu_gh(g, g) == induced_matching_number(g)


def test_nu_gh_rejects_non_subgraphs():
    with pytest.raises(GraphError):
        nu_gh(complete(4), cycle(4))


def test_c8_example_values():
    g = cycle(8)
    h = Graph(("x1", "x2", "x3", "x4"), (("x1", "x2"), ("x3", "x4")))
    assert induced_matching_number(g) == 2
    assert induced_matching_number(h) == 2
    assert nu_gh(h, g) == 1
    assert matching_number(g) == 4
    edges = [("x1", "x2"), ("x3", "x4"), ("x5", "x6"), ("x7", "x8")]
    assert is_matching(g, edges) and not is_induced_matching(g, edges)
    assert is_induced_matching(g, [("x1", "x2"), ("x4", "x5")])


def test_butterfly_values():
    h, g = butterfly_pair()
    assert matching_number(g) == 2
    assert nu_gh(h, g) == 2


def test_maximal_matching_predicate():
    g = path(4)
    assert is_maximal_matching(g, [("x2", "x3")])
    assert not is_maximal_matching(g, [("x1", "x2")])
    assert not is_maximal_matching(cycle(6), [("x1", "x2")])


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_gap_free_iff_complement_has_no_induced_c4(g):
    assert is_gap_free(g) == (not contains_induced(complement(g), cycle(4)))


def _brute_unmixed(g):
    n = len(g.vertices)
    covers = []
    for r in range(n + 1):
        for c in itertools.combinations(g.vertices, r):
            cs = set(c)
            if all(u in cs or v in cs for u, v in g.edges):
                if not any(set(d) <= cs for d in covers):
                    covers.append(c)
    return len({len(c) for c in covers}) <= 1


def _brute_dim(g):
    return any(_induced(g, s) and is_maximal_matching(g, s) for s in _matchings(g))


def _brute_weakly_chordal(g):
    for x in (to_nx(g), to_nx(complement(g))):
        for k in range(5, len(g.vertices) + 1):
            for sub in itertools.combinations(x.nodes, k):
                s = x.subgraph(sub)
                if all(d == 2 for _, d in s.degree()) and nx.is_connected(s):
                    return False
    return True


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_recognizers_against_enumeration(g):
    assert is_bipartite(g) == nx.is_bipartite(to_nx(g))
    assert is_unmixed(g) == _brute_unmixed(g)
    assert has_dominating_induced_matching(g) == _brute_dim(g)
    assert is_weakly_chordal(g) == _brute_weakly_chordal(g)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_pattern_search_against_networkx(g):
    x = to_nx(g)
    matcher = lambda p: nx.algorithms.isomorphism.GraphMatcher(x, to_nx(p)).subgraph_is_isomorphic()  # noqa: E731
    for pat in (cycle(4), diamond(), cricket(), claw(3)):
        assert contains_induced(g, pat) == matcher(pat)


@pytest.mark.parametrize(
    "g,cls,expected",
    [
        (cycle(4), "gap_free", True),
        (cycle(8), "weakly_chordal", False),
        (disjoint_edges(2), "dominating_induced_matching", True),
        (cycle(6), "bipartite", True),
        (complete(3), "bipartite", False),
        (cycle(4), "unmixed_bipartite", True),
        (diamond(), "contains_induced_diamond", True),
        (complete(4), "contains_induced_diamond", False),
        (cricket(), "contains_induced_cricket", True),
        (cycle(5), "contains_induced_C4", False),
    ],
)
def test_recognize_class_examples(g, cls, expected):
    assert recognize_class(g, cls) is expected


def test_claw_recognizer_needs_n():
    assert recognize_class(claw(3), "contains_induced_n_claw", n=3)
    assert not recognize_class(cycle(6), "contains_induced_n_claw", n=3)
    with pytest.raises(ValueError):
        recognize_class(cycle(6), "contains_induced_n_claw")


def test_pattern_search_refuses_large_graphs():
    with pytest.raises(LimitExceeded):
        contains_induced(cycle(12), cycle(4), Limits(pattern_vertices=10))
