import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgereg.graph import Graph, butterfly_pair, cycle, edgeless, is_subgraph
from edgereg.monomial import (
    ONE,
    IdealError,
    Monomial,
    MonomialIdeal,
    colon,
    edge_ideal,
    ideal_from_json,
    ideal_stats,
    ideal_to_json,
    minimalize,
    polarize,
    power,
    product,
)

from conftest import graph_pairs

VARS = ("x", "y", "z", "w")


@st.composite
def monomials(draw, ring=VARS, top=3):
    return Monomial.of({v: draw(st.integers(0, top)) for v in ring})


@st.composite
def ideals(draw, ring=VARS):
    gens = draw(st.lists(monomials(ring), min_size=1, max_size=6))
    return MonomialIdeal(ring, tuple(gens))


def m(**kw):
    return Monomial.of(kw)


def test_monomial_basics():
    a = m(x=2, y=1)
    assert a.degree == 3
    assert a.support == {"x", "y"}
    assert m(x=0).is_one and m(x=0) == ONE
    assert str(a) == "x^2*y"
    assert Monomial.from_vars("x", "x", "y") == a
    assert (a / m(x=1)) == m(x=1, y=1)
    with pytest.raises(IdealError):
        m(x=1) / m(y=1)


def test_minimalize_examples():
    assert minimalize([m(x=1, y=1), m(x=1, y=1, z=1)], VARS).gens == (m(x=1, y=1),)
    three = minimalize([m(x=2), m(x=1, y=1), m(y=2)], VARS)
    assert three.gen_set() == {m(x=2), m(x=1, y=1), m(y=2)}
    with pytest.raises(IdealError):
        minimalize([m(q=1)], VARS)


@settings(max_examples=80, deadline=None)
@given(st.lists(monomials(), min_size=1, max_size=8))
def test_minimalize_keeps_exactly_the_minimal_elements(gens):
    ideal = minimalize(gens, VARS)
    oracle = {g for g in gens if not any(h != g and h.divides(g) for h in gens)}
    assert ideal.gen_set() == oracle
    assert minimalize(ideal.gens, VARS) == ideal


def test_butterfly_product_minimal_generators():
    h, g = butterfly_pair()
    i, j = edge_ideal(h, g.vertices), edge_ideal(g)
    raw = [a * b for a in i.gens for b in j.gens]
    assert len(raw) == 12
    ij = product(i, j)
    # pairwise filter, brute force over all pairs
    kept = {r for r in raw if not any(s != r and s.divides(r) for s in raw)}
    assert ij.gen_set() == kept
    assert len(ij.gens) == 11
    st_ = ideal_stats(ij)
    assert st_.equigenerated and st_.max_gen_degree == 4 and not st_.is_squarefree


def test_edge_ideal_examples():
    assert edge_ideal(Graph(("a", "b"), (("a", "b"),))).gens == (m(a=1, b=1),)
    assert len(edge_ideal(cycle(8)).gens) == 8
    assert edge_ideal(edgeless(3)).is_zero


def test_product_examples():
    xy = MonomialIdeal(("x", "y"), (m(x=1, y=1),))
    assert product(xy, xy).gens == (m(x=2, y=2),)
    i = MonomialIdeal(VARS, (m(x=1), m(y=2)))
    single = MonomialIdeal(VARS, (m(z=1),))
    assert product(i, single).gen_set() == {m(x=1, z=1), m(y=2, z=1)}
    with pytest.raises(IdealError):
        product(xy, single)


def test_colon_examples():
    x2y2 = MonomialIdeal(("x", "y"), (m(x=2, y=2),))
    assert colon(x2y2, m(x=1, y=1)).gens == (m(x=1, y=1),)
    i = MonomialIdeal(VARS, (m(x=1, y=1), m(z=3)))
    assert colon(i, ONE) == i
    assert colon(i, m(x=1, y=1)).is_unit


@settings(max_examples=80, deadline=None)
@given(ideals(), monomials())
def test_colon_contains_the_ideal_and_is_exact(i, u):
    c = colon(i, u)
    assert i.issubset(c)
    # membership: f in (I : u) iff f*u in I, on all monomials of degree <= 3
    for exps in itertools.product(range(3), repeat=len(VARS)):
        f = Monomial.of(dict(zip(VARS, exps)))
        assert c.contains(f) == i.contains(f * u)


def test_edge_ideal_products_are_quartic():
    h, g = butterfly_pair()
    ij = product(edge_ideal(h, g.vertices), edge_ideal(g))
    assert {x.degree for x in ij.gens} == {4}


@settings(max_examples=40, deadline=None)
@given(graph_pairs(max_n=6))
def test_containment_agrees_with_subgraph_relation(pair):
    h, g = pair
    assert edge_ideal(h, g.vertices).issubset(edge_ideal(g)) == is_subgraph(h, g)
    assert {x.degree for x in product(edge_ideal(h, g.vertices), edge_ideal(g)).gens} == {4}


def test_polarize_examples():
    x2y2 = MonomialIdeal(("x", "y"), (m(x=2, y=2),))
    pol = polarize(x2y2)
    assert len(pol.target.ring_vars) == 4
    assert pol.target.gens[0].is_squarefree and pol.target.gens[0].degree == 4
    sq = edge_ideal(cycle(4))
    same = polarize(sq)
    assert same.target == sq and same.fresh_vars == ()


def test_polarize_colon_example_with_one_fresh_copy():
    j = edge_ideal(Graph(tuple(f"x{k}" for k in range(1, 7)),
                         (("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x5", "x6"), ("x1", "x6"), ("x4", "x6"))))
    ideal = j.with_gens([m(x6=2), m(x3=1, x6=1)])
    pol = polarize(ideal)
    assert len(pol.fresh_vars) == 1
    y1 = pol.var_map[("x6", 2)]
    assert Monomial.from_vars("x6", y1) in pol.target.gen_set()
    assert m(x3=1, x6=1) in pol.target.gen_set()


@settings(max_examples=80, deadline=None)
@given(ideals())
def test_depolarization_is_a_bijection_onto_generators(i):
    pol = polarize(i)
    assert all(g.is_squarefree for g in pol.target.gens)
    back = [pol.depolarize(g) for g in pol.target.gens]
    assert sorted(map(str, back)) == sorted(map(str, i.gens))


def test_power_and_json_round_trip():
    i = edge_ideal(cycle(3))
    assert power(i, 2) == product(i, i)
    assert ideal_from_json(ideal_to_json(i)) == i
    with pytest.raises(IdealError):
        ideal_from_json('{"vars": ["x"], "gens": [{"x": -1}]}')
    with pytest.raises(IdealError):
        ideal_from_json('{"vars": ["x"]}')
    with pytest.raises(IdealError):
        ideal_from_json("[")


def test_ideal_stats_mixed_degrees():
    s = ideal_stats(MonomialIdeal(("x", "y"), (m(x=2), m(x=1, y=3))))
    assert not s.is_squarefree and s.max_gen_degree == 4 and not s.equigenerated
