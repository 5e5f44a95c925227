import itertools

import networkx as nx
from hypothesis import strategies as st

from edgereg.graph import Graph


def names(n):
    return tuple(f"x{k}" for k in range(1, n + 1))


@st.composite
def graphs(draw, min_n=1, max_n=7, min_edges=0):
    n = draw(st.integers(max(min_n, 2 if min_edges else 1), max_n))
    vs = names(n)
    pairs = list(itertools.combinations(vs, 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = tuple(p for p, k in zip(pairs, keep) if k)
    if len(edges) < min_edges:
        edges = tuple(pairs[: max(min_edges, len(edges))])
    return Graph(vs, edges)


@st.composite
def graph_pairs(draw, max_n=6, induced=None):
    """(H, G) with H a nonempty subgraph of G, spanning or induced."""
    g = draw(graphs(min_n=2, max_n=max_n, min_edges=1))
    mode = draw(st.sampled_from(["subgraph", "induced"])) if induced is None else ("induced" if induced else "subgraph")
    if mode == "subgraph":
        keep = draw(st.lists(st.booleans(), min_size=g.m, max_size=g.m))
        edges = tuple(e for e, k in zip(g.edges, keep) if k) or (g.edges[0],)
        return Graph(g.vertices, edges), g
    u, v = g.edges[0]
    extra = draw(st.lists(st.sampled_from(g.vertices), unique=True))
    keep = set(extra) | {u, v}
    from edgereg.graph import induced_subgraph

    return induced_subgraph(g, [x for x in g.vertices if x in keep]), g


def to_nx(g):
    x = nx.Graph()
    x.add_nodes_from(g.vertices)
    x.add_edges_from(g.edges)
    return x
