"""Finite simple graphs with named vertices.

Graphs are immutable.  Vertices keep the order they were given in, and every
edge is stored as a pair ordered by that vertex order, so iteration over
``edges`` is deterministic.  Most algorithms elsewhere in the package work on
bitmask adjacency (``adj``) indexed by vertex position.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[str, str]


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex subsets."""


@dataclass(frozen=True, eq=False)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        verts = tuple(str(v) for v in self.vertices)
        if len(set(verts)) != len(verts):
            raise GraphError("duplicate vertex name")
        pos = {v: i for i, v in enumerate(verts)}
        seen: set[Edge] = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u!r}")
            for w in (u, v):
                if w not in pos:
                    raise GraphError(f"unknown endpoint {w!r}")
            seen.add((u, v) if pos[u] < pos[v] else (v, u))
        ordered = tuple(sorted(seen, key=lambda e: (pos[e[0]], pos[e[1]])))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", ordered)

    # -- construction -------------------------------------------------

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[str]], vertices: Iterable[str] | None = None) -> "Graph":
        """Build a graph; vertices default to edge endpoints in first-seen order."""
        edges = [tuple(e) for e in edges]
        if vertices is None:
            order: dict[str, None] = {}
            for u, v in edges:
                order.setdefault(u)
                order.setdefault(v)
            vertices = order
        return cls(tuple(vertices), tuple(edges))

    # -- basic accessors ----------------------------------------------

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_set(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(e) for e in self.edges)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmask of each vertex, by vertex position."""
        masks = [0] * len(self.vertices)
        idx = self.index
        for u, v in self.edges:
            masks[idx[u]] |= 1 << idx[v]
            masks[idx[v]] |= 1 << idx[u]
        return tuple(masks)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        """Vertex bitmask of each edge, aligned with ``edges``."""
        idx = self.index
        return tuple((1 << idx[u]) | (1 << idx[v]) for u, v in self.edges)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edge_set

    def edge_key(self, u: str, v: str) -> Edge:
        """Canonical (ordered) form of the pair ``{u, v}``."""
        idx = self.index
        return (u, v) if idx[u] < idx[v] else (v, u)

    def mask_of(self, vs: Iterable[str]) -> int:
        idx = self.index
        out = 0
        for v in vs:
            if v not in idx:
                raise GraphError(f"unknown vertex {v!r}")
            out |= 1 << idx[v]
        return out

    def names_of(self, mask: int) -> list[str]:
        return [v for i, v in enumerate(self.vertices) if mask >> i & 1]

    def degree(self, v: str) -> int:
        return bin(self.adj[self.index[v]]).count("1")

    # -- equality -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edge_set == other.edge_set

    def __hash__(self) -> int:
        return hash((self.vertices, self.edge_set))

    def __repr__(self) -> str:
        es = ", ".join(f"{u}{v}" for u, v in self.edges)
        return f"Graph(n={self.n}, edges=[{es}])"


def standard_graph(kind: str, n: int) -> Graph:
    """Canonical graphs on vertices x1..xn (``disjoint_edges`` uses x1..x2n)."""
    if n < 1:
        raise GraphError("n must be positive")
    names = [f"x{i}" for i in range(1, n + 1)]
    if kind == "cycle":
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        edges = [(names[i], names[(i + 1) % n]) for i in range(n)]
    elif kind == "complete":
        edges = list(combinations(names, 2))
    elif kind == "path":
        edges = [(names[i], names[i + 1]) for i in range(n - 1)]
    elif kind == "disjoint_edges":
        names = [f"x{i}" for i in range(1, 2 * n + 1)]
        edges = [(names[2 * i], names[2 * i + 1]) for i in range(n)]
    else:
        raise GraphError(f"unknown graph kind {kind!r}")
    return Graph(tuple(names), tuple(edges))


def cycle(n: int) -> Graph:
    return standard_graph("cycle", n)


def complete(n: int) -> Graph:
    return standard_graph("complete", n)


def path(n: int) -> Graph:
    return standard_graph("path", n)


def disjoint_edges(n: int) -> Graph:
    return standard_graph("disjoint_edges", n)


def edgeless(n: int) -> Graph:
    return Graph(tuple(f"x{i}" for i in range(1, n + 1)))


def complement(g: Graph) -> Graph:
    present = g.edge_set
    edges = [e for e in combinations(g.vertices, 2) if frozenset(e) not in present]
    return Graph(g.vertices, tuple(edges))


def induced_subgraph(g: Graph, keep: Iterable[str]) -> Graph:
    keep = set(keep)
    missing = keep - set(g.vertices)
    if missing:
        raise GraphError(f"vertices not in graph: {sorted(missing)}")
    verts = tuple(v for v in g.vertices if v in keep)
    edges = tuple(e for e in g.edges if e[0] in keep and e[1] in keep)
    return Graph(verts, edges)


def remove_vertices(g: Graph, drop: Iterable[str]) -> Graph:
    """``G minus U``: the induced subgraph on the remaining vertices."""
    drop = set(drop)
    return induced_subgraph(g, [v for v in g.vertices if v not in drop])


def neighborhood(g: Graph, s: Iterable[str], closed: bool = False) -> set[str]:
    mask = g.mask_of(s)
    out = 0
    for i in range(g.n):
        if mask >> i & 1:
            out |= g.adj[i]
    if closed:
        out |= mask
    return set(g.names_of(out))


def sorted_neighbors(g: Graph, v: str) -> list[str]:
    """Open neighbourhood of a single vertex, in vertex order."""
    return g.names_of(g.adj[g.index[v]])


NOT_SUBGRAPH = "not_subgraph"
SUBGRAPH = "subgraph"
INDUCED = "induced_subgraph"


def subgraph_relation(h: Graph, g: Graph) -> str:
    if not set(h.vertices) <= set(g.vertices):
        return NOT_SUBGRAPH
    if not h.edge_set <= g.edge_set:
        return NOT_SUBGRAPH
    hv = set(h.vertices)
    for u, v in g.edges:
        if u in hv and v in hv and frozenset((u, v)) not in h.edge_set:
            return SUBGRAPH
    return INDUCED


def is_subgraph(h: Graph, g: Graph) -> bool:
    return subgraph_relation(h, g) != NOT_SUBGRAPH


def spanning(h: Graph, g: Graph) -> Graph:
    """Re-home ``h`` on the full vertex set of ``g`` (isolated vertices added)."""
    if not set(h.vertices) <= set(g.vertices):
        raise GraphError("h has vertices outside g")
    return Graph(g.vertices, h.edges)


def edge_subgraph(g: Graph, edges: Iterable[Sequence[str]]) -> Graph:
    """Subgraph of ``g`` on all of V(g) with the given edges."""
    edges = [tuple(e) for e in edges]
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphError(f"{u}{v} is not an edge of the host graph")
    return Graph(g.vertices, tuple(edges))


def disjoint_union(*graphs: Graph) -> Graph:
    verts: list[str] = []
    edges: list[Edge] = []
    for h in graphs:
        verts.extend(h.vertices)
        edges.extend(h.edges)
    return Graph(tuple(verts), tuple(edges))


# -- pattern graphs ---------------------------------------------------

def two_k2() -> Graph:
    return Graph(("a", "b", "c", "d"), (("a", "b"), ("c", "d")))


def diamond() -> Graph:
    return Graph(("a", "b", "c", "d"), (("a", "b"), ("b", "c"), ("a", "c"), ("a", "d"), ("c", "d")))


def cricket() -> Graph:
    w = ("w1", "w2", "w3", "w4", "w5")
    return Graph(w, (("w1", "w3"), ("w2", "w3"), ("w3", "w4"), ("w3", "w5"), ("w4", "w5")))


def claw(n: int) -> Graph:
    """The star K_{1,n}."""
    if n < 1:
        raise GraphError("claw needs n >= 1")
    leaves = tuple(f"l{i}" for i in range(1, n + 1))
    return Graph(("c",) + leaves, tuple(("c", leaf) for leaf in leaves))


def butterfly_pair() -> tuple[Graph, Graph]:
    """The sharp example for the matching-number bound: H = {x2x3, x4x5} inside the butterfly."""
    names = tuple(f"x{i}" for i in range(1, 6))
    g = Graph(names, (("x1", "x2"), ("x1", "x3"), ("x1", "x4"), ("x1", "x5"), ("x2", "x3"), ("x4", "x5")))
    h = Graph(("x2", "x3", "x4", "x5"), (("x2", "x3"), ("x4", "x5")))
    return h, g


# -- JSON interchange -------------------------------------------------

def graph_to_dict(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}


def serialize_graph(g: Graph) -> str:
    return json.dumps(graph_to_dict(g))


def graph_from_dict(obj: object) -> Graph:
    if not isinstance(obj, dict):
        raise GraphError("graph JSON must be an object")
    if "vertices" not in obj or "edges" not in obj:
        raise GraphError("graph JSON needs 'vertices' and 'edges'")
    verts = obj["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise GraphError("'vertices' must be an array of strings")
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise GraphError("'edges' must be an array")
    vs = set(verts)
    parsed = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)):
            raise GraphError(f"bad edge {json.dumps(e)}: expected a 2-array of strings")
        u, v = e
        if u == v:
            raise GraphError(f"loop edge [{u!r}, {v!r}]")
        for w in (u, v):
            if w not in vs:
                raise GraphError(f"unknown endpoint {w!r} in edge [{u!r}, {v!r}]")
        parsed.append((u, v))
    return Graph(tuple(verts), tuple(parsed))


def parse_graph(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed JSON: {exc.msg} at line {exc.lineno} column {exc.colno}") from exc
    return graph_from_dict(obj)
