"""Chordal and co-chordal graphs, Benzaken edge orderings, co-chordal covers.

A graph is co-chordal when its complement is chordal.  Benzaken's
criterion characterises the same graphs by their edges: there is a linear
order on E(G) in which every prefix graph is 2K2-free.  Covers are lists of
ordered edge classes; each class certifies itself through that criterion.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Edge, Graph, GraphError, complement
from .limits import DEFAULT_LIMITS, LimitExceeded, Limits


def _low(x: int) -> int:
    return (x & -x).bit_length() - 1


def _bits(x: int):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


# -- chordality -------------------------------------------------------

def mcs_order(adj: Sequence[int], verts: int) -> list[int]:
    """Maximum cardinality search visit order on the vertex bitmask ``verts``.

    Ties go to the smallest vertex index.  The reverse of the visit order is
    a perfect elimination ordering whenever the graph is chordal.
    """
    weight = {v: 0 for v in _bits(verts)}
    order = []
    while weight:
        v = max(weight, key=lambda u: (weight[u], -u))
        del weight[v]
        order.append(v)
        for u in _bits(adj[v] & verts):
            if u in weight:
                weight[u] += 1
    return order


def _is_peo(adj: Sequence[int], peo: list[int]) -> bool:
    later = 0
    for v in reversed(peo):
        nb = adj[v] & later
        for u in _bits(nb):
            if (nb & ~(1 << u)) & ~adj[u]:
                return False
        later |= 1 << v
    return True


def chordal_masks(adj: Sequence[int], verts: int) -> bool:
    order = mcs_order(adj, verts)
    return _is_peo([a & verts for a in adj], order[::-1])


def _find_hole(adj: Sequence[int], n: int) -> list[int] | None:
    """A chordless cycle of length >= 4, or None.

    For every vertex v and non-adjacent pair u, w of its neighbours, a
    shortest u-w path avoiding the rest of N[v] closes a chordless cycle
    through v; every hole arises this way.
    """
    full = (1 << n) - 1
    for v in range(n):
        nbrs = list(_bits(adj[v]))
        for u, w in combinations(nbrs, 2):
            if adj[u] >> w & 1:
                continue
            allowed = full & ~(adj[v] | 1 << v) | (1 << u) | (1 << w)
            prev = {u: -1}
            queue = deque([u])
            while queue:
                x = queue.popleft()
                if x == w:
                    break
                for y in _bits(adj[x] & allowed):
                    if y not in prev:
                        prev[y] = x
                        queue.append(y)
            if w in prev:
                path = []
                x = w
                while x != -1:
                    path.append(x)
                    x = prev[x]
                return [v] + path[::-1]
    return None


@dataclass(frozen=True)
class ChordalResult:
    chordal: bool
    peo: tuple[str, ...] | None = None
    hole: tuple[str, ...] | None = None

    def __bool__(self) -> bool:
        return self.chordal


def is_chordal(g: Graph) -> ChordalResult:
    """Chordality with a certificate: a verified PEO, or an induced cycle of length >= 4."""
    full = (1 << g.n) - 1
    peo = mcs_order(g.adj, full)[::-1]
    if _is_peo(g.adj, peo):
        return ChordalResult(True, peo=tuple(g.vertices[i] for i in peo))
    hole = _find_hole(g.adj, g.n)
    if hole is None:  # pragma: no cover - MCS and the hole search disagree
        raise AssertionError("PEO check failed but no induced cycle exists")
    return ChordalResult(False, hole=tuple(g.vertices[i] for i in hole))


def is_cochordal(g: Graph) -> bool:
    return is_chordal(complement(g)).chordal


def _cochordal_edge_mask(g: Graph, emask: int) -> bool:
    """Co-chordality of the spanning subgraph of ``g`` with edge-index set ``emask``."""
    adj = [0] * g.n
    em = g.edge_masks
    for k in _bits(emask):
        a, b = _bits(em[k])
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    full = (1 << g.n) - 1
    cadj = [full & ~adj[v] & ~(1 << v) for v in range(g.n)]
    return chordal_masks(cadj, full)


# -- Benzaken prefix criterion ----------------------------------------

@dataclass(frozen=True)
class PrefixCheck:
    ok: bool
    r: int | None = None
    pair: tuple[Edge, Edge] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _edge_index(g: Graph, e: Sequence[str]) -> int:
    u, v = e
    key = frozenset((u, v))
    for k, f in enumerate(g.edges):
        if frozenset(f) == key:
            return k
    raise GraphError(f"{u}{v} is not an edge")


def benzaken_prefix_check(g: Graph, order: Sequence[Sequence[str]]) -> PrefixCheck:
    """Check that every prefix of ``order`` spans a 2K2-free graph.

    ``order`` must list every edge of ``g`` exactly once.  On failure the
    result carries the 1-based prefix length r and the offending pair.
    """
    idx = [_edge_index(g, e) for e in order]
    if sorted(idx) != list(range(g.m)):
        raise GraphError("order is not a permutation of the edge set")
    em = g.edge_masks
    adj = [0] * g.n
    placed: list[int] = []
    for r, k in enumerate(idx, start=1):
        x, y = _bits(em[k])
        adj[x] |= 1 << y
        adj[y] |= 1 << x
        reach = adj[x] | adj[y]
        for f in placed:
            if em[f] & em[k]:
                continue
            if not reach & em[f]:
                return PrefixCheck(False, r, (g.edges[f], g.edges[k]))
        placed.append(k)
    return PrefixCheck(True)


def cochordal_edge_order(g: Graph) -> list[Edge] | None:
    """An edge order passing the prefix check, found by backtracking; None if none exists.

    A prefix is extended by any unused edge that keeps it 2K2-free.
    Candidates touching more of the current prefix are tried first, and
    exhausted prefixes (as edge sets) are remembered.
    """
    m = g.m
    if m == 0:
        return []
    em = g.edge_masks
    dead: set[int] = set()
    order: list[int] = []

    def extendable(k: int, used: int, adj: list[int]) -> bool:
        x, y = _bits(em[k])
        reach = adj[x] | adj[y]
        for f in _bits(used):
            if not em[f] & em[k] and not reach & em[f]:
                return False
        return True

    def search(used: int, adj: list[int], verts: int) -> bool:
        if used == (1 << m) - 1:
            return True
        if used in dead:
            return False
        cands = [k for k in range(m) if not used >> k & 1 and extendable(k, used, adj)]
        cands.sort(key=lambda k: -bin(em[k] & verts).count("1"))
        for k in cands:
            x, y = _bits(em[k])
            nadj = list(adj)
            nadj[x] |= 1 << y
            nadj[y] |= 1 << x
            order.append(k)
            if search(used | 1 << k, nadj, verts | em[k]):
                return True
            order.pop()
        dead.add(used)
        return False

    if search(0, [0] * g.n, 0):
        return [g.edges[k] for k in order]
    return None


# -- co-chordal covers ------------------------------------------------

@dataclass(frozen=True)
class CochordalCover:
    """Ordered edge classes; each class should pass the prefix check on its own."""

    classes: tuple[tuple[Edge, ...], ...] = field(default=())

    @property
    def size(self) -> int:
        return len(self.classes)

    def to_dict(self) -> dict:
        return {"classes": [[list(e) for e in cls] for cls in self.classes]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict) -> "CochordalCover":
        if not isinstance(obj, dict) or not isinstance(obj.get("classes"), list):
            raise GraphError("cover JSON needs a 'classes' array")
        out = []
        for c in obj["classes"]:
            if not isinstance(c, list):
                raise GraphError("each cover class must be an array of edges")
            edges = []
            for e in c:
                if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)):
                    raise GraphError(f"bad edge {json.dumps(e)} in cover")
                edges.append((e[0], e[1]))
            out.append(tuple(edges))
        return cls(tuple(out))

    @classmethod
    def from_json(cls, text: str) -> "CochordalCover":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise GraphError(f"malformed cover JSON: {exc.msg}") from exc


def _classes_by_triangulation(g: Graph) -> list[int]:
    """Maximal co-chordal spanning subgraphs of g, as edge-index masks.

    A spanning subgraph H of G is co-chordal iff its complement is a chordal
    supergraph of G^c, so maximal H correspond to minimal triangulations of
    G^c.  Those are the inclusion-minimal fill graphs of elimination
    orderings.  Eliminating a set S leaves the same graph on V - S whatever
    the order (two survivors are joined iff a path through S connects them),
    so the fill sets are propagated over subsets S, keeping only
    inclusion-minimal ones.
    """
    n = g.n
    full = (1 << n) - 1
    cadj = [full & ~g.adj[v] & ~(1 << v) for v in range(n)]
    pair_edge = {}
    for k, m in enumerate(g.edge_masks):
        a, b = _bits(m)
        pair_edge[(a, b)] = k

    def survivors_adjacent(s: int, v: int) -> int:
        # vertices outside S + v reachable from v through S in the complement
        seen = 1 << v
        frontier = 1 << v
        out = 0
        while frontier:
            x = _low(frontier)
            frontier &= frontier - 1
            nb = cadj[x] & ~seen
            seen |= nb
            out |= nb & ~s
            frontier |= nb & s
        return out & ~(1 << v)

    def fill_of(nbrs: int) -> int:
        f = 0
        vs = list(_bits(nbrs))
        for a, b in combinations(vs, 2):
            k = pair_edge.get((a, b))
            if k is not None:
                f |= 1 << k
        return f

    states: dict[int, list[int]] = {0: [0]}
    for size in range(n):
        layer = [s for s in states if bin(s).count("1") == size]
        for s in layer:
            fills = states.pop(s)
            for v in _bits(full & ~s):
                add = fill_of(survivors_adjacent(s, v))
                t = s | 1 << v
                bucket = states.setdefault(t, [])
                for f in fills:
                    _add_minimal(bucket, f | add)
    all_edges = (1 << g.m) - 1
    return sorted({all_edges & ~f for f in states[full]})


def _add_minimal(bucket: list[int], f: int) -> None:
    for i, h in enumerate(bucket):
        if h & f == h:  # h subset of f
            return
    bucket[:] = [h for h in bucket if h & f != f]
    bucket.append(f)


def _classes_by_growth(g: Graph) -> list[int]:
    """Maximal co-chordal edge sets by exhaustive single-edge growth.

    Every co-chordal edge set can be reached from the empty set through
    co-chordal sets (drop the last edge of a prefix-check order), so the
    search visits all of them.
    """
    m = g.m
    seen: set[int] = set()
    stack = []
    for k in range(m):
        seen.add(1 << k)
        stack.append(1 << k)
    local_max = []
    while stack:
        s = stack.pop()
        grew = False
        for k in range(m):
            if s >> k & 1:
                continue
            t = s | 1 << k
            if t in seen:
                grew = grew or _cochordal_edge_mask(g, t)
                continue
            if _cochordal_edge_mask(g, t):
                seen.add(t)
                stack.append(t)
                grew = True
        if not grew:
            local_max.append(s)
    out = []
    for s in sorted(set(local_max), key=lambda x: -bin(x).count("1")):
        if not any(s & t == s for t in out):
            out.append(s)
    return sorted(out)


def maximal_cochordal_classes(g: Graph, limits: Limits = DEFAULT_LIMITS, method: str = "auto") -> list[int]:
    if method == "auto":
        if g.n <= limits.cochord_vertices:
            method = "triangulation"
        elif g.m <= limits.cochord_edges:
            method = "growth"
        else:
            raise LimitExceeded(
                f"co-chordal cover search refused: {g.n} vertices > {limits.cochord_vertices} "
                f"and {g.m} edges > {limits.cochord_edges}"
            )
    if g.m == 0:
        return []
    if method == "triangulation":
        return _classes_by_triangulation(g)
    if method == "growth":
        return _classes_by_growth(g)
    raise ValueError(f"unknown method {method!r}")


def _min_set_cover(universe: int, sets: list[int], lo: int, hi: int) -> list[int]:
    """Smallest list of ``sets`` covering ``universe``, by iterative deepening from ``lo``."""
    nbits = universe.bit_length()
    containing = [[s for s in sets if s >> b & 1] for b in range(nbits)]
    biggest = max((bin(s).count("1") for s in sets), default=0)

    def dfs(uncovered: int, left: int, chosen: list[int], failed: set) -> bool:
        if not uncovered:
            return True
        if left == 0 or left * biggest < bin(uncovered).count("1"):
            return False
        key = (uncovered, left)
        if key in failed:
            return False
        b = _low(uncovered)
        opts = sorted(containing[b], key=lambda s: -bin(s & uncovered).count("1"))
        for s in opts:
            chosen.append(s)
            if dfs(uncovered & ~s, left - 1, chosen, failed):
                return True
            chosen.pop()
        failed.add(key)
        return False

    for k in range(lo, hi + 1):
        chosen: list[int] = []
        if dfs(universe, k, chosen, set()):
            return chosen
    raise AssertionError("no cover found within the upper bound")  # pragma: no cover


def cochord_cover_number(g: Graph, limits: Limits = DEFAULT_LIMITS, method: str = "auto") -> tuple[int, CochordalCover]:
    """Exact co-chordal cover number with a certificate.

    The candidate classes are the maximal co-chordal subgraphs; the minimum
    cover is found by iterative deepening from one class upwards.  No known
    bound (induced matching number, matching numbers) seeds the search, so
    comparisons against those invariants stay independent checks.
    """
    if g.m == 0:
        return 0, CochordalCover(())
    classes = maximal_cochordal_classes(g, limits, method)
    chosen = _min_set_cover((1 << g.m) - 1, classes, 1, g.m)
    cert = []
    for mask in chosen:
        sub = Graph(g.vertices, tuple(g.edges[k] for k in _bits(mask)))
        order = cochordal_edge_order(sub)
        if order is None:  # pragma: no cover
            raise AssertionError("a maximal co-chordal class has no prefix-check order")
        cert.append(tuple(order))
    return len(chosen), CochordalCover(tuple(cert))


def cochord(g: Graph, limits: Limits = DEFAULT_LIMITS) -> int:
    return cochord_cover_number(g, limits)[0]


def cover_from_classes(classes: Iterable[Iterable[Sequence[str]]]) -> CochordalCover:
    return CochordalCover(tuple(tuple((e[0], e[1]) for e in c) for c in classes))
