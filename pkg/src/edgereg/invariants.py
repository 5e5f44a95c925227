"""Exact matching numbers and graph-class recognizers.

All searches are exhaustive branch-and-bound over bitmasks; they are meant
for the desk-scale graphs (a few dozen edges) used by the theorem checks.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .graph import Graph, GraphError, complement, claw, cricket, diamond, cycle, subgraph_relation, NOT_SUBGRAPH
from .limits import DEFAULT_LIMITS, LimitExceeded, Limits


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _low_bit_index(x: int) -> int:
    return (x & -x).bit_length() - 1


# -- matchings ----------------------------------------------------------

def _greedy_matching(adj: tuple[int, ...], free: int) -> int:
    size = 0
    while True:
        for v in range(len(adj)):
            if free >> v & 1 and adj[v] & free:
                u = _low_bit_index(adj[v] & free)
                free &= ~((1 << v) | (1 << u))
                size += 1
                break
        else:
            return size


def matching_number(g: Graph) -> int:
    """Size of a maximum matching, by branch-and-bound over vertices."""
    adj = g.adj
    all_v = (1 << g.n) - 1
    best = _greedy_matching(adj, all_v)

    def active(free: int) -> int:
        out = 0
        rest = free
        while rest:
            v = _low_bit_index(rest)
            rest &= rest - 1
            if adj[v] & free:
                out |= 1 << v
        return out

    def search(free: int, size: int) -> None:
        nonlocal best
        act = active(free)
        if size + _popcount(act) // 2 <= best:
            return
        v = _low_bit_index(act)
        nbrs = adj[v] & free
        while nbrs:
            u = _low_bit_index(nbrs)
            nbrs &= nbrs - 1
            new = free & ~((1 << v) | (1 << u))
            if size + 1 > best:
                best = size + 1
            search(new, size + 1)
        search(free & ~(1 << v), size)

    if g.m:
        search(all_v, 0)
    return best


def _edge_conflicts(g: Graph, candidates: list[int]) -> list[int]:
    """For each candidate edge index, the bitmask of candidate positions it excludes.

    Two edges conflict in an induced matching when they share a vertex or
    some edge of ``g`` joins them, i.e. when one meets the closed
    neighbourhood of the other.
    """
    em = g.edge_masks
    adj = g.adj
    closed = []
    for k in candidates:
        m = em[k]
        nb = m
        rest = m
        while rest:
            v = _low_bit_index(rest)
            rest &= rest - 1
            nb |= adj[v]
        closed.append(nb)
    out = []
    for a in range(len(candidates)):
        mask = 0
        for b in range(len(candidates)):
            if em[candidates[b]] & closed[a]:
                mask |= 1 << b
        out.append(mask)
    return out


def _max_induced_matching(g: Graph, candidates: list[int]) -> tuple[int, list[int]]:
    """Largest subset of ``candidates`` (edge indices of g) forming an induced matching of g."""
    if not candidates:
        return 0, []
    conflict = _edge_conflicts(g, candidates)
    em = g.edge_masks
    best: list[int] = []

    def vertex_bound(allowed: int) -> int:
        verts = 0
        rest = allowed
        while rest:
            b = _low_bit_index(rest)
            rest &= rest - 1
            verts |= em[candidates[b]]
        return min(_popcount(allowed), _popcount(verts) // 2)

    def search(allowed: int, chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if not allowed or len(chosen) + vertex_bound(allowed) <= len(best):
            return
        b = _low_bit_index(allowed)
        chosen.append(b)
        search(allowed & ~conflict[b], chosen)
        chosen.pop()
        search(allowed & ~(1 << b), chosen)

    search((1 << len(candidates)) - 1, [])
    return len(best), [candidates[b] for b in best]


def induced_matching_number(g: Graph) -> int:
    return _max_induced_matching(g, list(range(g.m)))[0]


def max_induced_matching(g: Graph) -> list[tuple[str, str]]:
    """A maximum induced matching of ``g`` as a list of edges."""
    _, idx = _max_induced_matching(g, list(range(g.m)))
    return [g.edges[k] for k in idx]


def nu_gh(h: Graph, g: Graph) -> int:
    """Largest number of edges of ``h`` forming an induced matching of ``g``."""
    if subgraph_relation(h, g) == NOT_SUBGRAPH:
        raise GraphError("h is not a subgraph of g")
    hset = h.edge_set
    cands = [k for k, e in enumerate(g.edges) if frozenset(e) in hset]
    return _max_induced_matching(g, cands)[0]


def is_matching(g: Graph, edges) -> bool:
    used: set[str] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in used or v in used:
            return False
        used.update((u, v))
    return True


def is_induced_matching(g: Graph, edges) -> bool:
    edges = list(edges)
    if not is_matching(g, edges):
        return False
    for (a, b), (c, d) in combinations(edges, 2):
        if any(g.has_edge(x, y) for x in (a, b) for y in (c, d)):
            return False
    return True


def is_maximal_matching(g: Graph, edges) -> bool:
    edges = list(edges)
    if not is_matching(g, edges):
        return False
    used = {x for e in edges for x in e}
    return all(u in used or v in used for u, v in g.edges)


def min_maximal_matching(g: Graph) -> int:
    """Minimum size of a maximal matching, by exhaustive enumeration with pruning.

    A maximal matching must saturate an endpoint of every edge, so the search
    branches on the first unsaturated edge over all ways of saturating it.
    """
    if not g.m:
        return 0
    em = g.edge_masks
    adj = g.adj
    best = matching_number(g)

    def search(matched: int, size: int) -> None:
        nonlocal best
        open_edge = next((k for k, m in enumerate(em) if not m & matched), None)
        if open_edge is None:
            best = min(best, size)
            return
        if size + 1 >= best:
            return
        for v in (em[open_edge] & -em[open_edge], em[open_edge] & (em[open_edge] - 1)):
            vi = v.bit_length() - 1
            nbrs = adj[vi] & ~matched
            while nbrs:
                u = _low_bit_index(nbrs)
                nbrs &= nbrs - 1
                search(matched | v | (1 << u), size + 1)

    search(0, 0)
    return best


# -- classes ------------------------------------------------------------

def is_bipartite(g: Graph) -> bool:
    color: dict[int, int] = {}
    for s in range(g.n):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            nbrs = g.adj[v]
            while nbrs:
                u = _low_bit_index(nbrs)
                nbrs &= nbrs - 1
                if u not in color:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_gap_free(g: Graph) -> bool:
    em = g.edge_masks
    adj = g.adj
    for a, b in combinations(range(g.m), 2):
        if em[a] & em[b]:
            continue
        u, v = (i for i in range(g.n) if em[a] >> i & 1)
        if not ((adj[u] | adj[v]) & em[b]):
            return False
    return True


def maximal_independent_sets(g: Graph) -> list[int]:
    """All maximal independent sets as vertex bitmasks (Bron-Kerbosch on the complement)."""
    full = (1 << g.n) - 1
    non_adj = [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = _low_bit_index(pivot_pool)
        cand = p & ~non_adj[pivot]
        while cand:
            v = _low_bit_index(cand)
            cand &= cand - 1
            bk(r | 1 << v, p & non_adj[v], x & non_adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, full, 0)
    return out


def minimal_vertex_covers(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    return [full & ~s for s in maximal_independent_sets(g)]


def is_unmixed(g: Graph) -> bool:
    sizes = {_popcount(c) for c in minimal_vertex_covers(g)}
    return len(sizes) <= 1


def has_dominating_induced_matching(g: Graph) -> bool:
    """Some induced matching is also a maximal matching (the empty one counts when g has no edges)."""
    em = g.edge_masks
    cands = list(range(g.m))
    conflict = _edge_conflicts(g, cands)
    touching = [sum(1 << b for b in cands if em[b] & em[a]) for a in cands]

    def dominates(chosen: int) -> bool:
        verts = 0
        rest = chosen
        while rest:
            b = _low_bit_index(rest)
            rest &= rest - 1
            verts |= em[b]
        return all(m & verts for m in em)

    def search(allowed: int, chosen: int) -> bool:
        if dominates(chosen):
            return True
        # the first edge not touched by the chosen edges must be dominated by a
        # chosen edge meeting it; only allowed edges can still be added
        verts = 0
        rest = chosen
        while rest:
            b = _low_bit_index(rest)
            rest &= rest - 1
            verts |= em[b]
        first = next(k for k, m in enumerate(em) if not m & verts)
        options = allowed & touching[first]
        while options:
            b = _low_bit_index(options)
            options &= options - 1
            if search(allowed & ~conflict[b], chosen | 1 << b):
                return True
        return False

    return search((1 << g.m) - 1, 0)


def induced_cycles(g: Graph, min_len: int = 4, limit: int | None = None):
    """Yield chordless cycles of length >= ``min_len`` as vertex-index lists.

    Each cycle is reported once, rooted at its smallest vertex index, in the
    direction where the second vertex is smaller than the last.
    """
    adj = g.adj
    found = 0

    def extend(path: list[int], on_path: int, start: int):
        nonlocal found
        last = path[-1]
        nbrs = adj[last] & ~on_path
        while nbrs:
            u = _low_bit_index(nbrs)
            nbrs &= nbrs - 1
            if u < start:
                continue
            # u must not be adjacent to interior path vertices
            interior = on_path & ~(1 << start) & ~(1 << last)
            if adj[u] & interior:
                continue
            if adj[u] >> start & 1:
                if len(path) + 1 >= min_len and path[1] < u and len(path) >= 2:
                    yield path + [u]
                    found += 1
                    if limit is not None and found >= limit:
                        return
                continue
            yield from extend(path + [u], on_path | 1 << u, start)
            if limit is not None and found >= limit:
                return

    for s in range(g.n):
        nbrs = adj[s]
        while nbrs:
            v = _low_bit_index(nbrs)
            nbrs &= nbrs - 1
            if v < s:
                continue
            yield from extend([s, v], (1 << s) | (1 << v), s)
            if limit is not None and found >= limit:
                return


def has_induced_cycle(g: Graph, min_len: int) -> bool:
    return next(induced_cycles(g, min_len, limit=1), None) is not None


def is_weakly_chordal(g: Graph) -> bool:
    return not has_induced_cycle(g, 5) and not has_induced_cycle(complement(g), 5)


def _pattern_adjacency(p: Graph) -> list[int]:
    return list(p.adj)


def contains_induced(g: Graph, pattern: Graph, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Brute-force search for an induced copy of ``pattern`` in ``g``."""
    if g.n > limits.pattern_vertices:
        raise LimitExceeded(f"pattern search refused on {g.n} vertices (limit {limits.pattern_vertices})")
    k = pattern.n
    if k > g.n:
        return False
    padj = _pattern_adjacency(pattern)
    pdeg = sorted(_popcount(a) for a in padj)
    adj = g.adj
    for sub in combinations(range(g.n), k):
        smask = 0
        for v in sub:
            smask |= 1 << v
        degs = sorted(_popcount(adj[v] & smask) for v in sub)
        if degs != pdeg:
            continue
        for perm in permutations(sub):
            if all((adj[perm[i]] & smask) == _image(padj[i], perm) for i in range(k)):
                return True
    return False


def _image(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    for i, v in enumerate(perm):
        if mask >> i & 1:
            out |= 1 << v
    return out


def contains_induced_claw(g: Graph, n: int) -> bool:
    """Some vertex has ``n`` pairwise non-adjacent neighbours."""
    if n < 1:
        raise GraphError("n-claw needs n >= 1")
    adj = g.adj
    for v in range(g.n):
        nbrs = [u for u in range(g.n) if adj[v] >> u & 1]
        for leaves in combinations(nbrs, n):
            if all(not adj[a] >> b & 1 for a, b in combinations(leaves, 2)):
                return True
    return False


CLASSES = (
    "gap_free",
    "weakly_chordal",
    "bipartite",
    "unmixed_bipartite",
    "dominating_induced_matching",
    "contains_induced_C4",
    "contains_induced_diamond",
    "contains_induced_cricket",
    "contains_induced_n_claw",
)


def recognize_class(g: Graph, cls: str, n: int | None = None, limits: Limits = DEFAULT_LIMITS) -> bool:
    if cls == "gap_free":
        return is_gap_free(g)
    if cls == "weakly_chordal":
        return is_weakly_chordal(g)
    if cls == "bipartite":
        return is_bipartite(g)
    if cls == "unmixed_bipartite":
        return is_bipartite(g) and is_unmixed(g)
    if cls == "dominating_induced_matching":
        return has_dominating_induced_matching(g)
    if cls == "contains_induced_C4":
        return contains_induced(g, cycle(4), limits)
    if cls == "contains_induced_diamond":
        return contains_induced(g, diamond(), limits)
    if cls == "contains_induced_cricket":
        return contains_induced(g, cricket(), limits)
    if cls == "contains_induced_n_claw":
        if n is None:
            raise ValueError("contains_induced_n_claw needs n")
        return contains_induced_claw(g, n)
    raise ValueError(f"unknown graph class {cls!r}")


def class_flags(g: Graph, limits: Limits = DEFAULT_LIMITS) -> dict[str, bool]:
    """Every recognizer with a fixed pattern, plus the 3-claw."""
    flags = {c: recognize_class(g, c, limits=limits) for c in CLASSES if c != "contains_induced_n_claw"}
    flags["contains_induced_3_claw"] = contains_induced_claw(g, 3)
    return flags


__all__ = [
    "matching_number",
    "induced_matching_number",
    "max_induced_matching",
    "min_maximal_matching",
    "nu_gh",
    "recognize_class",
    "class_flags",
    "claw",
]
