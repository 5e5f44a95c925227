"""Simplicial complexes and exact reduced homology.

Faces are bitmasks over the vertex list.  Two boundary cases are kept
apart on purpose: the void complex has no faces at all and no homology,
while the irrelevant complex {∅} has rank one in dimension -1.

Ranks of boundary maps come from column reduction with clearing, over the
rationals (integer columns, content-normalised, so no fractions ever
appear) or over GF(p).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence


def _bits(x: int):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def _popcount(x: int) -> int:
    return bin(x).count("1")


def check_char(char: int) -> int:
    if char == 0:
        return 0
    if char < 2 or any(char % d == 0 for d in range(2, int(char ** 0.5) + 1)):
        raise ValueError(f"characteristic must be 0 or a prime, got {char}")
    return char


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    vertices: tuple[str, ...]
    faces: frozenset[int]

    def __post_init__(self) -> None:
        for f in self.faces:
            if f >> len(self.vertices):
                raise ValueError("face uses a vertex outside the vertex list")
            for v in _bits(f):
                if f & ~(1 << v) not in self.faces:
                    raise ValueError("face set is not closed under subsets")

    @classmethod
    def from_facets(cls, vertices: Sequence[str], facets: Iterable[Iterable[str]]) -> "SimplicialComplex":
        pos = {v: i for i, v in enumerate(vertices)}
        faces: set[int] = set()
        for facet in facets:
            mask = 0
            for v in facet:
                mask |= 1 << pos[v]
            sub = mask
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & mask
        return cls(tuple(vertices), frozenset(faces))

    @classmethod
    def void(cls, vertices: Sequence[str] = ()) -> "SimplicialComplex":
        return cls(tuple(vertices), frozenset())

    @classmethod
    def irrelevant(cls, vertices: Sequence[str] = ()) -> "SimplicialComplex":
        return cls(tuple(vertices), frozenset({0}))

    @property
    def is_void(self) -> bool:
        return not self.faces

    @cached_property
    def facets(self) -> list[frozenset[str]]:
        out = []
        for f in self.faces:
            if not any(f | 1 << v in self.faces for v in range(len(self.vertices)) if not f >> v & 1):
                out.append(frozenset(self.vertices[i] for i in _bits(f)))
        return sorted(out, key=lambda s: (len(s), sorted(s)))

    def f_vector(self) -> list[int]:
        """Face counts by dimension, starting at dimension -1."""
        if not self.faces:
            return []
        top = max(_popcount(f) for f in self.faces)
        out = [0] * (top + 1)
        for f in self.faces:
            out[_popcount(f)] += 1
        return out

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic: sum over faces (including ∅) of (-1)^dim."""
        return sum((-1) ** (k - 1) * c for k, c in enumerate(self.f_vector()))

    def face_names(self) -> list[frozenset[str]]:
        return [frozenset(self.vertices[i] for i in _bits(f)) for f in self.faces]


def faces_by_size(faces: Iterable[int]) -> list[list[int]]:
    levels: list[list[int]] = []
    for f in faces:
        k = _popcount(f)
        while len(levels) <= k:
            levels.append([])
        levels[k].append(f)
    for lv in levels:
        lv.sort()
    return levels


def _boundary_rank_q(cols: list[int], row_pos: dict[int, int], skip: set[int]) -> tuple[int, set[int]]:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for j, face in enumerate(cols):
        if j in skip:
            continue
        col: dict[int, int] = {}
        sign = 1
        for v in _bits(face):
            col[row_pos[face & ~(1 << v)]] = sign
            sign = -sign
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                break
            c, cp = col[low], piv[low]
            g = gcd(c, cp)
            mc, mp = cp // g, c // g
            new = {}
            for r, x in col.items():
                new[r] = x * mc
            for r, x in piv.items():
                y = new.get(r, 0) - x * mp
                if y:
                    new[r] = y
                else:
                    new.pop(r, None)
            if new:
                content = 0
                for x in new.values():
                    content = gcd(content, x)
                    if content == 1:
                        break
                if content > 1:
                    new = {r: x // content for r, x in new.items()}
            col = new
        if col:
            pivots[max(col)] = col
            rank += 1
    return rank, set(pivots)


def _boundary_rank_p(cols: list[int], row_pos: dict[int, int], skip: set[int], p: int) -> tuple[int, set[int]]:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for j, face in enumerate(cols):
        if j in skip:
            continue
        col: dict[int, int] = {}
        sign = 1
        for v in _bits(face):
            col[row_pos[face & ~(1 << v)]] = sign % p
            sign = -sign
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                break
            c = col[low]
            for r, x in piv.items():
                y = (col.get(r, 0) - c * x) % p
                if y:
                    col[r] = y
                else:
                    col.pop(r, None)
        if col:
            low = max(col)
            inv = pow(col[low], p - 2, p)
            pivots[low] = {r: x * inv % p for r, x in col.items()}
            rank += 1
    return rank, set(pivots)


def _boundary_rank_2(cols: list[int], row_pos: dict[int, int], skip: set[int]) -> tuple[int, set[int]]:
    pivots: dict[int, int] = {}
    rank = 0
    for j, face in enumerate(cols):
        if j in skip:
            continue
        col = 0
        for v in _bits(face):
            col ^= 1 << row_pos[face & ~(1 << v)]
        while col:
            low = col.bit_length() - 1
            piv = pivots.get(low)
            if piv is None:
                break
            col ^= piv
        if col:
            pivots[col.bit_length() - 1] = col
            rank += 1
    return rank, set(pivots)


def homology_of_faces(faces: Iterable[int], char: int = 0) -> dict[int, int]:
    """Nonzero reduced Betti numbers {dimension: rank} of a face set given as bitmasks."""
    levels = faces_by_size(faces)
    if not levels:
        return {}
    top = len(levels) - 1
    ranks = [0] * (top + 2)
    cleared: set[int] = set()
    for k in range(top, 0, -1):
        cols = levels[k]
        if k == 1:
            # augmentation map onto the empty face
            ranks[1] = 1 if cols and levels[0] else 0
            continue
        row_pos = {f: i for i, f in enumerate(levels[k - 1])}
        skip = cleared
        if char == 0:
            rank, piv_rows = _boundary_rank_q(cols, row_pos, skip)
        elif char == 2:
            rank, piv_rows = _boundary_rank_2(cols, row_pos, skip)
        else:
            rank, piv_rows = _boundary_rank_p(cols, row_pos, skip, char)
        ranks[k] = rank
        cleared = piv_rows
    out = {}
    for k in range(top + 1):
        h = len(levels[k]) - ranks[k] - ranks[k + 1]
        if h:
            out[k - 1] = h
    return out


def reduced_homology_ranks(c: SimplicialComplex, char: int = 0) -> dict[int, int]:
    check_char(char)
    return homology_of_faces(c.faces, char)


def is_cone(faces: frozenset[int] | set[int], support: int) -> bool:
    """True when some vertex of ``support`` can be added to every face."""
    for v in _bits(support):
        bit = 1 << v
        if all(f & bit or (f | bit) in faces for f in faces):
            return True
    return False
