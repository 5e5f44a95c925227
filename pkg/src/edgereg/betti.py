"""Graded Betti numbers and regularity of monomial ideals.

Three independent engines:

* ``hochster``: squarefree ideals only.  beta_{i,j} is the sum over vertex
  sets W of size j of the reduced homology of the Stanley-Reisner complex
  restricted to W, in dimension j - i - 2.  Sets W containing a vertex that
  lies in no generator support inside W are skipped, since the restriction
  is then a cone.
* ``lcm``: any monomial ideal.  For each element b of the lcm lattice,
  beta_{i,b} is the reduced homology in dimension i - 1 of the open
  interval (0, b).  By the crosscut theorem this is computed on the complex
  of coatom sets with a common atom below them (or, for checking, on the
  literal order complex or on the atom crosscut).
* ``koszul``: any monomial ideal.  beta_{i,b} is the reduced homology in
  dimension i - 1 of the upper Koszul complex {F in supp(b) : x^(b-F) in I}.
  Only lcm-lattice degrees can contribute.

Tables use the ideal convention: beta_{0,d} counts minimal generators of
degree d.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .homology import SimplicialComplex, _bits, _popcount, check_char, homology_of_faces
from .limits import DEFAULT_LIMITS, LimitExceeded, Limits
from .monomial import IdealError, MonomialIdeal, polarize

ENGINES = ("auto", "hochster", "lcm", "koszul", "both")


class EngineMismatch(AssertionError):
    pass


@dataclass
class BettiTable:
    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    convention: str = "ideal"

    def add(self, i: int, j: int, rank: int) -> None:
        if rank:
            self.entries[(i, j)] = self.entries.get((i, j), 0) + rank

    def merge(self, other: "BettiTable") -> None:
        for (i, j), r in other.entries.items():
            self.add(i, j, r)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries and self.convention == other.convention

    @property
    def regularity(self) -> int:
        if not self.entries:
            raise IdealError("empty Betti table has no regularity")
        return max(j - i for i, j in self.entries)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def rows(self) -> list[tuple[int, int, int]]:
        return [(i, j, r) for (i, j), r in sorted(self.entries.items())]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "rank"])
        w.writerows(self.rows())
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {"convention": self.convention, "entries": [list(r) for r in self.rows()]}

    def pretty(self) -> str:
        """Macaulay2-style display: column i, row j - i."""
        if not self.entries:
            return "(zero)"
        pd = self.projective_dimension
        lo = min(j - i for i, j in self.entries)
        hi = self.regularity
        width = max(len(str(r)) for r in self.entries.values()) + 1
        lines = ["     " + "".join(str(i).rjust(width) for i in range(pd + 1))]
        for d in range(lo, hi + 1):
            cells = "".join(
                (str(self[(i, i + d)]) if self[(i, i + d)] else ".").rjust(width) for i in range(pd + 1)
            )
            lines.append(f"{d:>3}: {cells}")
        return "\n".join(lines)


# -- Stanley-Reisner and Hochster ---------------------------------------

def _gen_masks(i: MonomialIdeal) -> list[int]:
    pos = {v: k for k, v in enumerate(i.ring_vars)}
    out = []
    for g in i.gens:
        m = 0
        for v, _ in g.powers:
            m |= 1 << pos[v]
        out.append(m)
    return out


def _require_squarefree(i: MonomialIdeal) -> None:
    bad = [g for g in i.gens if not g.is_squarefree]
    if bad:
        raise IdealError(f"ideal is not squarefree (generator {bad[0]})")


def _independent_faces(n: int, gens: list[int]) -> list[int]:
    """All vertex sets containing no generator support."""
    by_var: list[list[int]] = [[] for _ in range(n)]
    for g in gens:
        by_var[g.bit_length() - 1].append(g)
    out = [0]
    stack = [(0, 0)]
    while stack:
        face, start = stack.pop()
        for v in range(start, n):
            nf = face | 1 << v
            # generators whose highest variable is v are the only ones that can newly fit
            if any(g & nf == g for g in by_var[v]):
                continue
            out.append(nf)
            stack.append((nf, v + 1))
    return out


def stanley_reisner_complex(i: MonomialIdeal) -> SimplicialComplex:
    _require_squarefree(i)
    if i.is_unit:
        return SimplicialComplex.void(i.ring_vars)
    faces = _independent_faces(len(i.ring_vars), _gen_masks(i))
    return SimplicialComplex(i.ring_vars, frozenset(faces))


def _support_unions(gens: list[int]) -> list[int]:
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                u = w | g
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(seen)


def _hochster_chunk(ws: list[int], faces: np.ndarray | None, gens: list[int], char: int) -> BettiTable:
    t = BettiTable()
    for w in ws:
        j = _popcount(w)
        if faces is not None:
            sub = faces[(faces & ~np.int64(w)) == 0]
            for dim, r in homology_of_faces(sub.tolist(), char).items():
                t.add(j - dim - 2, j, r)
        else:
            for dim, r in homology_of_faces(_dual_nerve(w, gens), char).items():
                t.add(dim + 1, j, r)
    return t


def _dual_nerve(w: int, gens: list[int]) -> list[int]:
    """Nerve of the facets W minus N of the Alexander dual of the restriction to W.

    Faces are sets of non-faces N (supports inside W, N != W) whose union is
    not all of W.  Its homology in dimension i - 1 equals that of the
    restriction in dimension |W| - i - 2.
    """
    inside = [g for g in gens if g & w == g and g != w]
    out = [0]
    stack = [(0, 0, 0)]
    while stack:
        face, union, start = stack.pop()
        for k in range(start, len(inside)):
            nu = union | inside[k]
            if nu == w:
                continue
            nf = face | 1 << k
            out.append(nf)
            stack.append((nf, nu, k + 1))
    return out


HOCHSTER_MODES = ("auto", "literal", "dual")


def hochster_mode(n_vars: int, n_gens: int, limits: Limits, mode: str = "auto") -> str:
    """Literal restrictions up to the variable limit, the dual nerve form beyond it."""
    if mode not in HOCHSTER_MODES:
        raise ValueError(f"unknown Hochster mode {mode!r}")
    if mode != "auto":
        return mode
    if n_vars <= limits.hochster_vars:
        return "literal"
    if n_gens <= limits.lcm_gens:
        return "dual"
    raise LimitExceeded(
        f"Hochster engine refuses {n_vars} variables (limit {limits.hochster_vars}) "
        f"with {n_gens} generators (dual form limit {limits.lcm_gens})"
    )


def betti_hochster(
    i: MonomialIdeal, char: int = 0, limits: Limits = DEFAULT_LIMITS, jobs: int = 1, mode: str = "auto"
) -> BettiTable:
    """Hochster's formula over the vertex sets W that are unions of generator supports.

    ``literal`` computes the homology of each restriction from its faces;
    ``dual`` uses Alexander duality and the nerve of the dual's facets,
    which stays small when there are many variables but few generators.
    """
    check_char(char)
    _require_squarefree(i)
    _reject_trivial(i)
    n = len(i.ring_vars)
    gens = _gen_masks(i)
    mode = hochster_mode(n, len(gens), limits, mode)
    if any(g == 0 for g in gens):
        return _unit_table()
    faces = np.array(_independent_faces(n, gens), dtype=np.int64) if mode == "literal" else None
    ws = _support_unions(gens)
    table = BettiTable()
    if jobs > 1 and len(ws) > 64:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [ws[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for part in ex.map(_hochster_chunk, chunks, [faces] * jobs, [gens] * jobs, [char] * jobs):
                table.merge(part)
    else:
        table = _hochster_chunk(ws, faces, gens, char)
    table.entries = dict(sorted(table.entries.items()))
    return table


# -- lcm lattice ----------------------------------------------------------

def _exponents(i: MonomialIdeal) -> np.ndarray:
    return np.array(i.exponent_matrix(), dtype=np.int64).reshape(len(i.gens), len(i.ring_vars))


def lcm_lattice(gens: np.ndarray, cap: int | None = None) -> np.ndarray:
    """All lcms of nonempty generator subsets, as rows of an exponent matrix."""
    elems = np.unique(gens, axis=0)
    frontier = elems
    seen = {row.tobytes() for row in elems}
    while len(frontier):
        cand = np.maximum(frontier[:, None, :], gens[None, :, :]).reshape(-1, gens.shape[1])
        cand = np.unique(cand, axis=0)
        fresh = [row for row in cand if row.tobytes() not in seen]
        for row in fresh:
            seen.add(row.tobytes())
        frontier = np.array(fresh, dtype=np.int64).reshape(-1, gens.shape[1])
        elems = np.concatenate([elems, frontier])
        if cap is not None and len(elems) > cap:
            raise LimitExceeded(f"lcm lattice has more than {cap} elements")
    return elems


def _divides_matrix(gens: np.ndarray, elems: np.ndarray) -> np.ndarray:
    return (gens[None, :, :] <= elems[:, None, :]).all(axis=2)


def _mask_rows(div: np.ndarray) -> list[int]:
    out = []
    for row in div:
        m = 0
        for k in np.flatnonzero(row):
            m |= 1 << int(k)
        out.append(m)
    return out


def _interval_faces(b: np.ndarray, atoms: list[int], gens: np.ndarray, method: str,
                    lattice: dict[int, np.ndarray] | None = None, bmask: int = 0) -> list[int]:
    """A complex whose reduced homology is that of the open interval (0, b)."""
    if method == "atoms":
        tight = []
        supp = 0
        for k, x in enumerate(b):
            if x:
                supp |= 1 << k
        for a in atoms:
            t = 0
            for k in np.flatnonzero(gens[a] == b):
                t |= 1 << int(k)
            tight.append(t & supp)
        # faces: atom sets whose lcm is strictly below b
        out = [0]
        stack = [(0, 0, 0)]
        while stack:
            face, cover, start = stack.pop()
            for k in range(start, len(atoms)):
                nc = cover | tight[k]
                if nc == supp:
                    continue
                nf = face | 1 << k
                out.append(nf)
                stack.append((nf, nc, k + 1))
        return out
    if method == "coatoms":
        coatoms = _coatom_masks(b, atoms, gens)
        out = [0]
        stack = [(0, -1, 0)]
        while stack:
            face, meet, start = stack.pop()
            for k in range(start, len(coatoms)):
                nm = meet & coatoms[k]
                if not nm:
                    continue
                nf = face | 1 << k
                out.append(nf)
                stack.append((nf, nm, k + 1))
        return out
    if method == "order":
        assert lattice is not None
        # chains of the open interval; a proper superset always sorts later
        below = sorted((m for m in lattice if m != bmask and m & bmask == m), key=_popcount)
        out = [0]
        stack = [(1 << k, k) for k in range(len(below))]
        while stack:
            face, top = stack.pop()
            out.append(face)
            tm = below[top]
            for k in range(top + 1, len(below)):
                if below[k] != tm and below[k] & tm == tm:
                    stack.append((face | 1 << k, k))
        return out
    raise ValueError(f"unknown interval method {method!r}")


def _coatom_masks(b: np.ndarray, atoms: list[int], gens: np.ndarray) -> list[int]:
    """Coatoms of [0, b] as sets of atoms: for each variable, the atoms not tight there."""
    cands = set()
    for k, x in enumerate(b):
        if not x:
            continue
        m = 0
        for a in atoms:
            if gens[a][k] < x:
                m |= 1 << a
        if m:
            cands.add(_close(m, atoms, gens))
    cands.discard(_mask_of(atoms))
    return sorted(c for c in cands if not any(c != d and c & d == c for d in cands))


def _mask_of(atoms: list[int]) -> int:
    m = 0
    for a in atoms:
        m |= 1 << a
    return m


def _close(m: int, atoms: list[int], gens: np.ndarray) -> int:
    """Atoms dividing the lcm of the atom set ``m``."""
    top = gens[list(_bits(m))].max(axis=0)
    out = 0
    for a in atoms:
        if (gens[a] <= top).all():
            out |= 1 << a
    return out


def betti_lcm(
    i: MonomialIdeal, char: int = 0, limits: Limits = DEFAULT_LIMITS, method: str = "coatoms"
) -> BettiTable:
    check_char(char)
    _reject_trivial(i)
    if i.is_unit:
        return _unit_table()
    m = len(i.gens)
    if m > limits.lcm_gens:
        raise LimitExceeded(f"lcm engine refuses {m} generators (limit {limits.lcm_gens})")
    gens = _exponents(i)
    elems = lcm_lattice(gens, limits.lattice_elements)
    masks = _mask_rows(_divides_matrix(gens, elems))
    lattice = dict(zip(masks, elems)) if method == "order" else None
    table = BettiTable()
    for bmask, b in zip(masks, elems):
        atoms = list(_bits(bmask))
        deg = int(b.sum())
        if len(atoms) == 1:
            table.add(0, deg, 1)
            continue
        faces = _interval_faces(b, atoms, gens, method, lattice, bmask)
        for dim, r in homology_of_faces(faces, char).items():
            table.add(dim + 1, deg, r)
    table.entries = dict(sorted(table.entries.items()))
    return table


# -- upper Koszul complexes ----------------------------------------------

def betti_koszul(i: MonomialIdeal, char: int = 0, limits: Limits = DEFAULT_LIMITS) -> BettiTable:
    check_char(char)
    _reject_trivial(i)
    if i.is_unit:
        return _unit_table()
    gens = _exponents(i)
    used = int((gens.sum(axis=0) > 0).sum())
    if used > limits.koszul_vars:
        raise LimitExceeded(f"Koszul engine refuses {used} variables (limit {limits.koszul_vars})")
    elems = lcm_lattice(gens, limits.lattice_elements)
    subset_cache: dict[int, np.ndarray] = {}
    table = BettiTable()
    for b in elems:
        supp = np.flatnonzero(b)
        s = len(supp)
        ind = subset_cache.get(s)
        if ind is None:
            # row k is the indicator of the subset encoded by the bits of k
            ind = (np.arange(1 << s)[:, None] >> np.arange(s)[None, :]) & 1
            subset_cache[s] = ind
        q = np.repeat(b[None, :], len(ind), axis=0)
        q[:, supp] -= ind
        member = (q[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
        if member[-1]:
            continue  # the full simplex on supp(b) is acyclic
        faces = np.flatnonzero(member).tolist()
        if not faces:
            continue
        deg = int(b.sum())
        for dim, r in homology_of_faces(faces, char).items():
            table.add(dim + 1, deg, r)
    table.entries = dict(sorted(table.entries.items()))
    return table


# -- front door ------------------------------------------------------------

def _reject_trivial(i: MonomialIdeal) -> None:
    if i.is_zero:
        raise IdealError("the zero ideal has no resolution to measure")


def _unit_table() -> BettiTable:
    return BettiTable({(0, 0): 1})


@dataclass(frozen=True)
class RegularityResult:
    regularity: int
    table: BettiTable
    engine: str
    engines_run: tuple[str, ...]


def _run(name: str, i: MonomialIdeal, char: int, limits: Limits, jobs: int) -> BettiTable:
    if name == "hochster":
        target = i if all(g.is_squarefree for g in i.gens) else polarize(i).target
        return betti_hochster(target, char, limits, jobs)
    if name == "lcm":
        return betti_lcm(i, char, limits)
    if name == "koszul":
        return betti_koszul(i, char, limits)
    raise ValueError(f"unknown engine {name!r}")


def _fits(name: str, i: MonomialIdeal, limits: Limits) -> bool:
    if name == "hochster":
        pol = i if all(g.is_squarefree for g in i.gens) else polarize(i).target
        try:
            hochster_mode(len(pol.ring_vars), len(pol.gens), limits)
        except LimitExceeded:
            return False
        return True
    if name == "lcm":
        return len(i.gens) <= limits.lcm_gens
    if name == "koszul":
        used = {v for g in i.gens for v in g.support}
        return len(used) <= limits.koszul_vars
    return False


def choose_engines(i: MonomialIdeal, engine: str, limits: Limits) -> tuple[str, ...]:
    """Engines to run for a request; ``both`` picks two independent ones."""
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; expected one of {', '.join(ENGINES)}")
    if engine == "auto":
        for name in ("hochster", "lcm", "koszul"):
            if _fits(name, i, limits):
                return (name,)
        raise LimitExceeded("ideal exceeds the limits of every engine")
    if engine == "both":
        picked = [name for name in ("hochster", "lcm", "koszul") if _fits(name, i, limits)]
        if len(picked) < 2:
            raise LimitExceeded("fewer than two engines are within limits for a cross-checked run")
        return tuple(picked[:2])
    return (engine,)


def betti_table(
    i: MonomialIdeal,
    engine: str = "auto",
    char: int = 0,
    limits: Limits = DEFAULT_LIMITS,
    jobs: int = 1,
) -> RegularityResult:
    check_char(char)
    _reject_trivial(i)
    names = choose_engines(i, engine, limits)
    tables = [_run(name, i, char, limits, jobs) for name in names]
    for name, t in zip(names[1:], tables[1:]):
        if t != tables[0]:
            raise EngineMismatch(
                f"{names[0]} and {name} disagree: {tables[0].rows()} vs {t.rows()}"
            )
    return RegularityResult(tables[0].regularity, tables[0], engine, names)


def regularity(
    i: MonomialIdeal,
    engine: str = "auto",
    char: int = 0,
    limits: Limits = DEFAULT_LIMITS,
    jobs: int = 1,
) -> int:
    return betti_table(i, engine, char, limits, jobs).regularity


def has_linear_resolution(
    i: MonomialIdeal, char: int = 0, engine: str = "auto", limits: Limits = DEFAULT_LIMITS
) -> bool:
    _reject_trivial(i)
    degs = {g.degree for g in i.gens}
    if len(degs) != 1:
        return False
    return regularity(i, engine, char, limits) == degs.pop()

