"""Monomials and monomial ideals over a named variable set.

Ideals always hold their minimal generating set, so two ideals are equal
exactly when their generator sets are.  The zero ideal (no generators) and
the unit ideal (generated by 1) are both representable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .graph import Graph


class IdealError(ValueError):
    pass


@dataclass(frozen=True)
class Monomial:
    """A monomial as sorted (variable, positive exponent) pairs."""

    powers: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        clean: dict[str, int] = {}
        for v, e in self.powers:
            if not isinstance(e, int) or e < 0:
                raise IdealError(f"bad exponent {e!r} for {v!r}")
            if e:
                clean[v] = clean.get(v, 0) + e
        object.__setattr__(self, "powers", tuple(sorted(clean.items())))

    @classmethod
    def of(cls, mapping: Mapping[str, int] | None = None, **kw: int) -> "Monomial":
        items = dict(mapping or {})
        items.update(kw)
        return cls(tuple(items.items()))

    @classmethod
    def from_vars(cls, *names: str) -> "Monomial":
        """Product of the given variables, with repetition: ``from_vars('x', 'x', 'y')`` is x^2 y."""
        out: dict[str, int] = {}
        for v in names:
            out[v] = out.get(v, 0) + 1
        return cls(tuple(out.items()))

    @cached_property
    def exps(self) -> dict[str, int]:
        return dict(self.powers)

    def exp(self, var: str) -> int:
        return self.exps.get(var, 0)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.powers)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.powers)

    @property
    def is_one(self) -> bool:
        return not self.powers

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.powers + other.powers)

    def divides(self, other: "Monomial") -> bool:
        oe = other.exps
        return all(oe.get(v, 0) >= e for v, e in self.powers)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise IdealError(f"{other} does not divide {self}")
        se = dict(self.exps)
        for v, e in other.powers:
            se[v] -= e
        return Monomial(tuple(se.items()))

    def gcd(self, other: "Monomial") -> "Monomial":
        oe = other.exps
        return Monomial(tuple((v, min(e, oe.get(v, 0))) for v, e in self.powers))

    def lcm(self, other: "Monomial") -> "Monomial":
        out = dict(self.exps)
        for v, e in other.powers:
            out[v] = max(out.get(v, 0), e)
        return Monomial(tuple(out.items()))

    def vector(self, ring_vars: tuple[str, ...]) -> tuple[int, ...]:
        e = self.exps
        return tuple(e.get(v, 0) for v in ring_vars)

    def to_dict(self) -> dict[str, int]:
        return dict(self.powers)

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self.powers)

    def __repr__(self) -> str:
        return f"Monomial({self})"


ONE = Monomial()


def _sort_key(ring_vars: tuple[str, ...]):
    def key(m: Monomial):
        return (m.degree, tuple(-e for e in m.vector(ring_vars)))
    return key


@dataclass(frozen=True)
class MonomialIdeal:
    ring_vars: tuple[str, ...]
    gens: tuple[Monomial, ...] = field(default=())

    def __post_init__(self) -> None:
        ring = tuple(self.ring_vars)
        if len(set(ring)) != len(ring):
            raise IdealError("duplicate ring variable")
        rs = set(ring)
        for g in self.gens:
            extra = g.support - rs
            if extra:
                raise IdealError(f"generator {g} uses variables outside the ring: {sorted(extra)}")
        gens = _minimal(self.gens)
        object.__setattr__(self, "ring_vars", ring)
        object.__setattr__(self, "gens", tuple(sorted(gens, key=_sort_key(ring))))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(g.is_one for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    __contains__ = contains

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _same_ring(self, other)
        return MonomialIdeal(self.ring_vars, self.gens + other.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def with_gens(self, extra: Iterable[Monomial]) -> "MonomialIdeal":
        return MonomialIdeal(self.ring_vars, self.gens + tuple(extra))

    def gen_set(self) -> frozenset[Monomial]:
        return frozenset(self.gens)

    def exponent_matrix(self) -> list[tuple[int, ...]]:
        return [g.vector(self.ring_vars) for g in self.gens]

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def _minimal(gens: Iterable[Monomial]) -> list[Monomial]:
    uniq = sorted(set(gens), key=lambda m: m.degree)
    kept: list[Monomial] = []
    for m in uniq:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return kept


def _same_ring(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.ring_vars != b.ring_vars:
        raise IdealError("ideals live in different rings")


def minimalize(gens: Iterable[Monomial], ring_vars: Iterable[str]) -> MonomialIdeal:
    return MonomialIdeal(tuple(ring_vars), tuple(gens))


def edge_ideal(g: Graph, ring_vars: Iterable[str] | None = None) -> MonomialIdeal:
    ring = tuple(ring_vars) if ring_vars is not None else g.vertices
    return MonomialIdeal(ring, tuple(Monomial.from_vars(u, v) for u, v in g.edges))


def product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _same_ring(i, j)
    return MonomialIdeal(i.ring_vars, tuple(a * b for a in i.gens for b in j.gens))


def power(i: MonomialIdeal, k: int) -> MonomialIdeal:
    out = MonomialIdeal(i.ring_vars, (ONE,))
    for _ in range(k):
        out = product(out, i)
    return out


def colon(i: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The monomial colon ``(I : m)``, generated by ``g / gcd(g, m)``."""
    extra = m.support - set(i.ring_vars)
    if extra:
        raise IdealError(f"colon monomial uses variables outside the ring: {sorted(extra)}")
    return MonomialIdeal(i.ring_vars, tuple(g / g.gcd(m) for g in i.gens))


@dataclass(frozen=True)
class IdealStats:
    is_squarefree: bool
    max_gen_degree: int
    equigenerated: bool


def ideal_stats(i: MonomialIdeal) -> IdealStats:
    degs = {g.degree for g in i.gens}
    return IdealStats(
        is_squarefree=all(g.is_squarefree for g in i.gens),
        max_gen_degree=max(degs, default=0),
        equigenerated=len(degs) == 1,
    )


# -- polarization -----------------------------------------------------

def copy_name(var: str, k: int) -> str:
    return var if k == 1 else f"{var}⟨{k}⟩"


@dataclass(frozen=True)
class PolarizationMap:
    source: MonomialIdeal
    target: MonomialIdeal
    copies: tuple[tuple[tuple[str, int], str], ...]

    @cached_property
    def var_map(self) -> dict[tuple[str, int], str]:
        return dict(self.copies)

    @cached_property
    def origin(self) -> dict[str, str]:
        """Target variable -> the source variable it copies."""
        return {name: var for (var, _), name in self.copies}

    @property
    def fresh_vars(self) -> tuple[str, ...]:
        return tuple(name for (var, k), name in self.copies if k > 1)

    def depolarize(self, m: Monomial) -> Monomial:
        return Monomial(tuple((self.origin[v], e) for v, e in m.powers))


def polarize(i: MonomialIdeal) -> PolarizationMap:
    """Standard polarization: x^e becomes x * x⟨2⟩ * ... * x⟨e⟩."""
    top = {v: 0 for v in i.ring_vars}
    for g in i.gens:
        for v, e in g.powers:
            top[v] = max(top[v], e)
    copies: list[tuple[tuple[str, int], str]] = [((v, 1), v) for v in i.ring_vars]
    taken = set(i.ring_vars)
    for v in i.ring_vars:
        for k in range(2, top[v] + 1):
            name = copy_name(v, k)
            if name in taken:
                raise IdealError(f"polarization name clash on {name!r}")
            taken.add(name)
            copies.append(((v, k), name))
    cmap = dict(copies)
    new_gens = []
    for g in i.gens:
        new_gens.append(Monomial(tuple((cmap[(v, k)], 1) for v, e in g.powers for k in range(1, e + 1))))
    ring = tuple(name for _, name in copies)
    return PolarizationMap(i, MonomialIdeal(ring, tuple(new_gens)), tuple(copies))


# -- JSON interchange -------------------------------------------------

def ideal_to_dict(i: MonomialIdeal) -> dict:
    return {"vars": list(i.ring_vars), "gens": [g.to_dict() for g in i.gens]}


def ideal_to_json(i: MonomialIdeal) -> str:
    return json.dumps(ideal_to_dict(i))


def ideal_from_dict(obj: object) -> MonomialIdeal:
    if not isinstance(obj, dict) or "vars" not in obj or "gens" not in obj:
        raise IdealError("ideal JSON needs 'vars' and 'gens'")
    ring = obj["vars"]
    if not isinstance(ring, list) or not all(isinstance(v, str) for v in ring):
        raise IdealError("'vars' must be an array of strings")
    gens = []
    for g in obj["gens"]:
        if not isinstance(g, dict):
            raise IdealError(f"bad generator {json.dumps(g)}: expected an object")
        for v, e in g.items():
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise IdealError(f"bad exponent {json.dumps(e)} for {v!r}")
        gens.append(Monomial.of(g))
    return MonomialIdeal(tuple(ring), tuple(gens))


def ideal_from_json(text: str) -> MonomialIdeal:
    try:
        return ideal_from_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise IdealError(f"malformed JSON: {exc.msg}") from exc
