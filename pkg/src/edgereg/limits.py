"""Search-size limits shared by the exact engines.

Everything in this package is exact; when an input is too large for the
exhaustive routines they refuse with :class:`LimitExceeded` rather than
returning an approximation.
"""

from __future__ import annotations

from dataclasses import dataclass


class LimitExceeded(RuntimeError):
    """An exact computation was refused because the input exceeds a configured limit."""


@dataclass(frozen=True)
class Limits:
    hochster_vars: int = 16
    lcm_gens: int = 24
    koszul_vars: int = 10
    lattice_elements: int = 200_000
    # co-chordal cover search: triangulation DP up to this many vertices,
    # edge-growth enumeration up to this many edges otherwise
    cochord_vertices: int = 10
    cochord_edges: int = 24
    pattern_vertices: int = 16

    def __post_init__(self) -> None:
        for name, value in self.__dict__.items():
            if value <= 0:
                raise ValueError(f"limit {name} must be positive")


DEFAULT_LIMITS = Limits()
