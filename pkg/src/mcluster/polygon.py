"""Exact integer model of the N-gon and its (m-)diagonals.

Vertices are the residues 1..N.  A chord between adjacent vertices is a
boundary edge; ``normalize`` returns an :class:`Edge` marker for it, which
the rest of the package treats as the zero object.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BadAnchor, InvalidChord


@dataclass(frozen=True)
class PolygonConfig:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"n and m must be positive, got n={self.n}, m={self.m}")

    @property
    def N(self) -> int:
        return self.n * self.m + 2

    @property
    def rotation_step(self) -> Fraction:
        """Rotation angle of the m-translation, as a multiple of pi (2m/N)."""
        return Fraction(2 * self.m, self.N)

    def __str__(self):
        return f"n={self.n}, m={self.m}, N={self.N}"


@dataclass(frozen=True, order=True)
class Diagonal:
    i: int
    j: int

    @property
    def id(self) -> str:
        return f"{self.i}-{self.j}"

    @property
    def span(self) -> int:
        return self.j - self.i

    def endpoints(self):
        return (self.i, self.j)

    def __str__(self):
        return f"({self.i},{self.j})"


@dataclass(frozen=True)
class Edge:
    """Boundary edge of the polygon; stands for the zero object."""

    i: int
    j: int

    def __str__(self):
        return f"edge({self.i},{self.j})"


class Parity(enum.Enum):
    EE = "EE"
    OO = "OO"
    MIXED = "Mixed"


def reduce_vertex(a: int, N: int) -> int:
    r = a % N
    return r if r else N


def normalize(a: int, b: int, N: int) -> Diagonal | Edge:
    a, b = reduce_vertex(a, N), reduce_vertex(b, N)
    if a == b:
        raise InvalidChord(f"chord endpoints coincide modulo {N}: {a}")
    i, j = min(a, b), max(a, b)
    if j - i == 1 or j - i == N - 1:
        return Edge(i, j)
    return Diagonal(i, j)


def diagonal(a: int, b: int, N: int) -> Diagonal:
    """Like :func:`normalize` but refuses boundary edges."""
    d = normalize(a, b, N)
    if isinstance(d, Edge):
        raise InvalidChord(f"({a},{b}) is a boundary edge of the {N}-gon")
    return d


def is_m_diagonal(d: Diagonal, cfg: PolygonConfig) -> bool:
    # the two pieces have d.span + 1 and N - d.span + 1 sides
    return (d.span + 1) % cfg.m == 2 % cfg.m and (cfg.N - d.span + 1) % cfg.m == 2 % cfg.m


def crosses(d1: Diagonal, d2: Diagonal) -> bool:
    inside = [d1.i < x < d1.j for x in (d2.i, d2.j)]
    if d2.i in (d1.i, d1.j) or d2.j in (d1.i, d1.j):
        return False
    return inside[0] != inside[1]


def rotate(d: Diagonal, step: int, N: int) -> Diagonal:
    """Rotate by ``step`` vertices anticlockwise, i.e. subtract ``step``."""
    return diagonal(d.i - step, d.j - step, N)


def rotate_tau_m(d: Diagonal, cfg: PolygonConfig) -> Diagonal:
    return rotate(d, cfg.m, cfg.N)


def tau_m_order(cfg: PolygonConfig) -> int:
    """Number of applications of the m-rotation that give the identity on vertices."""
    return cfg.N // gcd(cfg.N, cfg.m)


def mirror(d: Diagonal, anchor: int, N: int) -> Diagonal:
    if anchor not in (d.i, d.j):
        raise BadAnchor(f"{anchor} is not an endpoint of {d}")
    free = d.j if anchor == d.i else d.i
    return diagonal(anchor, 2 * anchor + N - free, N)


def parity_class(d: Diagonal) -> Parity:
    pi, pj = d.i % 2, d.j % 2
    if pi != pj:
        return Parity.MIXED
    return Parity.EE if pi == 0 else Parity.OO


def all_diagonals(N: int) -> list[Diagonal]:
    return [Diagonal(i, j) for i in range(1, N + 1) for j in range(i + 2, N + 1)
            if not (i == 1 and j == N)]


def enumerate_m_diagonals(cfg: PolygonConfig) -> list[Diagonal]:
    return [d for d in all_diagonals(cfg.N) if is_m_diagonal(d, cfg)]


def is_central(d: Diagonal, N: int) -> bool:
    return 2 * d.span == N
