"""Finite stable translation quivers.

Covers the diagonal quivers of polygons, sectional paths and m-th powers,
component and orbit decompositions, and finite quotients of ZA_p by
auto-equivalences of the form tau^{-s} Sigma^r.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Hashable, Iterable

from .errors import DegenerateQuotient, InvariantViolation, UnknownVertex
from .polygon import Diagonal, Edge, PolygonConfig, enumerate_m_diagonals, normalize, rotate_tau_m


class TranslationQuiver:
    """Quiver with an arrow multiset and a bijective translation ``tau``.

    Vertices are kept in sorted order so every derived listing is
    deterministic.
    """

    def __init__(self, vertices: Iterable[Hashable], arrows, tau: dict, check: bool = True):
        self.vertices = tuple(sorted(set(vertices)))
        self.arrows = Counter({a: c for a, c in Counter(arrows).items() if c})
        self.tau = dict(tau)
        self._vset = frozenset(self.vertices)
        self._succ = defaultdict(list)
        self._pred = defaultdict(list)
        for (u, v), c in sorted(self.arrows.items()):
            self._succ[u].append((v, c))
            self._pred[v].append((u, c))
        self.tau_inv = {w: v for v, w in self.tau.items()}
        if check:
            self.check_invariants()

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self._vset

    def __eq__(self, other):
        if not isinstance(other, TranslationQuiver):
            return NotImplemented
        return (self.vertices == other.vertices and self.arrows == other.arrows
                and self.tau == other.tau)

    def __repr__(self):
        return f"TranslationQuiver(|V|={len(self)}, |A|={sum(self.arrows.values())})"

    def successors(self, v):
        return [w for w, _ in self._succ.get(v, ())]

    def predecessors(self, v):
        return [u for u, _ in self._pred.get(v, ())]

    def out_arrows(self, v):
        return list(self._succ.get(v, ()))

    def in_arrows(self, v):
        return list(self._pred.get(v, ()))

    def arrow_count(self, u, v) -> int:
        return self.arrows.get((u, v), 0)

    def out_degree(self, v) -> int:
        return sum(c for _, c in self._succ.get(v, ()))

    def in_degree(self, v) -> int:
        return sum(c for _, c in self._pred.get(v, ()))

    def max_multiplicity(self) -> int:
        return max(self.arrows.values(), default=0)

    def check_invariants(self):
        for (u, v) in self.arrows:
            if u not in self._vset or v not in self._vset:
                raise InvariantViolation(f"arrow {u}->{v} leaves the vertex set")
        if set(self.tau) != self._vset or set(self.tau.values()) != self._vset:
            raise InvariantViolation("tau is not a bijection of the vertex set")
        for (u, v), c in self.arrows.items():
            if self.arrows.get((self.tau[v], u), 0) != c:
                raise InvariantViolation(f"mesh axiom fails for arrow {u}->{v}")

    def subquiver(self, vertices) -> "TranslationQuiver":
        vs = set(vertices)
        arrows = {(u, v): c for (u, v), c in self.arrows.items() if u in vs and v in vs}
        return TranslationQuiver(vs, arrows, {v: self.tau[v] for v in vs})

    def relabel(self, mapping: dict) -> "TranslationQuiver":
        arrows = Counter()
        for (u, v), c in self.arrows.items():
            arrows[(mapping[u], mapping[v])] += c
        tau = {mapping[v]: mapping[w] for v, w in self.tau.items()}
        return TranslationQuiver(mapping.values(), arrows, tau)


@dataclass(frozen=True, order=True)
class ZACoordinate:
    k: int
    i: int

    @property
    def id(self) -> str:
        return f"{self.k}:{self.i}"

    def __str__(self):
        return f"[{self.k},{self.i}]"


@dataclass(frozen=True, order=True)
class QuotientSpec:
    """Presentation ZA_p / (tau^{-s} Sigma^r)."""

    p: int
    r: int
    s: int

    def __post_init__(self):
        if self.p < 1 or self.r < 0 or self.s < 0 or (self.r, self.s) == (0, 0):
            raise ValueError(f"invalid quotient presentation {self}")

    @property
    def is_moebius(self) -> bool:
        return self.r % 2 == 1

    @property
    def column_shift(self) -> int:
        # tau^{-s} Sigma^r = tau^{-c} Sigma^{r mod 2}, since Sigma^2 = tau^{-(p+1)}
        return self.s + (self.r // 2) * (self.p + 1)

    @property
    def vertex_count(self) -> int:
        if self.is_moebius:
            return self.p * (2 * self.column_shift + self.p + 1) // 2
        return self.p * self.column_shift

    def __str__(self):
        return f"ZA_{self.p}/tau^-{self.s}Sigma^{self.r}"


def za_tau(v: ZACoordinate, times: int = 1) -> ZACoordinate:
    return ZACoordinate(v.k - times, v.i)


def za_sigma(v: ZACoordinate, p: int) -> ZACoordinate:
    return ZACoordinate(v.k + v.i, p + 1 - v.i)


def za_phi(v: ZACoordinate, spec: QuotientSpec) -> ZACoordinate:
    w = za_tau(v, -spec.s)
    for _ in range(spec.r):
        w = za_sigma(w, spec.p)
    return w


def za_successors(v: ZACoordinate, p: int):
    out = []
    if v.i < p:
        out.append(ZACoordinate(v.k, v.i + 1))
    if v.i > 1:
        out.append(ZACoordinate(v.k + 1, v.i - 1))
    return out


def _za_period(spec: QuotientSpec) -> int:
    # column period of phi (even r) or of phi^2 (odd r)
    c = spec.column_shift
    return 2 * c + spec.p + 1 if spec.is_moebius else c


def za_canonical(v: ZACoordinate, spec: QuotientSpec) -> ZACoordinate:
    """Canonical representative of the phi-orbit of ``v``."""
    period = _za_period(spec)
    a = ZACoordinate(v.k % period, v.i)
    if not spec.is_moebius:
        return a
    w = za_phi(v, spec)
    return min(a, ZACoordinate(w.k % period, w.i))


def build_za_quotient(spec: QuotientSpec) -> TranslationQuiver:
    p = spec.p
    period = _za_period(spec)
    if period <= 0:
        raise DegenerateQuotient(f"{spec} does not act with positive shift")
    for i in range(1, p + 1):
        v = ZACoordinate(0, i)
        if za_phi(v, spec) == v:
            raise DegenerateQuotient(f"{spec} has a fixed point {v}")
    vertices = {za_canonical(ZACoordinate(k, i), spec) for k in range(period) for i in range(1, p + 1)}
    arrows = Counter()
    for v in vertices:
        for w in za_successors(v, p):
            arrows[(v, za_canonical(w, spec))] += 1
    tau = {v: za_canonical(za_tau(v), spec) for v in vertices}
    if len(vertices) != spec.vertex_count:
        raise InvariantViolation(f"{spec}: {len(vertices)} orbits, expected {spec.vertex_count}")
    return TranslationQuiver(vertices, arrows, tau)


def build_gamma_m(cfg: PolygonConfig) -> TranslationQuiver:
    N, m = cfg.N, cfg.m
    vertices = enumerate_m_diagonals(cfg)
    vset = set(vertices)
    arrows = Counter()
    for d in vertices:
        for target in (normalize(d.i, d.j + m, N), normalize(d.i + m, d.j, N)):
            if isinstance(target, Edge):
                continue
            if target in vset:
                arrows[(d, target)] += 1
    tau = {d: rotate_tau_m(d, cfg) for d in vertices}
    return TranslationQuiver(vertices, arrows, tau)


def sectional_paths(Q: TranslationQuiver, start, length: int) -> list[tuple]:
    if start not in Q:
        raise UnknownVertex(start)
    paths = []
    stack = [(start,)]
    while stack:
        path = stack.pop()
        if len(path) == length + 1:
            paths.append(path)
            continue
        for w in Q.successors(path[-1]):
            if len(path) >= 2 and Q.tau[w] == path[-2]:
                continue
            stack.append(path + (w,))
    return sorted(paths)


def _path_multiplicity(Q: TranslationQuiver, path) -> int:
    mult = 1
    for u, v in zip(path, path[1:]):
        mult *= Q.arrow_count(u, v)
    return mult


def tau_power(Q: TranslationQuiver, m: int) -> dict:
    out = {}
    for v in Q.vertices:
        w = v
        for _ in range(m):
            w = Q.tau[w]
        out[v] = w
    return out


def power(Q: TranslationQuiver, m: int) -> TranslationQuiver:
    arrows = Counter()
    for v in Q.vertices:
        for path in sectional_paths(Q, v, m):
            arrows[(path[0], path[-1])] += _path_multiplicity(Q, path)
    return TranslationQuiver(Q.vertices, arrows, tau_power(Q, m))


def _union_find_groups(vertices, links):
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in links:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups = defaultdict(list)
    for v in vertices:
        groups[find(v)].append(v)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def connected_components(Q: TranslationQuiver) -> list[TranslationQuiver]:
    """Split ``Q`` into its connected translation subquivers.

    Pieces are first formed from arrows alone; arrowless vertices are then
    joined along tau, so an arrowless tau-cycle counts as one component.
    A piece that carries arrows must already be tau-stable.
    """
    pieces = _union_find_groups(Q.vertices, Q.arrows)
    for piece in pieces:
        members = set(piece)
        if any(Q.out_degree(v) or Q.in_degree(v) for v in piece):
            if any(Q.tau[v] not in members for v in piece):
                raise InvariantViolation("tau does not preserve an arrow-connected component")
    links = [(v, Q.tau[v]) for v in Q.vertices]
    groups = _union_find_groups(Q.vertices, list(Q.arrows) + links)
    return [Q.subquiver(g) for g in groups]


def tau_orbits(Q: TranslationQuiver) -> list[tuple]:
    seen = set()
    orbits = []
    for v in Q.vertices:
        if v in seen:
            continue
        orbit = [v]
        w = Q.tau[v]
        while w != v:
            orbit.append(w)
            w = Q.tau[w]
        seen.update(orbit)
        orbits.append(tuple(sorted(orbit)))
    return orbits


def tau_order(Q: TranslationQuiver) -> int:
    from math import lcm

    out = 1
    for orbit in tau_orbits(Q):
        out = lcm(out, len(orbit))
    return out


def gamma_of_diagonals(N: int) -> TranslationQuiver:
    """Diagonal quiver of the N-gon with m = 1, i.e. of type A_{N-3}."""
    return build_gamma_m(PolygonConfig(N - 2, 1))


def component_containing(components: list[TranslationQuiver], v) -> int:
    for idx, comp in enumerate(components):
        if v in comp:
            return idx
    raise UnknownVertex(v)


__all__ = [
    "Diagonal", "QuotientSpec", "TranslationQuiver", "ZACoordinate", "build_gamma_m",
    "build_za_quotient", "za_canonical", "component_containing", "connected_components", "gamma_of_diagonals",
    "power", "sectional_paths", "tau_orbits", "tau_power", "za_phi", "za_sigma",
]
