"""Mesh category of a finite stable translation quiver.

Morphisms are paths modulo the ideal generated by the mesh relations
``r_v = sum over arrows a: u -> v of a * sigma(a)`` where ``sigma(a)`` is
the partner arrow ``tau(v) -> u``.  The relations are homogeneous of path
length 2, so Hom spaces are graded by length.  For a fixed source ``x``
the graded pieces are built length by length: the degree ``l+1`` piece at
``y`` is the direct sum of the degree ``l`` pieces at the arrow sources,
divided by the image of the degree ``l-1`` piece at ``tau(y)`` under the
mesh relation.  This is exactly the path space modulo the ideal, computed
without listing paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundTooSmall, ModelInconsistency, TheoremViolation
from .linalg import matvec, quotient_projection
from .polygon import Diagonal, PolygonConfig, diagonal, normalize
from .tquiver import TranslationQuiver, build_gamma_m, connected_components, power, sectional_paths


class MeshAlgebra:
    def __init__(self, quiver: TranslationQuiver, bound: int | None = None):
        self.quiver = quiver
        self.bound = bound or max(len(quiver), 1)
        self._graded = {}
        # arrow copies: (u, v, k) for k < multiplicity
        self.arrow_copies = sorted((u, v, k) for (u, v), c in quiver.arrows.items() for k in range(c))
        self._into = {}
        for a in self.arrow_copies:
            self._into.setdefault(a[1], []).append(a)

    def partner(self, arrow):
        """The mesh partner tau(v) -> u of the arrow u -> v (same copy index)."""
        u, v, k = arrow
        return (self.quiver.tau[v], u, k)

    def graded_dims(self, x) -> list[dict]:
        """dims[l][y] = dim of the length-l part of Hom(x, y)."""
        if x not in self._graded:
            bound = self.bound
            while True:
                try:
                    self._graded[x] = self._knit(x, bound)
                    break
                except BoundTooSmall:
                    bound *= 2
                    if bound > 64 * max(len(self.quiver), 1):
                        raise
        return self._graded[x]

    def _knit(self, x, bound: int) -> list[dict]:
        Q = self.quiver
        dims = [{x: 1}]
        into_current = {}  # arrow -> matrix H_{l-1}(source) -> H_l(target)
        while True:
            current = dims[-1]
            if not current:
                return dims[:-1]
            if len(dims) > bound:
                raise BoundTooSmall(f"paths from {x} survive beyond length {bound}")
            below_dims = dims[-2] if len(dims) >= 2 else {}
            nxt_dims, nxt_maps = {}, {}
            targets = sorted({a[1] for a in self.arrow_copies if a[0] in current})
            for y in targets:
                incoming = [a for a in self._into.get(y, []) if a[0] in current]
                offsets, total = {}, 0
                for a in incoming:
                    offsets[a] = total
                    total += current[a[0]]
                below = below_dims.get(Q.tau[y], 0)
                relations = []
                for g in range(below):
                    vec = [0] * total
                    for a in incoming:
                        sigma = self.partner(a)
                        if sigma not in into_current:
                            continue
                        for t, val in enumerate(matvec(into_current[sigma], _unit(below, g))):
                            vec[offsets[a] + t] += val
                    if any(vec):
                        relations.append(vec)
                proj = quotient_projection(relations, total)
                if proj:
                    nxt_dims[y] = len(proj)
                for a in incoming:
                    o, w = offsets[a], current[a[0]]
                    nxt_maps[a] = [row[o:o + w] for row in proj]
            into_current = nxt_maps
            dims.append(nxt_dims)

    def hom_dim(self, x, y) -> int:
        return sum(level.get(y, 0) for level in self.graded_dims(x))

    def rad_dim(self, x, y) -> int:
        return sum(level.get(y, 0) for level in self.graded_dims(x)[1:])

    def rad2_dim(self, x, y) -> int:
        return sum(level.get(y, 0) for level in self.graded_dims(x)[2:])



def _unit(n, k):
    return [1 if t == k else 0 for t in range(n)]


def mesh_hom_dim(A: MeshAlgebra, x, y) -> int:
    return A.hom_dim(x, y)


def irr_dim(A: MeshAlgebra, x, y) -> int:
    value = A.rad_dim(x, y) - A.rad2_dim(x, y)
    if value != A.quiver.arrow_count(x, y):
        raise ModelInconsistency(f"Irr({x},{y}) = {value} but there are "
                                 f"{A.quiver.arrow_count(x, y)} arrows")
    return value


@dataclass(frozen=True)
class PivotMove:
    pivot: int
    source: Diagonal
    target: Diagonal


@dataclass(frozen=True)
class PivotPath:
    moves: tuple

    @property
    def pivot(self) -> int:
        return self.moves[0].pivot

    def free_endpoints(self) -> list[int]:
        """Successive positions of the moving endpoint."""
        def free(d):
            return d.j if d.i == self.pivot else d.i
        return [free(self.moves[0].source)] + [free(mv.target) for mv in self.moves]


def arrow_to_pivot_moves(source: Diagonal, target: Diagonal, cfg: PolygonConfig) -> PivotPath:
    """Write an arrow of the m-diagonal quiver as m elementary moves about one pivot."""
    N, m = cfg.N, cfg.m
    for pivot, free in ((source.i, source.j), (source.j, source.i)):
        if normalize(pivot, free + m, N) == target:
            moves = []
            current = source
            for step in range(1, m + 1):
                nxt = diagonal(pivot, free + step, N)
                moves.append(PivotMove(pivot, current, nxt))
                current = nxt
            return PivotPath(tuple(moves))
    raise ValueError(f"{source} -> {target} is not an arrow for {cfg}")


def verify_sectional_irreducibles(cfg: PolygonConfig, with_mesh: bool = True) -> bool:
    """Arrows of the m-diagonal component are exactly the length-m sectional pairs.

    With ``with_mesh`` the irreducible dimensions of the component's mesh
    category are compared with the arrows as well.
    """
    big = build_gamma_m(PolygonConfig(cfg.n * cfg.m, 1))
    small = build_gamma_m(cfg)
    comps = connected_components(power(big, cfg.m))
    comp = next(c for c in comps if small.vertices[0] in c)
    if set(comp.vertices) != set(small.vertices) or comp.arrows != small.arrows:
        raise TheoremViolation(f"{cfg}: the m-diagonal component differs from the m-diagonal quiver")
    sectional = {(p[0], p[-1]) for v in comp.vertices for p in sectional_paths(big, v, cfg.m)
                 if p[-1] in comp}
    if sectional != set(small.arrows):
        raise TheoremViolation(f"{cfg}: arrows differ from length-{cfg.m} sectional pairs")
    if with_mesh:
        A = MeshAlgebra(small)
        for x in small.vertices:
            for y in small.vertices:
                if irr_dim(A, x, y) != int((x, y) in sectional):
                    raise TheoremViolation(f"{cfg}: Irr({x},{y}) disagrees with sectional paths")
    return True
