"""Brute-force representations of the equioriented quiver A_q.

The quiver has vertices 1..q and one arrow ``v+1 -> v`` for each v < q.
A representation stores a vector space dimension per vertex and one matrix
per arrow.  Hom spaces are computed by solving the commutativity system
directly, and kernels and cokernels are built as honest subquotient
representations.  Nothing here knows about polygons or closed-form rules,
which is what makes it usable as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation
from .linalg import identity, matmul, nullspace, rank, rref, transpose


@dataclass(frozen=True)
class Rep:
    q: int
    dims: tuple  # dims[v - 1] for v = 1..q
    maps: tuple  # maps[v - 1] is the matrix of v+1 -> v, shape dims[v-1] x dims[v]

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    def arrow(self, v: int):
        """Matrix of the arrow v+1 -> v."""
        return self.maps[v - 1]


def interval_rep(a: int, b: int, q: int) -> Rep:
    if not 1 <= a <= b <= q:
        raise ValueError(f"[{a},{b}] is not an interval of 1..{q}")
    dims = tuple(int(a <= v <= b) for v in range(1, q + 1))
    maps = tuple(
        [[Fraction(1)]] if a <= v and v + 1 <= b else _zero(dims[v - 1], dims[v])
        for v in range(1, q)
    )
    return Rep(q, dims, maps)


def _zero(r: int, c: int):
    return [[Fraction(0)] * c for _ in range(r)]


@dataclass(frozen=True)
class Morphism:
    source: Rep
    target: Rep
    blocks: tuple  # blocks[v - 1] has shape target.dim(v) x source.dim(v)

    def at(self, v: int):
        return self.blocks[v - 1]


def hom_basis(X: Rep, Y: Rep) -> list[Morphism]:
    """Basis of Hom(X, Y) from the linear system Y_a f_{v+1} = f_v X_a."""
    q = X.q
    offsets, total = [], 0
    for v in range(1, q + 1):
        offsets.append(total)
        total += Y.dim(v) * X.dim(v)

    def var(v, r, c):
        return offsets[v - 1] + r * X.dim(v) + c

    rows = []
    for v in range(1, q):
        ya, xa = Y.arrow(v), X.arrow(v)
        # entry (r, c) of  Y_a f_{v+1} - f_v X_a, a matrix Y_v x X_{v+1}
        for r in range(Y.dim(v)):
            for c in range(X.dim(v + 1)):
                row = [Fraction(0)] * total
                for t in range(Y.dim(v + 1)):
                    row[var(v + 1, t, c)] += ya[r][t]
                for t in range(X.dim(v)):
                    row[var(v, r, t)] -= xa[t][c]
                if any(row):
                    rows.append(row)
    basis = []
    for vec in nullspace(rows, total):
        blocks = []
        for v in range(1, q + 1):
            blocks.append([[vec[var(v, r, c)] for c in range(X.dim(v))] for r in range(Y.dim(v))])
        basis.append(Morphism(X, Y, tuple(blocks)))
    return basis


def hom_dim(X: Rep, Y: Rep) -> int:
    return len(hom_basis(X, Y))


def euler_form(X: Rep, Y: Rep) -> int:
    vertices = sum(X.dim(v) * Y.dim(v) for v in range(1, X.q + 1))
    arrows = sum(X.dim(v + 1) * Y.dim(v) for v in range(1, X.q))
    return vertices - arrows


def ext1_dim(X: Rep, Y: Rep) -> int:
    # hereditary: dim Hom - dim Ext^1 is the Euler form
    return hom_dim(X, Y) - euler_form(X, Y)


def compose(g: Morphism, f: Morphism) -> Morphism:
    return Morphism(f.source, g.target,
                    tuple(matmul(g.at(v), f.at(v)) if g.at(v) and f.at(v) and f.at(v)[0]
                          else _zero(g.target.dim(v), f.source.dim(v))
                          for v in range(1, f.source.q + 1)))


def _flatten(f: Morphism):
    return [x for block in f.blocks for row in block for x in row]


def _column_basis(rows_as_vectors, dim):
    """Basis of the span of the given vectors inside k^dim (as vectors)."""
    if not rows_as_vectors:
        return []
    red, _ = rref(rows_as_vectors, dim)
    return red


def _coords(basis, vec):
    """Coordinates of ``vec`` in the span of ``basis`` (rows), which must contain it."""
    if not basis:
        if any(vec):
            raise InvariantViolation("vector outside the expected subspace")
        return []
    # solve sum c_t basis[t] = vec
    n = len(basis)
    rows = [[basis[t][k] for t in range(n)] + [vec[k]] for k in range(len(vec))]
    red, pivots = rref(rows, n + 1)
    if n in pivots:
        raise InvariantViolation("vector outside the expected subspace")
    sol = [Fraction(0)] * n
    for row, pc in zip(red, pivots):
        sol[pc] = row[n]
    return sol


def kernel(f: Morphism) -> Rep:
    X = f.source
    q = X.q
    bases = []
    for v in range(1, q + 1):
        block = f.at(v)
        if X.dim(v) == 0:
            bases.append([])
        elif not block:
            bases.append(identity(X.dim(v)))
        else:
            bases.append(nullspace(block, X.dim(v)))
    maps = []
    for v in range(1, q):
        src = bases[v]  # basis at v+1
        tgt = bases[v - 1]
        xa = X.arrow(v)
        cols = []
        for vec in src:
            image = [sum((xa[r][c] * vec[c] for c in range(len(vec))), Fraction(0))
                     for r in range(X.dim(v))]
            cols.append(_coords(tgt, image))
        maps.append(transpose(cols, len(tgt)) if cols else _zero(len(tgt), 0))
    return Rep(q, tuple(len(b) for b in bases), tuple(maps))


def cokernel(f: Morphism) -> Rep:
    Y = f.target
    q = Y.q
    images = []
    for v in range(1, q + 1):
        block = f.at(v)
        cols = transpose(block) if block and block[0] else []
        images.append(_column_basis(cols, Y.dim(v)))
    # complement: standard unit vectors at non-pivot coordinates of the image
    keeps, projections = [], []
    for v in range(1, q + 1):
        d = Y.dim(v)
        red = images[v - 1]
        pivots = []
        for row in red:
            pivots.append(next(k for k, x in enumerate(row) if x != 0))
        keep = [k for k in range(d) if k not in pivots]
        keeps.append(keep)
        projections.append(red)
    maps = []
    for v in range(1, q):
        ya = Y.arrow(v)
        src_keep, tgt_keep = keeps[v], keeps[v - 1]
        tgt_image = projections[v - 1]
        block = []
        for c in src_keep:
            image = [ya[r][c] for r in range(Y.dim(v))]
            block.append(_reduce_mod(image, tgt_image, tgt_keep))
        maps.append(transpose(block, len(tgt_keep)) if block else _zero(len(tgt_keep), 0))
    return Rep(q, tuple(len(k) for k in keeps), tuple(maps))


def _reduce_mod(vec, image_rref, keep):
    """Coordinates of ``vec`` modulo the image, on the complement spanned by ``keep``."""
    v = list(vec)
    for row in image_rref:
        pc = next(k for k, x in enumerate(row) if x != 0)
        if v[pc] != 0:
            f = v[pc]
            v = [a - f * b for a, b in zip(v, row)]
    return [v[k] for k in keep]


def thin_summands(R: Rep) -> list[tuple]:
    """Split a thin representation (all dimensions at most 1) into intervals."""
    if any(d > 1 for d in R.dims):
        raise InvariantViolation(f"representation with dimension vector {R.dims} is not thin")
    out = []
    start = None
    for v in range(1, R.q + 1):
        if R.dim(v) == 0:
            if start is not None:
                out.append((start, v - 1))
                start = None
            continue
        if start is None:
            start = v
        elif R.arrow(v - 1)[0][0] == 0:
            out.append((start, v - 1))
            start = v
    if start is not None:
        out.append((start, R.q))
    return out


def is_injective_morphism(f: Morphism) -> bool:
    return all(rank(f.at(v), f.source.dim(v)) == f.source.dim(v) if f.source.dim(v) else True
               for v in range(1, f.source.q + 1))


def is_surjective_morphism(f: Morphism) -> bool:
    return all(rank(f.at(v), f.source.dim(v)) == f.target.dim(v) if f.target.dim(v) else True
               for v in range(1, f.source.q + 1))


def all_intervals(q: int) -> list[tuple]:
    return [(a, b) for a in range(1, q + 1) for b in range(a, q + 1)]


def irreducible_dim(X: Rep, Y: Rep, middles) -> int:
    """dim rad(X,Y)/rad^2(X,Y) for non-isomorphic bricks X, Y.

    ``middles`` lists the indecomposables Z other than X and Y through
    which radical maps can factor.
    """
    basis = hom_basis(X, Y)
    if not basis:
        return 0
    composites = []
    for Z in middles:
        for f in hom_basis(X, Z):
            for g in hom_basis(Z, Y):
                composites.append(_flatten(compose(g, f)))
    length = len(_flatten(basis[0]))
    return len(basis) - rank(composites, length) if composites else len(basis)


def ar_translate(X: Rep, candidates: list[Rep]) -> Rep | None:
    """The unique candidate Y with dim Hom(Z, Y) = dim Ext^1(X, Z) for all candidates Z.

    Returns None when every such dimension vanishes (X projective).
    """
    ext = [ext1_dim(X, Z) for Z in candidates]
    if not any(ext):
        return None
    found = [Y for Y in candidates if [hom_dim(Z, Y) for Z in candidates] == ext]
    if len(found) != 1:
        raise InvariantViolation(f"AR formula does not single out tau of {X.dims}")
    return found[0]
