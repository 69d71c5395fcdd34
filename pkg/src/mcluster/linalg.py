"""Small exact linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`.  Sizes in this
package stay tiny, so plain Gaussian elimination is fast enough and keeps
every rank exact.
"""

from __future__ import annotations

from fractions import Fraction


def as_fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows, ncols: int | None = None):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    a = as_fractions(rows)
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(a)) if a[k][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        lead = a[r][c]
        a[r] = [x / lead for x in a[r]]
        for k in range(len(a)):
            if k != r and a[k][c] != 0:
                f = a[k][c]
                a[k] = [x - f * y for x, y in zip(a[k], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows, ncols: int | None = None) -> int:
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols: int):
    """Basis of {x : A x = 0} as a list of vectors."""
    if not rows:
        return [[Fraction(int(k == c)) for k in range(ncols)] for c in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def quotient_projection(relations, dim: int):
    """Matrix of k^dim -> k^dim / span(relations) in a coordinate complement.

    Returns a list of ``dim - rank`` rows, each of length ``dim``.
    """
    if not relations:
        return [[Fraction(int(r == c)) for c in range(dim)] for r in range(dim)]
    red, pivots = rref(relations, dim)
    keep = [c for c in range(dim) if c not in pivots]
    proj = [[Fraction(0)] * dim for _ in keep]
    index = {c: t for t, c in enumerate(keep)}
    for c in keep:
        proj[index[c]][c] = Fraction(1)
    for row, pc in zip(red, pivots):
        for c in keep:
            if row[c] != 0:
                proj[index[c]][pc] = -row[c]
    return proj


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)]
            for i in range(len(a))]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def transpose(a, nrows_if_empty: int = 0):
    if not a:
        return [[] for _ in range(nrows_if_empty)]
    return [list(col) for col in zip(*a)]


def identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
