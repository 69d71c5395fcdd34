"""Triangulated structure of the cluster category of type A_q, q = N - 3.

Objects of the fundamental domain are modules over the equioriented A_q
quiver (arrows ``v+1 -> v``) together with the shifts of the projectives.
Indecomposable modules are intervals ``[a, b]``; the projective ``P_b`` is
``[1, b]``.  The dictionary with diagonals of the N-gon is

    (i, j), j < N   ->  [i, j - 2]
    (b + 1, N)      ->  Sigma P_b

so the diagonals through vertex 1 are the projectives, and rotating a
diagonal by one vertex is the AR translation.  Hom spaces, cones and AR
triangles are computed in closed form; :mod:`mcluster.reps` provides the
brute-force cross-checks.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from . import reps
from .errors import NoCanonicalTriangle, NotInPower, TheoremViolation
from .polygon import (Diagonal, Edge, PolygonConfig, all_diagonals, crosses, diagonal, is_m_diagonal,
                      normalize, rotate, rotate_tau_m)
from .tquiver import (QuotientSpec, TranslationQuiver, ZACoordinate, build_gamma_m, build_za_quotient,
                      gamma_of_diagonals, za_canonical)


@dataclass(frozen=True, order=True)
class IntervalModule:
    a: int
    b: int
    q: int

    def __post_init__(self):
        if not 1 <= self.a <= self.b <= self.q:
            raise ValueError(f"[{self.a},{self.b}] is not an interval of 1..{self.q}")

    @property
    def is_projective(self) -> bool:
        return self.a == 1

    @property
    def is_injective(self) -> bool:
        return self.b == self.q

    def rep(self) -> reps.Rep:
        return reps.interval_rep(self.a, self.b, self.q)

    def __str__(self):
        return f"[{self.a},{self.b}]"


@dataclass(frozen=True, order=True)
class Summand:
    """An indecomposable of the fundamental domain: ``Sigma^shift`` of a module.

    Only projectives may carry ``shift = 1``.
    """

    shift: int
    module: IntervalModule

    def __post_init__(self):
        if self.shift not in (0, 1):
            raise ValueError("fundamental-domain summands have shift 0 or 1")
        if self.shift == 1 and not self.module.is_projective:
            raise ValueError(f"Sigma{self.module} lies outside the fundamental domain")

    @property
    def is_shifted_projective(self) -> bool:
        return self.shift == 1

    def __str__(self):
        return f"SigmaP_{self.module.b}" if self.shift else str(self.module)


def shifted_projective(index: int, q: int) -> Summand:
    return Summand(1, IntervalModule(1, index, q))


@dataclass(frozen=True)
class ObjectRepr:
    """Direct sum of fundamental-domain indecomposables; empty means zero."""

    summands: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    @property
    def is_zero(self) -> bool:
        return not self.summands

    def __add__(self, other: "ObjectRepr") -> "ObjectRepr":
        return ObjectRepr(self.summands + other.summands)

    def __str__(self):
        return " + ".join(map(str, self.summands)) if self.summands else "0"


ZERO = ObjectRepr()


class MorphismKind(enum.Enum):
    ZERO = "Zero"
    ISO = "Iso"
    INJECTIVE = "Injective"
    SURJECTIVE = "Surjective"
    NEITHER = "Neither"


@dataclass(frozen=True)
class MorphismClass:
    source: Diagonal
    target: Diagonal
    hom_dim: int
    kind: MorphismKind

    def __post_init__(self):
        if (self.kind is MorphismKind.ZERO) != (self.hom_dim == 0):
            raise ValueError("kind Zero must coincide with a zero Hom space")
        if (self.kind is MorphismKind.ISO) != (self.source == self.target):
            raise ValueError("kind Iso must coincide with equal endpoints")


@dataclass(frozen=True)
class Triangle:
    """A -> B -> C -> Sigma A, with Sigma acting as the m-rotation."""

    first: ObjectRepr
    second: ObjectRepr
    third: ObjectRepr
    fourth: ObjectRepr
    w_nonzero: bool = True

    def entries(self):
        return (self.first, self.second, self.third, self.fourth)


# ---------------------------------------------------------------- dictionary

def rank_of(cfg_or_N) -> int:
    N = cfg_or_N.N if isinstance(cfg_or_N, PolygonConfig) else cfg_or_N
    return N - 3


def diagonal_to_summand(d: Diagonal, N: int) -> Summand:
    q = N - 3
    if d.j == N:
        return shifted_projective(d.i - 1, q)
    return Summand(0, IntervalModule(d.i, d.j - 2, q))


def summand_to_diagonal(s: Summand, N: int) -> Diagonal:
    if s.shift:
        return diagonal(s.module.b + 1, N, N)
    return diagonal(s.module.a, s.module.b + 2, N)


def diagonal_to_object(d: Diagonal | Edge, cfg: PolygonConfig) -> ObjectRepr:
    if isinstance(d, Edge):
        return ZERO
    return ObjectRepr((diagonal_to_summand(d, cfg.N),))


def diagonals_to_object(ds, cfg: PolygonConfig) -> ObjectRepr:
    return ObjectRepr(tuple(diagonal_to_summand(d, cfg.N) for d in ds if isinstance(d, Diagonal)))


def object_to_diagonals(obj: ObjectRepr, cfg: PolygonConfig) -> list[Diagonal]:
    return [summand_to_diagonal(s, cfg.N) for s in obj.summands]


def tau_summand(s: Summand) -> Summand:
    """AR translation of the cluster category on fundamental-domain objects."""
    M = s.module
    q = M.q
    if s.shift:
        return Summand(0, IntervalModule(M.b, q, q))  # tau Sigma P_b = I_b
    if M.is_projective:
        return shifted_projective(M.b, q)  # tau P_b = Sigma P_b since F = id
    return Summand(0, IntervalModule(M.a - 1, M.b - 1, q))


def za_coordinate(d: Diagonal, N: int) -> ZACoordinate:
    """Position of ``d`` in ZA_q, modulo the cluster automorphism."""
    return za_canonical(ZACoordinate(d.i, d.j - d.i - 1), cluster_spec(N))


def cluster_spec(N: int) -> QuotientSpec:
    return QuotientSpec(N - 3, 1, 1)


def module_ar_quiver(q: int) -> TranslationQuiver:
    """AR quiver of the fundamental domain, built from the representation oracle.

    Arrows among modules are irreducible maps (rad / rad^2 computed by
    brute force), the AR translation of non-projectives comes from the AR
    formula, and the shifted projectives are attached through the mesh
    axiom: arrows ``u -> Sigma P_b`` mirror arrows ``I_b -> u`` and arrows
    ``Sigma P_a -> x`` mirror arrows ``x -> P_a``.
    """
    modules = [IntervalModule(a, b, q) for a, b in reps.all_intervals(q)]
    rep_of = {M: M.rep() for M in modules}
    arrows = Counter()
    for X in modules:
        for Y in modules:
            if X == Y:
                continue
            middles = [rep_of[Z] for Z in modules if Z not in (X, Y)]
            k = reps.irreducible_dim(rep_of[X], rep_of[Y], middles)
            if k:
                arrows[(Summand(0, X), Summand(0, Y))] += k
    tau = {}
    candidates = [rep_of[M] for M in modules]
    for M in modules:
        Y = reps.ar_translate(rep_of[M], candidates)
        if Y is None:
            tau[Summand(0, M)] = shifted_projective(M.b, q)
        else:
            tau[Summand(0, M)] = Summand(0, modules[candidates.index(Y)])
    for b in range(1, q + 1):
        tau[shifted_projective(b, q)] = Summand(0, IntervalModule(b, q, q))
    mod_arrows = dict(arrows)
    for (x, y), k in mod_arrows.items():
        if y.module.is_projective:
            arrows[(shifted_projective(y.module.b, q), x)] += k
        if x.module.is_injective:
            arrows[(y, shifted_projective(x.module.a, q))] += k
        if x.module.is_projective and y.module.is_projective:
            arrows[(shifted_projective(x.module.b, q), shifted_projective(y.module.b, q))] += k
    return TranslationQuiver(tau.keys(), arrows, tau)


@lru_cache(maxsize=None)
def certify_dictionary(N: int) -> bool:
    """Check that the dictionary is an isomorphism of translation quivers.

    Compares the diagonal quiver of the N-gon with the oracle-built AR
    quiver of the fundamental domain and with ZA_q modulo the cluster
    automorphism.
    """
    from .iso import is_isomorphism

    G = gamma_of_diagonals(N)
    q = N - 3
    to_modules = {d: diagonal_to_summand(d, N) for d in G.vertices}
    if not is_isomorphism(G, module_ar_quiver(q), to_modules):
        raise TheoremViolation(f"N={N}: the dictionary is not an AR quiver isomorphism")
    if any(tau_summand(to_modules[d]) != to_modules[G.tau[d]] for d in G.vertices):
        raise TheoremViolation(f"N={N}: the dictionary does not commute with tau")
    to_za = {d: za_coordinate(d, N) for d in G.vertices}
    if not is_isomorphism(G, build_za_quotient(cluster_spec(N)), to_za):
        raise TheoremViolation(f"N={N}: the ZA coordinates do not give an isomorphism")
    return True


# ------------------------------------------------------------------ Hom, Ext

def hom_dim_modkq(M: IntervalModule, N: IntervalModule) -> int:
    """Hom between interval modules: 1 iff a <= c <= b <= d for M=[a,b], N=[c,d].

    Quotients of [a,b] are [x,b] and submodules of [c,d] are [c,y]; a
    nonzero map identifies one of each.
    """
    if M.q != N.q:
        raise ValueError("modules over different quivers")
    return int(M.a <= N.a <= M.b <= N.b)


def to_slice(d1: Diagonal, d2: Diagonal | Edge, N: int):
    """Rotate so that ``d1`` starts at vertex 1; returns (shift, d1', d2')."""
    shift = d1.i - 1
    d2r = d2 if isinstance(d2, Edge) else rotate(d2, shift, N)
    return shift, rotate(d1, shift, N), d2r


def hom_dim_c(d1: Diagonal, d2: Diagonal, cfg: PolygonConfig) -> int:
    N = cfg.N
    _, s, t = to_slice(d1, d2, N)
    if t.j == N:
        return 0  # Hom(P, Sigma P') = 0
    return hom_dim_modkq(diagonal_to_summand(s, N).module, diagonal_to_summand(t, N).module)


def suspension(d: Diagonal, N: int) -> Diagonal:
    """Sigma of the cluster category acts on diagonals as tau, a one-step rotation."""
    return rotate(d, 1, N)


def ext1_nonzero(d1: Diagonal, d2: Diagonal, cfg: PolygonConfig) -> bool:
    value = hom_dim_c(d1, suspension(d2, cfg.N), cfg) > 0
    if value != crosses(d1, d2):
        raise TheoremViolation(f"Ext^1({d1},{d2}) nonzero={value} but crossing={crosses(d1, d2)}")
    return value


# ------------------------------------------------------ morphisms and cones

def _slice_kind(s: Diagonal, t: Diagonal) -> MorphismKind:
    if s == t:
        return MorphismKind.ISO
    if t.i == 1:
        return MorphismKind.INJECTIVE
    if t.j == s.j:
        return MorphismKind.SURJECTIVE
    return MorphismKind.NEITHER


def slice_morphism(d1: Diagonal, d2: Diagonal, cfg: PolygonConfig) -> reps.Morphism | None:
    """The basis morphism of the module Hom space in the slice frame, or None."""
    N = cfg.N
    _, s, t = to_slice(d1, d2, N)
    if t.j == N:
        return None
    basis = reps.hom_basis(diagonal_to_summand(s, N).module.rep(), diagonal_to_summand(t, N).module.rep())
    if len(basis) > 1:
        raise TheoremViolation(f"Hom({d1},{d2}) has dimension {len(basis)}")
    return basis[0] if basis else None


def classify_morphism(d1: Diagonal, d2: Diagonal, cfg: PolygonConfig, certify: bool = True) -> MorphismClass:
    h = hom_dim_c(d1, d2, cfg)
    if h == 0:
        kind = MorphismKind.ZERO
    else:
        _, s, t = to_slice(d1, d2, cfg.N)
        kind = _slice_kind(s, t)
    if certify:
        f = slice_morphism(d1, d2, cfg)
        if (f is None) != (h == 0):
            raise TheoremViolation(f"Hom({d1},{d2}): closed form {h} disagrees with the oracle")
        if f is not None:
            inj, surj = reps.is_injective_morphism(f), reps.is_surjective_morphism(f)
            observed = {(True, True): MorphismKind.ISO, (True, False): MorphismKind.INJECTIVE,
                        (False, True): MorphismKind.SURJECTIVE,
                        (False, False): MorphismKind.NEITHER}[(inj, surj)]
            if observed is not kind:
                raise TheoremViolation(f"{d1}->{d2}: classified {kind.value}, oracle says {observed.value}")
    return MorphismClass(d1, d2, h, kind)


def cone_diagonals(d1: Diagonal, d2: Diagonal, cfg: PolygonConfig) -> list[Diagonal]:
    """Diagonals of the cone of the nonzero morphism d1 -> d2.

    In the frame where the source is (1, j) and the target (k, l):
    injective gives M(j-1, l), surjective gives Sigma M(1, 1+k), an
    isomorphism gives zero and otherwise both summands appear.
    """
    N = cfg.N
    cls = classify_morphism(d1, d2, cfg, certify=False)
    if cls.kind is MorphismKind.ZERO:
        raise NoCanonicalTriangle(f"Hom({d1},{d2}) = 0")
    shift, s, t = to_slice(d1, d2, N)
    j, k, l = s.j, t.i, t.j
    out = []
    if cls.kind in (MorphismKind.SURJECTIVE, MorphismKind.NEITHER):
        out.append(suspension(diagonal(1, 1 + k, N), N))
    if cls.kind in (MorphismKind.INJECTIVE, MorphismKind.NEITHER):
        out.append(diagonal(j - 1, l, N))
    return sorted(rotate(d, -shift, N) for d in out)


def cone(d1: Diagonal, d2: Diagonal, cfg: PolygonConfig) -> ObjectRepr:
    return diagonals_to_object(cone_diagonals(d1, d2, cfg), cfg)


def _sigma_of_module(a: int, b: int, q: int, N: int) -> Diagonal:
    M = Summand(0, IntervalModule(a, b, q))
    if M.module.is_projective:
        return summand_to_diagonal(shifted_projective(b, q), N)
    return summand_to_diagonal(tau_summand(M), N)


def cone_oracle(d1: Diagonal, d2: Diagonal, cfg: PolygonConfig) -> list[Diagonal]:
    """Cone computed from the explicit module map: Sigma(ker) + coker.

    Over a hereditary algebra the cone of f is quasi-isomorphic to the sum
    of its shifted kernel and its cokernel.
    """
    N, q = cfg.N, cfg.N - 3
    f = slice_morphism(d1, d2, cfg)
    if f is None:
        raise NoCanonicalTriangle(f"Hom({d1},{d2}) = 0")
    shift = d1.i - 1
    out = [_sigma_of_module(a, b, q, N) for a, b in reps.thin_summands(reps.kernel(f))]
    out += [diagonal(a, b + 2, N) for a, b in reps.thin_summands(reps.cokernel(f))]
    return sorted(rotate(d, -shift, N) for d in out)


def support_claim_holds(d1: Diagonal, d2: Diagonal, cfg: PolygonConfig) -> bool:
    """In the mixed case, Hom(M(1,1+k), M(j-1,l)) vanishes in the slice frame."""
    N = cfg.N
    cls = classify_morphism(d1, d2, cfg, certify=False)
    if cls.kind is not MorphismKind.NEITHER:
        return True
    _, s, t = to_slice(d1, d2, N)
    a = IntervalModule(1, t.i - 1, N - 3).rep()
    b_diag = diagonal(s.j - 1, t.j, N)
    b = diagonal_to_summand(b_diag, N).module.rep()
    return reps.hom_dim(a, b) == 0


# ------------------------------------------------- meshes and AR triangles

@dataclass(frozen=True)
class Mesh:
    start: Diagonal
    middle: tuple
    end: Diagonal

    def vertices(self) -> frozenset:
        return frozenset((self.start, self.end) + self.middle)


def mesh_at(d: Diagonal, N: int, step: int) -> Mesh:
    """The diamond ending at ``d`` whose sides advance one endpoint by ``step``."""
    middle = [x for x in (normalize(d.i - step, d.j, N), normalize(d.i, d.j - step, N))
              if isinstance(x, Diagonal)]
    return Mesh(rotate(d, step, N), tuple(sorted(middle)), d)


def framed_set(d: Diagonal, cfg: PolygonConfig) -> frozenset:
    m, N = cfg.m, cfg.N
    chords = (normalize(d.i, d.j, N), normalize(d.i, d.j - m, N), normalize(d.i - m, d.j, N),
              normalize(d.i - m, d.j - m, N))
    return frozenset(x for x in chords if isinstance(x, Diagonal))


def gamma_m_mesh(d: Diagonal, cfg: PolygonConfig) -> Mesh:
    """The mesh ending at ``d`` read off the m-diagonal quiver itself."""
    from .decomposition import gamma

    G = gamma(cfg)
    if d not in G:
        raise NotInPower(f"{d} is not an m-diagonal for {cfg}")
    return Mesh(G.tau[d], tuple(sorted(G.predecessors(d))), d)


def m_dilatation(mesh: Mesh, cfg: PolygonConfig) -> Mesh:
    N = cfg.N
    if mesh != mesh_at(mesh.end, N, 1):
        raise ValueError(f"{mesh} is not a mesh of the diagonal quiver of the {N}-gon")
    if not is_m_diagonal(mesh.end, cfg):
        raise NotInPower(f"{mesh.end} is not an m-diagonal for {cfg}")
    dilated = mesh_at(mesh.end, N, cfg.m)
    if dilated != gamma_m_mesh(mesh.end, cfg):
        raise TheoremViolation(f"dilated mesh at {mesh.end} differs from the m-diagonal quiver")
    return dilated


def ar_triangle(d: Diagonal, cfg: PolygonConfig) -> Triangle:
    if not is_m_diagonal(d, cfg):
        raise NotInPower(f"{d} is not an m-diagonal for {cfg}")
    mesh = mesh_at(d, cfg.N, cfg.m)
    start = rotate_tau_m(d, cfg)
    end_shift = rotate_tau_m(start, cfg)
    tri = Triangle(diagonal_to_object(start, cfg), diagonals_to_object(mesh.middle, cfg),
                   diagonal_to_object(d, cfg), diagonal_to_object(end_shift, cfg),
                   w_nonzero=ext1_nonzero(d, start, cfg))
    if not tri.w_nonzero:
        raise TheoremViolation(f"{d} does not cross its m-translate")
    return tri


def triangle_diagonals(tri: Triangle, cfg: PolygonConfig) -> tuple:
    return tuple(object_to_diagonals(x, cfg) for x in tri.entries())


def hom_nonzero_pairs(N: int) -> list[tuple]:
    cfg = PolygonConfig(N - 2, 1)
    ds = all_diagonals(N)
    return [(a, b) for a in ds for b in ds if hom_dim_c(a, b, cfg)]


__all__ = [
    "IntervalModule", "Mesh", "MorphismClass", "MorphismKind", "ObjectRepr", "Summand", "Triangle",
    "ZERO", "ar_triangle", "build_gamma_m", "certify_dictionary", "classify_morphism", "cone",
    "cone_diagonals", "cone_oracle", "diagonal_to_object", "diagonal_to_summand", "ext1_nonzero",
    "framed_set", "hom_dim_c", "hom_dim_modkq", "hom_nonzero_pairs", "m_dilatation", "mesh_at", "module_ar_quiver",
    "object_to_diagonals", "shifted_projective", "summand_to_diagonal", "support_claim_holds",
    "tau_summand", "triangle_diagonals",
]
