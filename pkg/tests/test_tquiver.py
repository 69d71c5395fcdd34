from collections import Counter

import pytest

from mcluster.errors import InvariantViolation, UnknownVertex
from mcluster.iso import iso_translation_quivers, is_isomorphism
from mcluster.polygon import Diagonal, PolygonConfig
from mcluster.tquiver import (QuotientSpec, TranslationQuiver, ZACoordinate, build_gamma_m, build_za_quotient,
                              connected_components, gamma_of_diagonals, power, sectional_paths, tau_orbits,
                              za_canonical, za_phi, za_sigma, za_successors, za_tau)

D = Diagonal


def test_gamma_examples():
    G = build_gamma_m(PolygonConfig(8, 1))
    assert len(G) == 35
    G2 = build_gamma_m(PolygonConfig(4, 2))
    assert len(G2) == 15
    assert G2.successors(D(1, 4)) == [D(1, 6)]
    small = build_gamma_m(PolygonConfig(2, 1))
    assert small.vertices == (D(1, 3), D(2, 4))
    small.check_invariants()


def test_mesh_axiom_is_enforced():
    with pytest.raises(InvariantViolation):
        TranslationQuiver([1, 2], {(1, 2): 1}, {1: 1, 2: 2})
    with pytest.raises(InvariantViolation):
        TranslationQuiver([1, 2], {}, {1: 1, 2: 1})


def test_sectional_paths_examples():
    G = gamma_of_diagonals(10)
    paths = sectional_paths(G, D(1, 3), 2)
    assert (D(1, 3), D(1, 4), D(1, 5)) in paths
    assert (D(1, 3), D(1, 4), D(2, 4)) not in paths
    assert sectional_paths(G, D(1, 3), 0) == [(D(1, 3),)]
    assert sorted(p[-1] for p in sectional_paths(G, D(2, 5), 1)) == sorted(G.successors(D(2, 5)))
    with pytest.raises(UnknownVertex):
        sectional_paths(G, D(1, 2), 1)


def test_power_examples():
    G = gamma_of_diagonals(10)
    assert power(G, 1) == G
    P = power(G, 2)
    assert P.vertices == G.vertices
    assert sorted(len(c) for c in connected_components(P)) == [10, 10, 15]
    assert len(connected_components(power(gamma_of_diagonals(17), 5))) == 3
    sizes = sorted(len(c) for c in connected_components(power(gamma_of_diagonals(14), 6)))
    assert sizes == [7, 7, 7, 14, 14, 14, 14]


def test_power_multiplicities_at_most_one():
    for N in range(5, 15):
        G = gamma_of_diagonals(N)
        for m in range(1, 6):
            assert power(G, m).max_multiplicity() <= 1


def test_components_are_deterministic_and_connected():
    G = gamma_of_diagonals(10)
    assert len(connected_components(G)) == 1
    comps = connected_components(power(G, 2))
    firsts = [c.vertices[0] for c in comps]
    assert firsts == sorted(firsts)


def test_tau_orbit_examples():
    G = gamma_of_diagonals(10)
    orbit = next(o for o in tau_orbits(G) if D(1, 3) in o)
    assert len(orbit) == 10
    central = next(o for o in tau_orbits(G) if D(1, 6) in o)
    assert len(central) == 5
    P = power(G, 2)
    assert {len(o) for o in tau_orbits(P)} == {5}


def test_za_sigma_laws():
    p = 4
    for k in range(-3, 4):
        for i in range(1, p + 1):
            v = ZACoordinate(k, i)
            assert za_sigma(za_sigma(v, p), p) == za_tau(v, -(p + 1))
            assert za_sigma(za_tau(v), p) == za_tau(za_sigma(v, p))
            for w in za_successors(v, p):
                assert za_sigma(w, p) in za_successors(za_sigma(v, p), p)


def test_za_quotient_examples():
    assert len(build_za_quotient(QuotientSpec(4, 1, 0))) == 10
    assert len(build_za_quotient(QuotientSpec(2, 1, 2))) == 7
    Q = build_za_quotient(QuotientSpec(3, 2, 1))
    assert len(Q) == 15
    with pytest.raises(ValueError):
        QuotientSpec(3, 0, 0)


def test_valid_presentations_never_degenerate():
    """With r, s >= 0 and (r, s) != (0, 0) the auto-equivalence always moves columns."""
    for p in range(1, 6):
        for r in range(0, 5):
            for s in range(0, 5):
                if (r, s) == (0, 0):
                    continue
                Q = build_za_quotient(QuotientSpec(p, r, s))
                assert len(Q) == QuotientSpec(p, r, s).vertex_count


def test_za_canonical_is_orbit_invariant():
    for spec in (QuotientSpec(4, 1, 0), QuotientSpec(3, 6, 5), QuotientSpec(2, 1, 2), QuotientSpec(3, 3, 2)):
        for k in range(-10, 10):
            for i in range(1, spec.p + 1):
                v = ZACoordinate(k, i)
                assert za_canonical(v, spec) == za_canonical(za_phi(v, spec), spec)


def test_za_quotient_matches_brute_force_orbits():
    """Orbit count from a direct union-find over a long window of ZA_p."""
    for spec in (QuotientSpec(4, 1, 0), QuotientSpec(2, 1, 2), QuotientSpec(3, 2, 1), QuotientSpec(2, 3, 1)):
        window = [ZACoordinate(k, i) for k in range(-60, 60) for i in range(1, spec.p + 1)]
        parent = {v: v for v in window}

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for v in window:
            w = za_phi(v, spec)
            if w in parent:
                a, b = find(v), find(w)
                if a != b:
                    parent[a] = b
        middle = {find(ZACoordinate(k, i)) for k in range(-20, 20) for i in range(1, spec.p + 1)}
        assert len(middle) == len(build_za_quotient(spec)) == spec.vertex_count


def test_gamma_m_is_a_component_of_the_power():
    for n in range(2, 5):
        for m in range(1, 6):
            cfg = PolygonConfig(n, m)
            small = build_gamma_m(cfg)
            comps = connected_components(power(gamma_of_diagonals(cfg.N), m))
            hits = [c for c in comps if iso_translation_quivers(c, small) is not None
                    and set(c.vertices) == set(small.vertices)]
            assert len(hits) == 1


def test_gamma_m_matches_za_quotient():
    for n in range(2, 5):
        for m in range(1, 6):
            f = iso_translation_quivers(build_gamma_m(PolygonConfig(n, m)),
                                        build_za_quotient(QuotientSpec(n - 1, m, 1)))
            assert f is not None


def test_isomorphism_examples():
    P = power(gamma_of_diagonals(10), 2)
    comps = connected_components(P)
    small = [c for c in comps if len(c) == 10]
    f = iso_translation_quivers(*small)
    assert f is not None and is_isomorphism(*small, f)
    big = next(c for c in comps if len(c) == 15)
    assert iso_translation_quivers(big, build_za_quotient(QuotientSpec(3, 2, 1))) is not None
    assert iso_translation_quivers(big, small[0]) is None


def test_isomorphism_distinguishes_band_from_cylinder():
    # same size, but a Moebius band is not a cylinder
    c = build_za_quotient(QuotientSpec(4, 1, 0))
    d = build_za_quotient(QuotientSpec(2, 0, 5))
    assert len(c) == len(d) and iso_translation_quivers(c, d) is None


def test_is_isomorphism_checker():
    Q = build_za_quotient(QuotientSpec(3, 2, 1))
    ident = {v: v for v in Q.vertices}
    assert is_isomorphism(Q, Q, ident)
    shifted = {v: Q.tau[v] for v in Q.vertices}
    assert is_isomorphism(Q, Q, shifted)
    swapped = dict(ident)
    a, b = Q.vertices[0], Q.vertices[1]
    swapped[a], swapped[b] = b, a
    assert not is_isomorphism(Q, Q, swapped)


def test_relabel_and_subquiver():
    Q = build_gamma_m(PolygonConfig(4, 2))
    R = Q.relabel({v: v.id for v in Q.vertices})
    assert sum(Counter(R.arrows).values()) == sum(Q.arrows.values())
    sub = Q.subquiver(Q.vertices)
    assert sub == Q
