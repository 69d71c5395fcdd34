"""The representation oracle against facts that hold for any quiver of type A."""

from mcluster import reps


def _I(a, b, q):
    return reps.interval_rep(a, b, q)


def test_endomorphisms_of_intervals_are_scalars():
    q = 5
    for a, b in reps.all_intervals(q):
        assert reps.hom_dim(_I(a, b, q), _I(a, b, q)) == 1


def test_disjoint_supports_have_no_maps():
    q = 6
    for a, b in reps.all_intervals(q):
        for c, d in reps.all_intervals(q):
            if b < c or d < a:
                assert reps.hom_dim(_I(a, b, q), _I(c, d, q)) == 0


def test_projectives_and_injectives():
    """Hom(P_v, M) and Hom(M, I_v) both equal dim M_v."""
    q = 5
    for a, b in reps.all_intervals(q):
        M = _I(a, b, q)
        for v in range(1, q + 1):
            assert reps.hom_dim(_I(1, v, q), M) == M.dim(v)
            assert reps.hom_dim(M, _I(v, q, q)) == M.dim(v)


def test_ext_of_projective_vanishes():
    q = 5
    for v in range(1, q + 1):
        for a, b in reps.all_intervals(q):
            assert reps.ext1_dim(_I(1, v, q), _I(a, b, q)) == 0
            assert reps.ext1_dim(_I(a, b, q), _I(v, q, q)) == 0


def test_kernel_and_cokernel_dimensions_add_up():
    q = 5
    for a, b in reps.all_intervals(q):
        for c, d in reps.all_intervals(q):
            X, Y = _I(a, b, q), _I(c, d, q)
            for f in reps.hom_basis(X, Y):
                K, C = reps.kernel(f), reps.cokernel(f)
                for v in range(1, q + 1):
                    image = X.dim(v) - K.dim(v)
                    assert image + C.dim(v) == Y.dim(v)


def test_kernel_is_a_subrepresentation():
    q = 4
    X, Y = _I(1, 3, q), _I(2, 4, q)
    f = reps.hom_basis(X, Y)[0]
    assert reps.thin_summands(reps.kernel(f)) == [(1, 1)]
    assert reps.thin_summands(reps.cokernel(f)) == [(4, 4)]
    assert not reps.is_injective_morphism(f) and not reps.is_surjective_morphism(f)


def test_thin_summands_split_at_zero_maps():
    q = 3
    X = _I(1, 3, q)
    Z = reps.Rep(q, X.dims, (X.maps[0], [[0]]))
    assert reps.thin_summands(Z) == [(1, 2), (3, 3)]


def test_ar_translate_shifts_intervals():
    q = 5
    cands = [_I(a, b, q) for a, b in reps.all_intervals(q)]
    for a, b in reps.all_intervals(q):
        Y = reps.ar_translate(_I(a, b, q), cands)
        if a == 1:
            assert Y is None
        else:
            assert Y.dims == _I(a - 1, b - 1, q).dims


def test_irreducible_maps_grow_or_shrink_by_one():
    q = 4
    mods = reps.all_intervals(q)
    for a, b in mods:
        for c, d in mods:
            if (a, b) == (c, d):
                continue
            middles = [_I(x, y, q) for x, y in mods if (x, y) not in ((a, b), (c, d))]
            k = reps.irreducible_dim(_I(a, b, q), _I(c, d, q), middles)
            assert k == int((c, d) in ((a, b + 1), (a + 1, b)))
