from math import gcd

import pytest
from hypothesis import given, strategies as st

from mcluster.errors import BadAnchor, InvalidChord
from mcluster.polygon import (Diagonal, Edge, Parity, PolygonConfig, all_diagonals, crosses, diagonal,
                              enumerate_m_diagonals, is_central, is_m_diagonal, mirror, normalize, parity_class,
                              rotate, rotate_tau_m, tau_m_order)
from mcluster.decomposition import gamma

D = Diagonal


def test_config_derived_values():
    cfg = PolygonConfig(4, 2)
    assert cfg.N == 10
    assert str(cfg.rotation_step) == "2/5"
    with pytest.raises(ValueError):
        PolygonConfig(0, 2)


def test_normalize_examples():
    assert normalize(-1, 2, 10) == D(2, 9)
    assert normalize(1, 2, 10) == Edge(1, 2)
    assert normalize(4, 1, 10) == D(1, 4)
    assert isinstance(normalize(1, 10, 10), Edge)
    with pytest.raises(InvalidChord):
        normalize(3, 13, 10)
    with pytest.raises(InvalidChord):
        diagonal(2, 3, 10)


def test_is_m_diagonal_examples():
    cfg = PolygonConfig(4, 2)
    assert is_m_diagonal(D(1, 4), cfg)
    assert not is_m_diagonal(D(1, 3), cfg)
    assert all(is_m_diagonal(d, PolygonConfig(5, 1)) for d in all_diagonals(7))


def test_is_m_diagonal_matches_side_counts():
    """Both pieces cut off must have a side count congruent to 2 mod m."""
    for n in range(1, 6):
        for m in range(1, 7):
            cfg = PolygonConfig(n, m)
            for d in all_diagonals(cfg.N):
                left = d.j - d.i + 1
                right = cfg.N - (d.j - d.i) + 1
                assert is_m_diagonal(d, cfg) == (left % m == 2 % m and right % m == 2 % m)


def test_crosses_examples():
    assert crosses(D(1, 4), D(2, 9))
    assert not crosses(D(1, 4), D(1, 6))
    assert not crosses(D(1, 4), D(5, 8))
    assert crosses(D(2, 9), D(1, 4))


def test_rotate_tau_m_examples():
    cfg = PolygonConfig(4, 2)
    assert rotate_tau_m(D(1, 4), cfg) == D(2, 9)
    assert rotate_tau_m(D(3, 6), cfg) == D(1, 4)
    for d in enumerate_m_diagonals(cfg):
        x = d
        for _ in range(tau_m_order(cfg)):
            x = rotate_tau_m(x, cfg)
        assert x == d
        assert is_m_diagonal(rotate_tau_m(d, cfg), cfg)


def test_rotation_composes():
    cfg2, cfg4 = PolygonConfig(6, 2), PolygonConfig(3, 4)
    assert cfg2.N == cfg4.N
    for d in all_diagonals(cfg2.N):
        assert rotate_tau_m(rotate_tau_m(d, cfg2), cfg2) == rotate(d, 4, cfg2.N)


def test_mirror_examples():
    assert mirror(D(1, 4), 1, 10) == D(1, 8)
    assert mirror(D(1, 6), 1, 10) == D(1, 6)
    assert mirror(D(2, 5), 2, 10) == D(2, 9)
    with pytest.raises(BadAnchor):
        mirror(D(2, 5), 3, 10)


def test_mirror_involution():
    N = 12
    for d in all_diagonals(N):
        for anchor in (d.i, d.j):
            assert mirror(mirror(d, anchor, N), anchor, N) == d


def test_parity_classes():
    assert parity_class(D(1, 3)) is Parity.OO
    assert parity_class(D(2, 4)) is Parity.EE
    assert parity_class(D(1, 4)) is Parity.MIXED


def test_enumerate_m_diagonals_examples():
    assert len(enumerate_m_diagonals(PolygonConfig(4, 2))) == 15
    cen = enumerate_m_diagonals(PolygonConfig(2, 6))
    assert len(cen) == 7 and all(is_central(d, 14) for d in cen)
    for n in range(2, 8):
        N = n + 2
        assert len(enumerate_m_diagonals(PolygonConfig(n, 1))) == N * (N - 3) // 2
    ds = enumerate_m_diagonals(PolygonConfig(3, 3))
    assert ds == sorted(set(ds))


def test_m_diagonal_count_matches_quiver():
    for n in range(2, 5):
        for m in range(1, 6):
            cfg = PolygonConfig(n, m)
            assert len(enumerate_m_diagonals(cfg)) == len(gamma(cfg))


def test_every_m_diagonal_crosses_its_translate():
    for n in range(2, 6):
        for m in range(1, 9):
            cfg = PolygonConfig(n, m)
            for d in enumerate_m_diagonals(cfg):
                assert crosses(d, rotate_tau_m(d, cfg))


@given(st.integers(2, 8), st.integers(1, 6), st.data())
def test_rotation_preserves_crossing(n, m, data):
    cfg = PolygonConfig(n, m)
    ds = all_diagonals(cfg.N)
    a = data.draw(st.sampled_from(ds))
    b = data.draw(st.sampled_from(ds))
    step = data.draw(st.integers(-30, 30))
    assert crosses(a, b) == crosses(rotate(a, step, cfg.N), rotate(b, step, cfg.N))
    assert crosses(a, b) == crosses(b, a)


@given(st.integers(1, 10), st.sampled_from([2, 4, 6, 8]), st.data())
def test_parity_preserved_for_even_m(n, m, data):
    cfg = PolygonConfig(n, m)
    d = data.draw(st.sampled_from(all_diagonals(cfg.N)))
    assert parity_class(rotate_tau_m(d, cfg)) == parity_class(d)


def test_tau_m_order_formula():
    for n in range(1, 6):
        for m in range(1, 6):
            cfg = PolygonConfig(n, m)
            assert tau_m_order(cfg) == cfg.N // gcd(cfg.N, m)
