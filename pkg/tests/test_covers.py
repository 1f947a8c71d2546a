import random

import pytest

from helpers import brute_min_covers, brute_min_crosscuts, random_hypergraph
from hgx import (
    Hypergraph,
    enumerate_min_crosscuts,
    gen_standard,
    is_cover,
    is_crosscut,
    sigma,
    tau,
)


def test_tau_matching(m2):
    value, witness = tau(m2)
    assert value == 2
    assert is_cover(m2, witness.vertices)


def test_tau_t3(t3):
    value, witness = tau(t3)
    assert value == 1
    assert witness.vertices == {2}


def test_tau_c34(c34):
    value, witness = tau(c34)
    assert value == 2
    assert witness.vertices == {0, 2}


def test_tau_witness_is_lex_least():
    rng = random.Random(41)
    for _ in range(30):
        g = random_hypergraph(rng, 7, 3, rng.randint(1, 10))
        if g.m == 0:
            continue
        value, witness = tau(g)
        size, all_covers = brute_min_covers(g)
        assert value == size
        assert sorted(witness.vertices) == min(sorted(c) for c in all_covers)


def test_tau_rejects_empty_edge():
    with pytest.raises(ValueError):
        tau(Hypergraph(3, [[]], allow_multi=True))


def test_sigma_ex511(ex511):
    value, witness = sigma(ex511)
    assert value == 2
    assert witness.vertices == {1, 2}


def test_sigma_ex511_not_unique(ex511):
    # exhaustive enumeration finds three minimum cross-cuts, not one
    size, cuts = brute_min_crosscuts(ex511)
    assert size == 2
    assert sorted(sorted(c) for c in cuts) == [[1, 2], [3, 5], [4, 6]]
    got = [sorted(c.vertices) for c in enumerate_min_crosscuts(ex511)]
    assert got == [[1, 2], [3, 5], [4, 6]]


def test_sigma_matchings():
    for s in (1, 2, 3, 4):
        g = gen_standard("matching", s=s, r=3)
        value, witness = sigma(g)
        assert value == s
        assert is_crosscut(g, witness.vertices)
        t_value, _ = tau(g)
        assert t_value == s


def test_sigma_c34(c34):
    value, witness = sigma(c34)
    assert value == 2
    assert sorted(witness.vertices) == [0, 2]


def test_sigma_infinite(triangle):
    value, witness = sigma(triangle)
    assert value == float("inf")
    assert witness is None
    with pytest.raises(ValueError):
        enumerate_min_crosscuts(triangle)


def test_enumerate_matching(m2):
    cuts = enumerate_min_crosscuts(m2)
    assert len(cuts) == 9
    assert all(is_crosscut(m2, c.vertices) for c in cuts)
    listed = [sorted(c.vertices) for c in cuts]
    assert listed == sorted(listed)


def test_enumerate_single_edge():
    g = Hypergraph(3, [[0, 1, 2]], uniform_r=3)
    assert [sorted(c.vertices) for c in enumerate_min_crosscuts(g)] == [[0], [1], [2]]


def test_enumeration_matches_brute_force():
    rng = random.Random(43)
    for _ in range(40):
        g = random_hypergraph(rng, 7, rng.choice([2, 3]), rng.randint(1, 9))
        if g.m == 0:
            continue
        size, cuts = brute_min_crosscuts(g)
        if size is None:
            assert sigma(g)[0] == float("inf")
            continue
        value, witness = sigma(g)
        assert value == size
        got = [frozenset(c.vertices) for c in enumerate_min_crosscuts(g)]
        assert sorted(map(sorted, got)) == sorted(map(sorted, cuts))
        assert witness.vertices == min(got, key=sorted)


def test_sigma_at_least_tau():
    rng = random.Random(47)
    for _ in range(40):
        g = random_hypergraph(rng, 8, 3, rng.randint(1, 12))
        if g.m == 0:
            continue
        s, _ = sigma(g)
        t, _ = tau(g)
        if s != float("inf"):
            assert s >= t
