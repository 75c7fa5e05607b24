"""Canonical certificates and isomorphism."""

import random

import pytest
from helpers import brute_isomorphic, rand_graph

from ecix import families
from ecix.canon import canonical_cert, canonical_graph, is_isomorphic
from ecix.graph6 import decode_graph6
from ecix.graphs import build_graph, permuted


def test_cert_ignores_labeling():
    a = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    b = build_graph(4, [(2, 0), (0, 3), (3, 1)])  # the same path relabeled
    assert canonical_cert(a) == canonical_cert(b)


def test_cert_separates_c4_p4():
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    p4 = families.make(families.path(4))
    assert canonical_cert(c4) != canonical_cert(p4)


def test_cert_path_reversal_of_two_sided():
    assert (canonical_cert(families.make(families.h3()))
            == canonical_cert(families.make(families.two_sided(7, 2))))


def test_cert_decodes_to_isomorphic_graph():
    rng = random.Random(9)
    for _ in range(20):
        g = rand_graph(rng, rng.randint(1, 10))
        back = decode_graph6(canonical_cert(g))
        assert back == canonical_graph(g)
        assert is_isomorphic(back, g)


def test_cert_stability_random_relabelings():
    rng = random.Random(31)
    for _ in range(25):
        g = rand_graph(rng, rng.randint(2, 10))
        want = canonical_cert(g)
        for _ in range(25):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_cert(permuted(g, perm)) == want


def test_is_isomorphic_known_pairs():
    k4_minus_pm = build_graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert is_isomorphic(k4_minus_pm, c4)
    assert not is_isomorphic(families.make(families.h2()),
                             families.make(families.extremal(6, 3, 2)))
    for (n, d) in [(6, 3), (8, 5), (10, 4)]:
        assert is_isomorphic(families.make(families.lollipop(n, d)),
                             families.make(families.extremal(n, d, 0)))


def test_is_isomorphic_matches_brute_force():
    rng = random.Random(77)
    agree = disagree_possible = 0
    for _ in range(120):
        n = rng.randint(2, 5)
        g = rand_graph(rng, n)
        h = rand_graph(rng, n)
        assert is_isomorphic(g, h) == brute_isomorphic(g, h)
        agree += 1
        # relabeled copies must always come out isomorphic
        perm = list(range(n))
        rng.shuffle(perm)
        assert is_isomorphic(g, permuted(g, perm))
        disagree_possible += 1
    assert agree == disagree_possible == 120


def test_cert_budget():
    big = build_graph(17, [(i, i + 1) for i in range(16)])
    with pytest.raises(ValueError, match="16"):
        canonical_cert(big)
