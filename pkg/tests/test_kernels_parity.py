"""Compiled and pure-Python kernels must agree bit for bit."""

import random

import pytest
from helpers import rand_rows

from ecix import _kernels_py
from ecix.enumeration import enumerate_connected

speedups = pytest.importorskip("ecix._speedups",
                               reason="compiled extension not built")


def test_backends_agree_on_random_graphs():
    rng = random.Random(1234)
    for _ in range(400):
        n = rng.randint(1, 12)
        rows = rand_rows(rng, n, p=rng.random())
        assert (speedups.all_eccentricities(n, rows)
                == _kernels_py.all_eccentricities(n, rows))
        assert (speedups.is_connected_rows(n, rows)
                == _kernels_py.is_connected_rows(n, rows))
        src = rng.randrange(n)
        assert (speedups.bfs_distances(n, rows, src)
                == _kernels_py.bfs_distances(n, rows, src))
        assert (speedups.canonical_key(n, rows)
                == _kernels_py.canonical_key(n, rows))


def test_backends_agree_on_enumerated_graphs():
    for n in range(1, 7):
        for g in enumerate_connected(n):
            assert (speedups.canonical_key(n, g.adj)
                    == _kernels_py.canonical_key(n, g.adj))


def test_backends_agree_on_wide_rows():
    rng = random.Random(5)
    rows = rand_rows(rng, 62, p=0.1)
    assert (speedups.all_eccentricities(62, rows)
            == _kernels_py.all_eccentricities(62, rows))
    assert (speedups.bfs_distances(62, rows, 0)
            == _kernels_py.bfs_distances(62, rows, 0))


def test_budget_errors_match():
    rows = tuple([0] * 17)
    with pytest.raises(ValueError):
        speedups.canonical_key(17, rows)
    with pytest.raises(ValueError):
        _kernels_py.canonical_key(17, rows)
