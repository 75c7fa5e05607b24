"""Closed forms against construction oracles and against each other."""

import pytest

from ecix import families, formulas
from ecix.families import edge_count, make
from ecix.formulas import (best_diameter, best_for_order, conjecture_params,
                           diameter2_max, eci_extremal_closed, extremal_class,
                           extremal_size, lollipop_gap, max_eci_for_diameter,
                           max_eci_for_order, optimal_k_set, path_eci)
from ecix.graphs import diameter, eci


def test_closed_form_matches_bfs():
    for n in range(4, 19):
        for d in range(3, n):
            for k in range(n - d):
                g = make(families.extremal(n, d, k))
                assert eci(g) == eci_extremal_closed(n, d, k), (n, d, k)


def test_closed_form_known_values():
    for k in range(4):
        assert eci_extremal_closed(7, 3, k) == 65
    assert eci_extremal_closed(9, 5, 3) == 134
    assert eci_extremal_closed(9, 4, 4) == 132
    assert eci_extremal_closed(6, 3, 2) == 44


def test_closed_form_domain():
    for n, d, k in [(3, 3, 0), (8, 2, 0), (8, 8, 0), (8, 4, 4), (8, 4, -1)]:
        with pytest.raises(ValueError):
            eci_extremal_closed(n, d, k)


def test_f_known_values():
    assert max_eci_for_diameter(4, 3) == 14
    assert max_eci_for_diameter(5, 3) == 27
    assert max_eci_for_diameter(5, 4) == 24
    assert max_eci_for_diameter(6, 3) == 44
    assert max_eci_for_diameter(6, 4) == 42
    assert max_eci_for_diameter(6, 5) == 38
    assert max_eci_for_diameter(7, 3) == 65
    assert max_eci_for_diameter(10, 3) == 170


def test_f_quadratic_branches():
    for n in (4, 5, 6):
        assert max_eci_for_diameter(n, 3) == 2 * n * n - 5 * n + 2
    for n in (8, 12, 30):
        assert max_eci_for_diameter(n, 3) == 3 * n * n - 16 * n + 30


def test_f_is_max_over_k():
    for n in range(4, 61):
        for d in range(3, n):
            sweep = max(eci_extremal_closed(n, d, k) for k in range(n - d))
            assert max_eci_for_diameter(n, d) == sweep, (n, d)


def test_optimal_k_examples():
    assert optimal_k_set(7, 3) == {0, 1, 2, 3}
    assert optimal_k_set(9, 4) == {0, 1, 2, 3, 4}
    assert optimal_k_set(20, 4) == {0}
    assert optimal_k_set(5, 3) == {1}
    assert optimal_k_set(12, 5) == set(range(7))  # n == 3(d-1) boundary


def test_optimal_k_is_argmax():
    for n in range(4, 61):
        for d in range(3, n):
            vals = {k: eci_extremal_closed(n, d, k) for k in range(n - d)}
            top = max(vals.values())
            assert optimal_k_set(n, d) == {k for k, v in vals.items()
                                           if v == top}, (n, d)


def test_extremal_class_cases():
    assert extremal_class(6, 3).members == (families.extremal(6, 3, 2),
                                            families.h2())
    assert extremal_class(7, 3).members == tuple(
        families.extremal(7, 3, k) for k in range(4)) + (families.h3(),)
    # (12,5) sits exactly on n == 3(d-1): every k ties, so the class
    # lists all seven graphs
    assert extremal_class(12, 5).members == tuple(
        families.extremal(12, 5, k) for k in range(7))
    assert extremal_class(11, 5).members == (families.extremal(11, 5, 5),)
    assert extremal_class(13, 5).members == (families.extremal(13, 5, 0),)
    assert extremal_class(5, 3).members == (families.extremal(5, 3, 1),)
    assert extremal_class(9, 3).members == (families.extremal(9, 3, 0),)


def test_extremal_class_members_attain_bound():
    for n in range(4, 12):
        for d in range(3, n):
            want = max_eci_for_diameter(n, d)
            for spec in extremal_class(n, d).members:
                g = make(spec)
                assert g.n == n
                assert diameter(g) == d
                assert eci(g) == want, (n, d, spec)


def test_diameter2_values():
    assert diameter2_max(4) == 16
    assert diameter2_max(5) == 28
    assert diameter2_max(6) == 48
    with pytest.raises(ValueError):
        diameter2_max(3)


def test_diameter2_matches_matching_deleted():
    for n in range(4, 31):
        assert eci(make(families.matching_deleted(n))) == diameter2_max(n)


def test_path_eci_values():
    assert path_eci(3) == 6
    assert path_eci(4) == 14
    assert path_eci(6) == 38
    with pytest.raises(ValueError):
        path_eci(1)


def test_path_eci_matches_construction():
    for n in range(2, 31):
        assert path_eci(n) == eci(make(families.path(n)))
    for n in range(4, 31):
        assert path_eci(n) == eci_extremal_closed(n, n - 1, 0)


def test_lollipop_gap_examples():
    assert lollipop_gap(14, 4) == 7
    assert lollipop_gap(12, 4) == 5
    assert lollipop_gap(13, 5) == 3
    with pytest.raises(ValueError):
        lollipop_gap(10, 5)  # n < 3(d-1)
    with pytest.raises(ValueError):
        lollipop_gap(12, 3)


def test_lollipop_gap_is_the_closed_form_difference():
    for n in range(7, 41):
        for d in range(4, n - 1):
            if n < 3 * (d - 1):
                continue
            gap = lollipop_gap(n, d)
            assert gap == (eci_extremal_closed(n, d + 1, n - d - 2)
                           - eci_extremal_closed(n, d, 0)), (n, d)
            assert gap > 0


def test_g_values():
    assert max_eci_for_order(7) == 66
    assert max_eci_for_order(8) == 96
    assert max_eci_for_order(9) == 134
    with pytest.raises(ValueError):
        max_eci_for_order(6)


def test_g_equals_diameter_sweep():
    for n in range(7, 61):
        sweep = max(eci_extremal_closed(n, d, n - d - 1) for d in range(3, n))
        assert max_eci_for_order(n) == sweep
        ds = best_diameter(n)
        assert eci_extremal_closed(n, ds, n - ds - 1) == sweep, n


def test_best_diameter_values():
    assert best_diameter(9) == 5
    assert best_diameter(8) == 4
    assert best_diameter(12) == 6
    for d in (5, 7):
        assert max_eci_for_order(12) > eci_extremal_closed(12, d, 12 - d - 1)


def test_g_beats_diameter2_from_9():
    for n in range(9, 31):
        assert max_eci_for_order(n) > diameter2_max(n)
    assert max_eci_for_order(7) < diameter2_max(7)
    assert max_eci_for_order(8) == diameter2_max(8)


def test_best_for_order_rows():
    assert best_for_order(3).value == 6
    assert best_for_order(3).members == (families.complete(3), families.path(3))
    assert best_for_order(4) == best_for_order(4)
    assert best_for_order(4).members == (families.matching_deleted(4),)
    five = best_for_order(5)
    assert five.value == 28
    assert five.members == (families.matching_deleted(5), families.h1())
    assert five.notes  # the 28-vs-30 discrepancy must be surfaced
    assert best_for_order(7).value == 68
    assert best_for_order(8).members == (families.matching_deleted(8),
                                         families.extremal(8, 4, 3))
    nine = best_for_order(9)
    assert nine.value == 134
    assert nine.members == (families.extremal(9, 5, 3),)
    with pytest.raises(ValueError):
        best_for_order(2)


def test_conjecture_params_tree_case():
    for n in range(4, 12):
        got = conjecture_params(n, n - 1)
        assert (got.d, got.k) == (n - 1, 0)
        assert got.anomaly is None


def test_conjecture_params_examples():
    assert conjecture_params(6, 10)[:2] == (3, 2)
    assert edge_count(families.extremal(6, 3, 2)) == 10
    # the exact outer floor lands on (4, 3): size 16 = C(5,2) + 3 + 3
    assert conjecture_params(8, 16)[:2] == (4, 3)
    assert edge_count(families.extremal(8, 4, 3)) == 16
    # a non-square radicand where rounding the square root down would
    # overshoot the diameter
    assert conjecture_params(6, 8)[:2] == (3, 0)


def test_conjecture_params_inverts_edge_count():
    for n in range(4, 21):
        for d in range(3, n):
            for k in range(n - d):
                m = extremal_size(n, d, k)
                assert m == edge_count(families.extremal(n, d, k))
                got = conjecture_params(n, m)
                assert (got.d, got.k) == (d, k), (n, m)
                assert got.anomaly is None


def test_conjecture_params_domain():
    with pytest.raises(ValueError):
        conjecture_params(6, 4)
    with pytest.raises(ValueError):
        conjecture_params(6, 11)
    with pytest.raises(ValueError):
        conjecture_params(3, 3)
