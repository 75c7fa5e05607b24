"""graph6 encoding round-trips and validation."""

import random

import pytest
from helpers import rand_graph

from ecix.graph6 import Graph6Error, decode_graph6, encode_graph6, iter_graph6
from ecix.graphs import build_graph


def test_encode_k1():
    assert encode_graph6(build_graph(1, [])) == "@"


def test_decode_known_record():
    # 'D?{' is the 5-vertex star centered at vertex 4
    g = decode_graph6("D?{")
    assert g.n == 5
    assert sorted(g.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert encode_graph6(g) == "D?{"


def test_round_trip_random():
    rng = random.Random(2024)
    for _ in range(1000):
        g = rand_graph(rng, rng.randint(1, 20), p=rng.random())
        assert decode_graph6(encode_graph6(g)) == g


def test_round_trip_boundary_order():
    rng = random.Random(3)
    g = rand_graph(rng, 62, p=0.2)
    assert decode_graph6(encode_graph6(g)) == g


def test_decode_rejects_empty():
    with pytest.raises(Graph6Error):
        decode_graph6("")


def test_decode_rejects_long_form():
    with pytest.raises(Graph6Error, match="long-form"):
        decode_graph6("~??")


def test_decode_rejects_bad_bytes():
    with pytest.raises(Graph6Error, match="63..126"):
        decode_graph6("D?!")


def test_decode_rejects_wrong_length():
    with pytest.raises(Graph6Error, match="bytes"):
        decode_graph6("D?")
    with pytest.raises(Graph6Error, match="bytes"):
        decode_graph6("D?{{")


def test_decode_rejects_nonzero_padding():
    # n=2 needs one data byte carrying 1 real bit; the rest must be zero
    with pytest.raises(Graph6Error, match="padding"):
        decode_graph6("A" + chr(63 + 1))


def test_decode_rejects_n0():
    with pytest.raises(Graph6Error):
        decode_graph6("?")


def test_iter_graph6_skips_headers_and_reports_lines():
    lines = [">>header<<\n", "\n", "@\n", "D?{\n"]
    got = list(iter_graph6(lines))
    assert [lineno for lineno, _ in got] == [3, 4]
    assert got[0][1].n == 1
    with pytest.raises(Graph6Error, match="line 2"):
        list(iter_graph6(["@\n", "D?\n"]))
