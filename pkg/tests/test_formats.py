import random

import pytest

from cyclekit.families import complete, complete_bipartite
from cyclekit.formats import (
    from_graph6,
    load_graph,
    parse_edge_list,
    to_graph6,
)
from cyclekit.graph import Graph

from helpers import petersen, random_graph


def test_known_vectors():
    assert to_graph6(complete(4)) == "C~"
    # hand-packed: C_4 bits (0,1)(0,2)(1,2)(0,3)(1,3)(2,3) = 101101
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert to_graph6(c4) == chr(4 + 63) + chr(0b101101 + 63)
    # empty graph on five vertices packs ten zero bits into two chars
    assert to_graph6(Graph.from_edges(5, [])) == "D??"


def test_round_trip_random():
    rng = random.Random(2)
    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 12), rng.uniform(0.0, 1.0))
        assert from_graph6(to_graph6(g)) == g
    assert from_graph6(to_graph6(petersen())) == petersen()


def test_header_and_large_n():
    g = complete_bipartite(2, 3)
    assert from_graph6(to_graph6(g, header=True)) == g
    big = Graph.from_edges(100, [(0, 99)])
    assert from_graph6(to_graph6(big)) == big


def test_bad_inputs():
    with pytest.raises(ValueError):
        from_graph6("")
    with pytest.raises(ValueError):
        from_graph6("C")  # truncated body


def test_edge_list_parsing():
    text = """
    # a triangle plus an isolated-ish tail
    0 1
    1 2
    2 0   # closing edge

    2 3
    """
    g = parse_edge_list(text)
    assert g.n == 4 and g.edge_count == 4
    with pytest.raises(ValueError):
        parse_edge_list("0 1 2")


def test_load_graph_dispatch(tmp_path):
    g = complete(5)
    p6 = tmp_path / "g.g6"
    p6.write_text(to_graph6(g) + "\n")
    assert load_graph(str(p6)) == g
    pe = tmp_path / "g.edges"
    pe.write_text("\n".join(f"{u} {v}" for u, v in g.edges()) + "\n")
    assert load_graph(str(pe)) == g
    assert load_graph(str(pe), fmt="edges") == g
