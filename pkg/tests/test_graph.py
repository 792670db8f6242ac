import itertools
import random

import pytest

from cyclekit.graph import (
    Graph,
    RootedGraph,
    bipartition,
    blocks,
    connected_components,
    end_blocks,
    feasible_end_blocks,
    find_separation_order2,
    identify,
    is_k_connected,
    is_rooted_two_connected,
    min_degree,
    rooted_min_degree,
    subgraph,
)
from cyclekit.families import complete, complete_bipartite

from helpers import cycle_graph, path_graph, random_graph, wheel


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, ((1,), ()))  # asymmetric
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])  # loop
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 5)])  # out of range
    g = Graph.from_edges(3, [(0, 1), (0, 1)])  # duplicates collapse
    assert g.edge_count == 1


def test_degrees_and_edges():
    g = complete_bipartite(3, 4)
    assert min_degree(g) == 3
    assert min_degree(complete(5)) == 4
    assert min_degree(Graph.from_edges(1, [])) == 0
    assert g.edge_count == 12
    assert sorted(g.edges())[0] == (0, 3)


def test_rooted_min_degree():
    g = complete_bipartite(4, 4)
    assert rooted_min_degree(RootedGraph(g, 0, 1)) == 4
    assert rooted_min_degree(RootedGraph(path_graph(3), 0, 2)) == 2
    # two roots inside the small side of an unbalanced complete bipartite
    kkn = complete_bipartite(3, 6)
    assert rooted_min_degree(RootedGraph(kkn, 0, 1)) == 3
    with pytest.raises(ValueError):
        rooted_min_degree(RootedGraph(Graph.from_edges(2, [(0, 1)]), 0, 1))


def test_bipartition_examples():
    assert bipartition(cycle_graph(4)) == (frozenset({0, 2}), frozenset({1, 3}))
    assert bipartition(cycle_graph(5)) is None
    a, b = bipartition(complete_bipartite(3, 3))
    assert a == frozenset({0, 1, 2}) and b == frozenset({3, 4, 5})


def test_blocks_examples():
    # two triangles sharing one vertex
    bow = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    bd = blocks(bow)
    assert len(bd.blocks) == 2
    assert bd.cut_vertices == frozenset({2})
    # a tree on 4 vertices has 3 single-edge blocks
    assert len(blocks(path_graph(4)).blocks) == 3
    # 2-connected graph is a single block
    bd5 = blocks(complete(5))
    assert len(bd5.blocks) == 1 and not bd5.cut_vertices
    # isolated vertices are blocks too
    iso = Graph.from_edges(3, [(0, 1)])
    assert frozenset({2}) in blocks(iso).blocks


def test_blocks_edge_partition_and_cut_counts():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 9), rng.uniform(0.1, 0.6))
        bd = blocks(g)
        seen = {}
        for i, b in enumerate(bd.blocks):
            sub, m = subgraph(g, b)
            for u, v in sub.edges():
                inv = {new: old for old, new in m.items()}
                e = tuple(sorted((inv[u], inv[v])))
                assert e not in seen
                seen[e] = i
        assert set(seen) == {tuple(sorted(e)) for e in g.edges()}
        if len(connected_components(g)) == 1:
            for v in range(g.n):
                count = sum(1 for b in bd.blocks if v in b)
                assert (v in bd.cut_vertices) == (count >= 2)


def test_rooted_two_connected():
    assert is_rooted_two_connected(RootedGraph(complete(4), 0, 3))
    # path with roots at the ends: block structure is a path
    assert is_rooted_two_connected(RootedGraph(path_graph(4), 0, 3))
    # pendant edge whose end-block misses both roots
    tri = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert not is_rooted_two_connected(RootedGraph(tri, 0, 1))
    assert is_rooted_two_connected(RootedGraph(tri, 0, 3))


def test_rooted_two_connected_whenever_two_connected():
    rng = random.Random(5)
    count = 0
    while count < 25:
        g = random_graph(rng, rng.randint(3, 8), rng.uniform(0.4, 0.9))
        if not is_k_connected(g, 2):
            continue
        count += 1
        for x, y in itertools.combinations(range(g.n), 2):
            assert is_rooted_two_connected(RootedGraph(g, x, y))


def test_k_connectivity():
    assert is_k_connected(complete(4), 3)
    assert is_k_connected(cycle_graph(5), 2)
    assert not is_k_connected(complete_bipartite(1, 3), 2)
    assert not is_k_connected(cycle_graph(5), 3)
    assert is_k_connected(wheel(5), 3)
    with pytest.raises(ValueError):
        is_k_connected(complete(4), 4)


def test_identify_examples():
    c4 = cycle_graph(4)
    g, merged, mapping = identify(c4, {0, 2})
    assert g.n == 3 and g.edge_count == 2
    assert mapping[0] == mapping[2] == merged
    assert sorted(g.neighbors[merged]) == sorted(
        v for v in range(3) if v != merged
    )
    # singleton identification is the identity up to reindexing
    g2, _, m2 = identify(c4, {1})
    assert g2.n == 4 and g2.edge_count == 4 and m2 == {i: i for i in range(4)}
    # merging the small side of K_{2,3} gives a star
    star, hub, _ = identify(complete_bipartite(2, 3), {0, 1})
    assert star.degree(hub) == 3 and star.edge_count == 3


def test_identify_two_step_agrees_with_one_step():
    rng = random.Random(3)
    for _ in range(30):
        g = random_graph(rng, rng.randint(4, 8), 0.5)
        s1 = set(rng.sample(range(g.n), rng.randint(2, 3)))
        g1, merged, m1 = identify(g, s1)
        extra_pool = [v for v in range(g1.n) if v != merged]
        s2 = {merged} | set(rng.sample(extra_pool, min(2, len(extra_pool))))
        g12, _, _ = identify(g1, s2)
        inv1 = {}
        for old, new in m1.items():
            inv1.setdefault(new, set()).add(old)
        pre = set()
        for new in s2:
            pre |= inv1[new]
        g_direct, _, _ = identify(g, s1 | pre)
        assert g12 == g_direct


def test_separation_order2():
    pair = find_separation_order2(cycle_graph(4))
    assert pair is not None
    a, b = pair
    assert a & b == frozenset({0, 2})
    assert find_separation_order2(complete(5)) is None
    # two K_4 blocks sharing an edge: the shared pair is the cut
    edges = list(itertools.combinations(range(4), 2)) + [
        (a_, b_) for a_, b_ in itertools.combinations([2, 3, 4, 5], 2)
    ]
    g = Graph.from_edges(6, set(edges))
    a, b = find_separation_order2(g)
    assert a & b == frozenset({2, 3})
    with pytest.raises(ValueError):
        find_separation_order2(path_graph(4))


def test_feasible_end_blocks():
    # barbell: two triangles joined by a path
    barbell = Graph.from_edges(
        7,
        [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)],
    )
    out = feasible_end_blocks(barbell, 0)
    assert len(out) == 1 and out[0][0] == frozenset({4, 5, 6}) and out[0][1] == 4
    # star: every edge block avoiding y
    star = complete_bipartite(1, 3)
    out = feasible_end_blocks(star, 1)
    assert all(1 not in b - {c} for b, c in out) and len(out) == 2
    # y itself a cut vertex: every end block qualifies
    out = feasible_end_blocks(path_graph(5), 2)
    assert len(out) == 2
    with pytest.raises(ValueError):
        feasible_end_blocks(complete(4), 0)


def test_end_blocks_shapes():
    ebs = end_blocks(path_graph(4))
    assert len(ebs) == 2
    ebs = end_blocks(complete(4))
    assert ebs == [(frozenset({0, 1, 2, 3}), None)]
