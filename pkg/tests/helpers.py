"""Shared fixtures and independent brute-force oracles for the tests.

The oracles deliberately use a different algorithm family than the
library (subset/permutation enumeration instead of canonical DFS) so
they can certify its outputs.
"""

from __future__ import annotations

import itertools
import random

from cyclekit.graph import Graph


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def wheel(n: int) -> Graph:
    """Hub 0 joined to an n-cycle 1..n."""
    rim = [(1 + i, 1 + (i + 1) % n) for i in range(n)]
    return Graph.from_edges(n + 1, rim + [(0, 1 + i) for i in range(n)])


def blowup_cycle(n: int, t: int) -> Graph:
    """Each vertex of an n-cycle replaced by t independent copies."""
    def vid(i, a):
        return i * t + a

    edges = []
    for i in range(n):
        for a in range(t):
            for b in range(t):
                edges.append((vid(i, a), vid((i + 1) % n, b)))
    return Graph.from_edges(n * t, edges)


def two_cliques_shared_edge(size: int) -> Graph:
    """Two K_size blocks glued along one edge (vertices 0 and 1)."""
    left = list(range(size))
    right = [0, 1] + list(range(size, 2 * size - 2))
    edges = set()
    for part in (left, right):
        edges |= {(a, b) for a, b in itertools.combinations(sorted(part), 2)}
    return Graph.from_edges(2 * size - 2, edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# oracles


def oracle_cycle_lengths(g: Graph) -> set[int]:
    """Cycle lengths by subset + permutation enumeration (small n only)."""
    out: set[int] = set()
    for size in range(3, g.n + 1):
        found = False
        for sub in itertools.combinations(range(g.n), size):
            first = sub[0]
            for perm in itertools.permutations(sub[1:]):
                if perm[0] > perm[-1]:
                    continue
                seq = (first,) + perm
                if all(
                    g.has_edge(seq[i], seq[(i + 1) % size]) for i in range(size)
                ):
                    out.add(size)
                    found = True
                    break
            if found:
                break
    return out


def oracle_path_lengths(g: Graph, x: int, y: int) -> set[int]:
    """x-y path lengths by enumerating intermediate vertex orderings."""
    others = [v for v in range(g.n) if v not in (x, y)]
    out: set[int] = set()
    if g.has_edge(x, y):
        out.add(1)
    for size in range(1, len(others) + 1):
        for sub in itertools.combinations(others, size):
            done = size + 1 in out
            if done:
                break
            for perm in itertools.permutations(sub):
                seq = (x,) + perm + (y,)
                if all(g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
                    out.add(size + 1)
                    break
    return out


def oracle_max_cut(g: Graph) -> int:
    best = 0
    for mask in range(1 << (g.n - 1)) if g.n else [0]:
        side = [(mask >> v) & 1 for v in range(g.n - 1)] + [0]
        best = max(best, sum(1 for u, v in g.edges() if side[u] != side[v]))
    return best


def oracle_chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    for t in range(2, g.n + 1):
        for assign in itertools.product(range(t), repeat=g.n):
            if all(assign[u] != assign[v] for u, v in g.edges()):
                return t
    return g.n


def oracle_longest_run(values, step: int) -> int:
    vals = sorted(set(values))
    best = 0
    for v in vals:
        length = 0
        while v + length * step in set(vals):
            length += 1
        best = max(best, length)
    return best
