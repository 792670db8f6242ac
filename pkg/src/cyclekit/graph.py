"""Immutable simple graphs over dense integer vertex ids.

Everything downstream (spectra, constructions, verification) works on
these values: an adjacency-set representation plus the structural
predicates the algorithms lean on -- connectivity, block/cut-vertex
decomposition, bipartitions, rooted two-connectivity, order-two
separations.  All operations are pure.  Transformations that change the
vertex set return the new graph together with an explicit old-to-new id
mapping, so witnesses found in a rewritten graph can be lifted back to
the original one.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``neighbors[v]`` is the sorted tuple of v's neighbors.  Adjacency
    must be symmetric, loop-free and duplicate-free; the constructor
    rejects anything else.
    """

    n: int
    neighbors: tuple[tuple[int, ...], ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.neighbors) != self.n:
            raise ValueError("adjacency list length must equal n")
        masks = []
        for u, nbrs in enumerate(self.neighbors):
            m = 0
            last = -1
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor id {v} out of range")
                if v == u:
                    raise ValueError("loops are not allowed")
                if v <= last:
                    raise ValueError("neighbor lists must be sorted sets")
                last = v
                m |= 1 << v
            masks.append(m)
        for u in range(self.n):
            for v in self.neighbors[u]:
                if not masks[v] >> u & 1:
                    raise ValueError(f"adjacency not symmetric at {u}-{v}")
        object.__setattr__(self, "_masks", tuple(masks))

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            sets[u].add(v)
            sets[v].add(u)
        return Graph(n, tuple(tuple(sorted(s)) for s in sets))

    @property
    def masks(self) -> tuple[int, ...]:
        """Per-vertex adjacency bitmasks (bit v of masks[u] == edge uv)."""
        return self._masks

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def edges(self):
        for u in range(self.n):
            for v in self.neighbors[u]:
                if v > u:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.neighbors) // 2

    def add_edge(self, u: int, v: int) -> "Graph":
        if self.has_edge(u, v):
            return self
        return Graph.from_edges(self.n, list(self.edges()) + [(u, v)])

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        return Graph.from_edges(
            self.n, (e for e in self.edges() if e != (min(u, v), max(u, v)))
        )


@dataclass(frozen=True)
class RootedGraph:
    """A graph with two distinguished, distinct root vertices."""

    graph: Graph
    x: int
    y: int

    def __post_init__(self) -> None:
        if not (0 <= self.x < self.graph.n and 0 <= self.y < self.graph.n):
            raise ValueError("roots must be vertices of the graph")
        if self.x == self.y:
            raise ValueError("roots must be distinct")


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut vertices, and their incidence pairs.

    Each block is an isolated vertex, a single edge, or a maximal
    2-connected induced subgraph; every edge lies in exactly one block.
    ``tree_edges`` lists (block index, cut vertex) incidences of the
    block-cut forest.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    tree_edges: tuple[tuple[int, int], ...]


def min_degree(g: Graph) -> int:
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    return min(g.degree(v) for v in range(g.n))


def rooted_min_degree(rg: RootedGraph) -> int:
    """Minimum degree over the non-root vertices."""
    g = rg.graph
    if g.n < 3:
        raise ValueError("rooted minimum degree needs a non-root vertex")
    return min(g.degree(v) for v in range(g.n) if v != rg.x and v != rg.y)


def connected_components(g: Graph, excluded: frozenset[int] | set[int] = frozenset()):
    """Components of g minus `excluded`, sorted by smallest member."""
    seen = set(excluded)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors[u]:
                if v not in seen:
                    seen.add(v)
                    comp.add(v)
                    queue.append(v)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


@lru_cache(maxsize=1 << 16)
def bipartition(g: Graph):
    """A 2-coloring (A, B) per connected component, or None.

    Each component is colored from its smallest vertex, which receives
    color A; the output is therefore deterministic.  Graphs are
    immutable, so results are memoized.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    a = frozenset(v for v in range(g.n) if color[v] == 0)
    b = frozenset(v for v in range(g.n) if color[v] == 1)
    return a, b


@lru_cache(maxsize=1 << 16)
def blocks(g: Graph) -> BlockDecomposition:
    """Block/cut-vertex decomposition via iterative lowpoint DFS."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    cut: set[int] = set()
    raw_blocks: list[frozenset[int]] = []

    for root in range(n):
        if disc[root] != -1:
            continue
        if g.degree(root) == 0:
            disc[root] = timer
            timer += 1
            raw_blocks.append(frozenset((root,)))
            continue
        edge_stack: list[tuple[int, int]] = []
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # frames: (vertex, parent, next neighbor index)
        frames = [(root, -1, 0)]
        while frames:
            v, parent, idx = frames.pop()
            nbrs = g.neighbors[v]
            descended = False
            while idx < len(nbrs):
                w = nbrs[idx]
                idx += 1
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    if v == root:
                        root_children += 1
                    frames.append((v, parent, idx))
                    frames.append((w, v, 0))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            # retreat from v into its parent
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    # edges above (parent, v) form one block
                    verts = set()
                    while edge_stack:
                        a, b = edge_stack.pop()
                        verts.add(a)
                        verts.add(b)
                        if (a, b) == (parent, v):
                            break
                    raw_blocks.append(frozenset(verts))
                    if parent != root:
                        cut.add(parent)
        if root_children >= 2:
            cut.add(root)

    order = sorted(range(len(raw_blocks)), key=lambda i: sorted(raw_blocks[i]))
    ordered = tuple(raw_blocks[i] for i in order)
    tree_edges = tuple(
        (i, c) for i, b in enumerate(ordered) for c in sorted(cut & b)
    )
    return BlockDecomposition(ordered, frozenset(cut), tree_edges)


def end_blocks(g: Graph):
    """Blocks touching at most one cut vertex, with that vertex (or None)."""
    bd = blocks(g)
    out = []
    for b in bd.blocks:
        cuts = sorted(bd.cut_vertices & b)
        if len(cuts) <= 1:
            out.append((b, cuts[0] if cuts else None))
    return out


def is_rooted_two_connected(rg: RootedGraph) -> bool:
    """Connected, at least three vertices, and every end-block holds a
    root that is not a cut vertex."""
    g = rg.graph
    if g.n < 3 or not is_connected(g):
        return False
    bd = blocks(g)
    for b in bd.blocks:
        cuts = bd.cut_vertices & b
        if len(cuts) <= 1:
            if not ((rg.x in b and rg.x not in cuts) or (rg.y in b and rg.y not in cuts)):
                return False
    return True


@lru_cache(maxsize=1 << 16)
def is_k_connected(g: Graph, k: int) -> bool:
    """Standard vertex connectivity >= k, supported for k in 1..3."""
    if not 1 <= k <= 3:
        raise ValueError("only k in 1..3 is supported")
    if g.n <= k:
        return False
    if not is_connected(g):
        return False
    if k == 1:
        return True
    if blocks(g).cut_vertices:
        return False
    if k == 2:
        return True
    # k == 3: delete each vertex and re-test 2-connectivity
    for v in range(g.n):
        sub, _ = subgraph(g, frozenset(range(g.n)) - {v})
        if not is_connected(sub) or blocks(sub).cut_vertices:
            return False
    return True


def subgraph(g: Graph, vertices) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on `vertices`, reindexed densely by old id order.

    Returns the new graph and the old->new id mapping.
    """
    keep = sorted(set(vertices))
    mapping = {old: new for new, old in enumerate(keep)}
    edges = [
        (mapping[u], mapping[v])
        for u, v in g.edges()
        if u in mapping and v in mapping
    ]
    return Graph.from_edges(len(keep), edges), mapping


def remove_vertices(g: Graph, vertices) -> tuple[Graph, dict[int, int]]:
    return subgraph(g, frozenset(range(g.n)) - set(vertices))


def identify(g: Graph, s) -> tuple[Graph, int, dict[int, int]]:
    """Merge the vertex set `s` into one vertex, keeping the graph simple.

    The merged vertex takes the slot of min(s); all vertices are densely
    reindexed in old-id order.  Returns (graph, merged new id, old->new
    mapping over every original vertex).
    """
    s = set(s)
    if not s:
        raise ValueError("cannot identify an empty set")
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    anchor = min(s)
    keep = sorted((set(range(g.n)) - s) | {anchor})
    position = {old: new for new, old in enumerate(keep)}
    mapping = {old: position[anchor if old in s else old] for old in range(g.n)}
    edges = set()
    for u, v in g.edges():
        a, b = mapping[u], mapping[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(len(keep), edges), position[anchor], mapping


def find_separation_order2(g: Graph):
    """A separation (A, B) with |A & B| = 2 in a 2-connected graph.

    Returns None when g is 3-connected.  The cut pair is the
    lexicographically smallest one; A holds the component of g - pair
    that contains the smallest remaining vertex.
    """
    if not is_k_connected(g, 2):
        raise ValueError("input must be 2-connected")
    for u, v in itertools.combinations(range(g.n), 2):
        comps = connected_components(g, excluded={u, v})
        if len(comps) >= 2:
            a = frozenset(comps[0] | {u, v})
            rest: set[int] = set()
            for c in comps[1:]:
                rest |= c
            b = frozenset(rest | {u, v})
            return a, b
    return None


def feasible_end_blocks(g: Graph, y: int):
    """End-blocks (B, b) whose interior B - b avoids y.

    Requires a connected graph with at least one cut vertex, so that
    every end-block has a well-defined cut vertex b.
    """
    if not is_connected(g):
        raise ValueError("input must be connected")
    ebs = [(b, c) for b, c in end_blocks(g) if c is not None]
    if not ebs:
        raise ValueError("input must not be 2-connected (no cut vertex)")
    out = [(b, c) for b, c in ebs if y not in b - {c}]
    return sorted(out, key=lambda bc: sorted(bc[0]))


def bfs_path(g: Graph, start: int, goals, avoid=frozenset()):
    """Deterministic shortest path from start to any goal vertex, or None.

    `avoid` vertices are forbidden entirely (start/goals must not be in
    it).  Ties are broken by the sorted neighbor order.
    """
    goals = {goals} if isinstance(goals, int) else set(goals)
    if start in goals:
        return [start]
    prev = {start: -1}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in g.neighbors[u]:
            if v in prev or v in avoid:
                continue
            prev[v] = u
            if v in goals:
                path = [v]
                while path[-1] != start:
                    path.append(prev[path[-1]])
                path.reverse()
                return path
            queue.append(v)
    return None
