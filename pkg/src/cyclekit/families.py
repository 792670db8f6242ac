"""Graph generators: standard families, labeled catalogs, random models.

Generation is a pure function of the parameters (and seed, for the
random model), so corpora are reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .graph import Graph

CATALOG_MAX = 6


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be at least 1")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides must be non-empty")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def ktt_chain(t: int, s: int) -> Graph:
    """s balanced complete-bipartite blocks, each sharing one vertex with
    an s-cycle.

    The cycle vertices are 0..s-1; block i owns the cycle vertex i plus
    2t-1 fresh vertices.  The result is connected, non-bipartite (the
    s-cycle is its only odd cycle), has minimum degree t, and every
    cycle vertex is a cut vertex, so the graph is not 2-connected.
    """
    if s < 3 or s % 2 == 0:
        raise ValueError("s must be odd and at least 3")
    if t < 1:
        raise ValueError("t must be at least 1")
    edges = [(i, (i + 1) % s) for i in range(s)]
    nxt = s
    for i in range(s):
        left = [i] + [nxt + j for j in range(t - 1)]
        right = [nxt + t - 1 + j for j in range(t)]
        nxt += 2 * t - 1
        edges.extend((u, v) for u in left for v in right)
    return Graph.from_edges(nxt, edges)


def catalog(n: int, start: int = 0):
    """All labeled graphs on n vertices, streamed in adjacency-bitmask order.

    Bit j of the mask is edge number j in the lexicographic pair order
    (0,1), (0,2), ..., (n-2,n-1).  `start` allows restarting mid-stream.
    """
    if n > CATALOG_MAX:
        raise ValueError(f"catalog capped at n <= {CATALOG_MAX}")
    if n < 1:
        raise ValueError("n must be at least 1")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(start, 1 << len(pairs)):
        yield Graph.from_edges(
            n, (pairs[j] for j in range(len(pairs)) if mask >> j & 1)
        )


def random_min_degree(n: int, d: int, seed: int) -> Graph:
    """A random graph patched up to minimum degree >= d, deterministic per seed.

    Starts from G(n, p) with p = min(1, (d+2)/n), then repeatedly picks
    the smallest deficient vertex and joins it to a random non-neighbor,
    preferring other deficient vertices.
    """
    if not 0 <= d < n:
        raise ValueError("need 0 <= d < n")
    rng = random.Random(seed)
    p = min(1.0, (d + 2) / n)
    adj = [set() for _ in range(n)]
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            adj[u].add(v)
            adj[v].add(u)
    while True:
        deficient = [v for v in range(n) if len(adj[v]) < d]
        if not deficient:
            break
        u = deficient[0]
        others = [v for v in range(n) if v != u and v not in adj[u]]
        preferred = [v for v in others if len(adj[v]) < d]
        v = rng.choice(preferred or others)
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in adj))


@dataclass(frozen=True)
class FamilySpec:
    """Parsed corpus descriptor, e.g. complete:7 or rand:n=12,d=6,seed=42."""

    kind: str
    params: tuple[int, ...]
    seed: int | None = None

    def __str__(self) -> str:
        if self.kind == "rand":
            n, d = self.params
            return f"rand:n={n},d={d},seed={self.seed}"
        return f"{self.kind}:" + ",".join(str(p) for p in self.params)


_KINDS = {"complete": 1, "kbip": 2, "kttchain": 2, "catalog": 1, "rand": 0}


def parse_spec(text: str) -> FamilySpec:
    if ":" not in text:
        raise ValueError(f"bad family spec {text!r} (expected kind:params)")
    kind, rest = text.split(":", 1)
    kind = kind.strip()
    if kind not in _KINDS:
        raise ValueError(f"unknown family kind {kind!r}")
    if kind == "rand":
        fields = {}
        for part in rest.split(","):
            key, _, val = part.partition("=")
            fields[key.strip()] = int(val)
        missing = {"n", "d", "seed"} - set(fields)
        if missing:
            raise ValueError(f"rand spec missing {sorted(missing)}")
        return FamilySpec("rand", (fields["n"], fields["d"]), fields["seed"])
    params = tuple(int(p) for p in rest.split(","))
    if len(params) != _KINDS[kind]:
        raise ValueError(f"{kind} expects {_KINDS[kind]} parameter(s)")
    return FamilySpec(kind, params)


def generate(spec: FamilySpec, index: int = 0) -> Graph:
    """The index-th member of the family (random kinds shift the seed)."""
    if spec.kind == "complete":
        return complete(spec.params[0])
    if spec.kind == "kbip":
        return complete_bipartite(*spec.params)
    if spec.kind == "kttchain":
        return ktt_chain(*spec.params)
    if spec.kind == "rand":
        n, d = spec.params
        return random_min_degree(n, d, spec.seed + index)
    if spec.kind == "catalog":
        raise ValueError("catalog families are streamed; use stream()")
    raise ValueError(f"unknown family kind {spec.kind!r}")


def stream(spec: FamilySpec, limit: int | None = None):
    """Yield (graph_id, graph) pairs for the family, deterministically."""
    if spec.kind == "catalog":
        n = spec.params[0]
        count = 1 << (n * (n - 1) // 2)
        stop = count if limit is None else min(limit, count)
        for i, g in enumerate(catalog(n)):
            if i >= stop:
                break
            yield f"{spec}[{i}]", g
    elif spec.kind == "rand":
        i = 0
        while limit is None or i < limit:
            yield f"{spec}[{i}]", generate(spec, i)
            i += 1
    else:
        yield str(spec), generate(spec)
