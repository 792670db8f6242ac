"""Exact cycle-length and path-length spectra for small graphs.

Cycle enumeration is canonical-rooted backtracking: a cycle is only
generated from its smallest vertex, and only in the direction where the
second vertex is smaller than the last, so each cycle is visited once.
The search counts tree nodes against a budget and records one witness
per realized length.  A spectrum that filled its whole feasible range
(3..n, even lengths only for bipartite graphs) is exhaustive even if
the search was cut short, because no further length can appear.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapExceeded
from .graph import Graph, RootedGraph, bipartition

DEFAULT_BUDGET = 10_000_000


def longest_run(values, step: int) -> int:
    """Length of the longest arithmetic progression with `step` inside values."""
    s = set(values)
    best = 0
    for v in s:
        if v - step not in s:
            length = 1
            while v + length * step in s:
                length += 1
            best = max(best, length)
    return best


def find_run(values, count: int, step: int, min_start: int | None = None):
    """Smallest start of a `count`-term progression with `step`, or None."""
    if count <= 0:
        return min_start if min_start is not None else 0
    s = set(values)
    for v in sorted(s):
        if min_start is not None and v < min_start:
            continue
        if all(v + i * step in s for i in range(count)):
            return v
    return None


@dataclass(frozen=True)
class CycleSpectrum:
    """Realized cycle lengths with one witness cycle per length."""

    lengths: tuple[int, ...]
    exhaustive: bool
    witnesses: dict[int, tuple[int, ...]] = field(compare=False, repr=False)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.lengths)

    def witness(self, length: int) -> tuple[int, ...]:
        return self.witnesses[length]

    @property
    def even_lengths(self) -> tuple[int, ...]:
        return tuple(l for l in self.lengths if l % 2 == 0)

    @property
    def odd_lengths(self) -> tuple[int, ...]:
        return tuple(l for l in self.lengths if l % 2 == 1)


@dataclass(frozen=True)
class PathLengthSet:
    """Realized x-y path lengths with one witness path per length."""

    x: int
    y: int
    lengths: tuple[int, ...]
    exhaustive: bool
    witnesses: dict[int, tuple[int, ...]] = field(compare=False, repr=False)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.lengths)

    def witness(self, length: int) -> tuple[int, ...]:
        return self.witnesses[length]


@dataclass(frozen=True)
class SpectrumStats:
    """Even/odd split plus the three progression statistics.

    ce / co are the longest runs with step 2 inside the even / odd
    lengths; c is the longest run of consecutive integers in the full
    set.  All are 0 for an empty spectrum.
    """

    l_even: tuple[int, ...]
    l_odd: tuple[int, ...]
    ce: int
    co: int
    c: int


@dataclass(frozen=True)
class ResidueCoverage:
    """Which residues modulo k are realized by some cycle length."""

    k: int
    residues: tuple[int, ...]
    covers_all: bool
    covers_even: bool


def cycle_spectrum(
    g: Graph,
    budget: int | None = DEFAULT_BUDGET,
    stop_when=None,
) -> CycleSpectrum:
    """All cycle lengths of g, exhaustively within the node budget.

    `stop_when(found)` may abort the search early once the caller has
    seen enough; the result is then marked non-exhaustive unless the
    feasible range was already full.
    """
    n = g.n
    masks = g.masks
    nbrs = g.neighbors
    sides = bipartition(g)
    top = n
    parity = None
    if sides is not None:
        # a bipartite cycle alternates sides, so it cannot exceed twice
        # the smaller side
        parity = 0
        top = 2 * min(len(sides[0]), len(sides[1]))
    possible = {
        length
        for length in range(3, top + 1)
        if parity is None or length % 2 == parity
    }
    found: dict[int, tuple[int, ...]] = {}
    if not possible:
        return CycleSpectrum((), True, {})
    limit = budget if budget is not None else float("inf")
    nodes = 0

    for root in range(n):
        if len(found) == len(possible):
            break
        path = [root]
        onpath = 1 << root
        frames = [(root, 0)]
        while frames:
            v, idx = frames.pop()
            adj = nbrs[v]
            pushed = False
            while idx < len(adj):
                u = adj[idx]
                idx += 1
                if u <= root or onpath >> u & 1:
                    continue
                nodes += 1
                if nodes > limit:
                    return CycleSpectrum(tuple(sorted(found)), False, found)
                frames.append((v, idx))
                frames.append((u, 0))
                path.append(u)
                onpath |= 1 << u
                if len(path) >= 3 and masks[u] >> root & 1 and path[1] < u:
                    length = len(path)
                    if length not in found:
                        found[length] = tuple(path)
                        if len(found) == len(possible):
                            return CycleSpectrum(tuple(sorted(found)), True, found)
                        if stop_when is not None and stop_when(found):
                            return CycleSpectrum(tuple(sorted(found)), False, found)
                pushed = True
                break
            if not pushed:
                path.pop()
                onpath &= ~(1 << v)

    return CycleSpectrum(tuple(sorted(found)), True, found)


def path_length_set(
    rg: RootedGraph,
    budget: int | None = DEFAULT_BUDGET,
    stop_when=None,
) -> PathLengthSet:
    """All simple x-y path lengths, exhaustively within the node budget."""
    g, x, y = rg.graph, rg.x, rg.y
    n = g.n
    nbrs = g.neighbors
    sides = bipartition(g)
    parity = None
    top = n - 1
    if sides is not None:
        a, b = (len(sides[0]), len(sides[1]))
        same = (x in sides[0]) == (y in sides[0])
        parity = 0 if same else 1
        # alternation bounds how much of each side a path can use
        if same:
            own = a if x in sides[0] else b
            other = b if x in sides[0] else a
            top = min(top, 2 * min(own - 1, other))
        else:
            top = min(top, 2 * min(a, b) - 1)
    possible = {
        length
        for length in range(1, top + 1)
        if parity is None or length % 2 == parity
    }
    found: dict[int, tuple[int, ...]] = {}
    if not possible:
        return PathLengthSet(x, y, (), True, {})
    limit = budget if budget is not None else float("inf")
    nodes = 0

    path = [x]
    onpath = 1 << x
    frames = [(x, 0)]
    while frames:
        v, idx = frames.pop()
        adj = nbrs[v]
        pushed = False
        while idx < len(adj):
            u = adj[idx]
            idx += 1
            if onpath >> u & 1:
                continue
            nodes += 1
            if nodes > limit:
                return PathLengthSet(x, y, tuple(sorted(found)), False, found)
            if u == y:
                length = len(path)
                if length not in found:
                    found[length] = tuple(path) + (y,)
                    if len(found) == len(possible):
                        return PathLengthSet(x, y, tuple(sorted(found)), True, found)
                    if stop_when is not None and stop_when(found):
                        return PathLengthSet(x, y, tuple(sorted(found)), False, found)
                continue
            frames.append((v, idx))
            frames.append((u, 0))
            path.append(u)
            onpath |= 1 << u
            pushed = True
            break
        if not pushed:
            path.pop()
            onpath &= ~(1 << v)

    return PathLengthSet(x, y, tuple(sorted(found)), True, found)


def _stats(lengths) -> SpectrumStats:
    evens = tuple(l for l in lengths if l % 2 == 0)
    odds = tuple(l for l in lengths if l % 2 == 1)
    return SpectrumStats(
        l_even=evens,
        l_odd=odds,
        ce=longest_run(evens, 2),
        co=longest_run(odds, 2),
        c=longest_run(lengths, 1),
    )


def stats(cs: CycleSpectrum) -> SpectrumStats:
    """Exact statistics; refuses partial spectra (see lower_bound_stats)."""
    if not cs.exhaustive:
        raise CapExceeded(
            "spectrum is not exhaustive; use lower_bound_stats for bounds"
        )
    return _stats(cs.lengths)


def lower_bound_stats(cs: CycleSpectrum) -> SpectrumStats:
    """Statistics of a possibly partial spectrum: lower bounds only."""
    return _stats(cs.lengths)


def mod_coverage(cs: CycleSpectrum, k: int) -> ResidueCoverage:
    """Residues modulo k realized by the (exhaustive) spectrum.

    covers_even asks for every even residue class: for odd k the even
    numbers already sweep all classes mod k, so covers_even then equals
    covers_all.
    """
    if k < 1:
        raise ValueError("modulus must be at least 1")
    if not cs.exhaustive:
        raise CapExceeded("spectrum is not exhaustive")
    residues = sorted({l % k for l in cs.lengths})
    needed_even = {m % k for m in range(0, 2 * k, 2)}
    return ResidueCoverage(
        k=k,
        residues=tuple(residues),
        covers_all=len(residues) == k,
        covers_even=needed_even.issubset(residues),
    )


def has_ap_of_cycles(cs: CycleSpectrum, k: int, difference: int) -> bool:
    """Does the spectrum contain a k-term progression with this difference?"""
    if difference not in (1, 2):
        raise ValueError("difference must be 1 or 2")
    if not cs.exhaustive:
        raise CapExceeded("spectrum is not exhaustive")
    return find_run(cs.lengths, k, difference) is not None


def spectrum_json(cs: CycleSpectrum, k: int | None = None) -> dict:
    """Serializable report: lengths, exhaustiveness, stats, residues."""
    st = _stats(cs.lengths)
    out = {
        "lengths": list(cs.lengths),
        "exhaustive": cs.exhaustive,
        "ce": st.ce,
        "co": st.co,
        "c": st.c,
    }
    if k is not None:
        residues = sorted({l % k for l in cs.lengths})
        out["mod"] = {"k": k, "residues": residues}
    return out
