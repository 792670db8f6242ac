"""Exact chromatic numbers and critical subgraphs at desk scale.

The solver is branch and bound: a greedy clique gives the lower bound, a
greedy coloring the upper bound, and backtracking with color-symmetry
breaking settles everything in between.  Vertices are tried in order of
decreasing degree (ids break ties), so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded
from .graph import Graph
from .spectrum import cycle_spectrum, stats
from .verdicts import Verdict

DEFAULT_CAP = 14


@dataclass(frozen=True)
class ChromaticCertificate:
    chi: int
    coloring: tuple[int, ...]
    critical_vertices: tuple[int, ...] | None = None
    critical_edges: tuple[tuple[int, int], ...] | None = None

    def to_json(self) -> dict:
        out: dict = {"chi": self.chi, "coloring": list(self.coloring)}
        if self.critical_vertices is not None:
            out["critical"] = {
                "vertices": list(self.critical_vertices),
                "edges": [list(e) for e in (self.critical_edges or ())],
            }
        return out


def _greedy_clique(g: Graph) -> list[int]:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    clique: list[int] = []
    for v in order:
        if all(g.has_edge(v, u) for u in clique):
            clique.append(v)
    return clique


def _greedy_coloring(g: Graph) -> list[int]:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    color = [-1] * g.n
    for v in order:
        used = {color[u] for u in g.neighbors[v] if color[u] != -1}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def _try_coloring(g: Graph, colors: int):
    """Backtracking `colors`-coloring, or None if impossible."""
    n = g.n
    if n == 0:
        return []
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    assign = [-1] * n

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        forbidden = {assign[u] for u in g.neighbors[v] if assign[u] != -1}
        top = min(used + 1, colors)
        for c in range(top):
            if c in forbidden:
                continue
            assign[v] = c
            if rec(i + 1, max(used, c + 1)):
                return True
            assign[v] = -1
        return False

    return assign if rec(0, 0) else None


def chromatic_number(g: Graph, cap: int = DEFAULT_CAP) -> ChromaticCertificate:
    """Exact chromatic number with a proper coloring as witness."""
    if g.n > cap:
        raise CapExceeded(f"graph order {g.n} exceeds the cap {cap}")
    if g.n == 0:
        return ChromaticCertificate(0, ())
    lower = len(_greedy_clique(g))
    greedy = _greedy_coloring(g)
    upper = max(greedy) + 1
    if lower == upper:
        return ChromaticCertificate(upper, tuple(greedy))
    for t in range(lower, upper):
        attempt = _try_coloring(g, t)
        if attempt is not None:
            return ChromaticCertificate(t, tuple(attempt))
    return ChromaticCertificate(upper, tuple(greedy))


@dataclass(frozen=True)
class CriticalSubgraph:
    """A chi-critical subgraph in original vertex ids."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def to_graph(self) -> tuple[Graph, dict[int, int]]:
        mapping = {old: new for new, old in enumerate(self.vertices)}
        return (
            Graph.from_edges(
                len(self.vertices),
                ((mapping[u], mapping[v]) for u, v in self.edges),
            ),
            mapping,
        )


def critical_subgraph(g: Graph, cap: int = DEFAULT_CAP) -> CriticalSubgraph:
    """Delete edges, then vertices, while the chromatic number survives.

    Edges are scanned before vertices, both in lexicographic order, and
    the scan restarts after each deletion; the fixed point is critical:
    removing any single edge or vertex lowers the chromatic number.
    """
    base = chromatic_number(g, cap).chi
    vertices = list(range(g.n))
    edges = sorted(g.edges())

    def chi_of(vs, es) -> int:
        mapping = {old: new for new, old in enumerate(vs)}
        h = Graph.from_edges(len(vs), ((mapping[u], mapping[v]) for u, v in es))
        return chromatic_number(h, cap).chi

    changed = True
    while changed:
        changed = False
        for e in list(edges):
            trial = [f for f in edges if f != e]
            if chi_of(vertices, trial) == base:
                edges = trial
                changed = True
                break
        if changed:
            continue
        for v in list(vertices):
            trial_v = [u for u in vertices if u != v]
            trial_e = [e for e in edges if v not in e]
            if trial_v and chi_of(trial_v, trial_e) == base:
                vertices, edges = trial_v, trial_e
                changed = True
                break
    return CriticalSubgraph(tuple(vertices), tuple(edges))


def certificate_with_critical(g: Graph, cap: int = DEFAULT_CAP) -> ChromaticCertificate:
    cert = chromatic_number(g, cap)
    crit = critical_subgraph(g, cap)
    return ChromaticCertificate(cert.chi, cert.coloring, crit.vertices, crit.edges)


def _is_complete(g: Graph) -> bool:
    return g.n >= 1 and all(g.degree(v) == g.n - 1 for v in range(g.n))


def verify_bound_ce_co(
    g: Graph,
    graph_id: str = "",
    cap: int = DEFAULT_CAP,
    spectrum_budget: int | None = None,
) -> Verdict:
    """chi <= 2 * min(ce, co) + 3, checked exactly."""
    cs = cycle_spectrum(g, budget=spectrum_budget)
    st = stats(cs)
    chi = chromatic_number(g, cap).chi
    bound = 2 * min(st.ce, st.co) + 3
    holds = chi <= bound
    note = f"chi={chi} ce={st.ce} co={st.co} bound={bound}"
    if holds and chi == bound:
        note += " tight"
    return Verdict(graph_id, "T10", None, True, holds, None, note)


def verify_bound_c(
    g: Graph,
    graph_id: str = "",
    cap: int = DEFAULT_CAP,
    spectrum_budget: int | None = None,
) -> Verdict:
    """chi <= c + 4; complete graphs are also checked against chi >= c + 2."""
    cs = cycle_spectrum(g, budget=spectrum_budget)
    st = stats(cs)
    chi = chromatic_number(g, cap).chi
    holds = chi <= st.c + 4
    note = f"chi={chi} c={st.c}"
    if _is_complete(g) and g.n >= 2:
        converse = chi >= st.c + 2
        holds = holds and converse
        note += f" complete-converse={'ok' if converse else 'violated'}"
    return Verdict(graph_id, "T11", None, True, holds, None, note)
