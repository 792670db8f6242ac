"""Claim verification over graph corpora.

Each claim couples a hypothesis gate (evaluated with the structural
predicates, exactly as stated) with a conclusion that is checked two
ways wherever possible: existence in the exhaustive spectrum, and an
explicit family from the constructive engine, re-validated by an
independent checker.  The two routes must agree; disagreement is
reported as a violation, never silently resolved.  Conjecture targets
are only ever checked by the spectral route and their violations are
findings, not errors.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from . import chromatic, construct, families
from .errors import CapExceeded, ConstructionIncomplete
from .formats import to_graph6
from .graph import (
    Graph,
    RootedGraph,
    bipartition,
    is_k_connected,
    is_rooted_two_connected,
    min_degree,
    rooted_min_degree,
)
from .spectrum import cycle_spectrum, find_run, path_length_set
from .verdicts import HuntReport, Verdict

THEOREM_CLAIMS = (
    "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10", "T11",
    "L12", "L13", "L16", "T19",
)
CONJECTURE_CLAIMS = ("C1", "C2", "CONJ6a", "CONJ6b")


@dataclass(frozen=True)
class Caps:
    spectrum_budget: int | None = 10_000_000
    construct_budget: int | None = 10_000_000
    chromatic_cap: int = chromatic.DEFAULT_CAP


# ---------------------------------------------------------------------------
# family re-validation, independent of the construction internals


def diagnose_family(fam, g: Graph) -> str | None:
    """Re-walk a family against the adjacency; None when it is sound."""
    if getattr(fam, "difference", None) not in (1, 2):
        return f"difference must be 1 or 2, got {getattr(fam, 'difference', None)}"
    if isinstance(fam, construct.PathFamily):
        seqs = fam.paths
        prev = None
        for p in seqs:
            if len(p) < 2:
                return f"path too short: {p}"
            if p[0] != fam.x or p[-1] != fam.y:
                return f"path endpoints are not the roots: {p}"
            if len(set(p)) != len(p):
                return f"path repeats a vertex: {p}"
            for a, b in zip(p, p[1:]):
                if not (0 <= a < g.n and 0 <= b < g.n and g.has_edge(a, b)):
                    return f"missing edge {a}-{b}"
            length = len(p) - 1
            if prev is None:
                if fam.difference == 2 and length < 2:
                    return "first path shorter than 2"
            elif length - prev != fam.difference:
                return f"length step {length - prev} != {fam.difference}"
            prev = length
        return None
    if isinstance(fam, construct.CycleFamily):
        prev = None
        for c in fam.cycles:
            if len(c) < 3:
                return f"cycle too short: {c}"
            if len(set(c)) != len(c):
                return f"cycle repeats a vertex: {c}"
            for a, b in zip(c, c[1:] + (c[0],)):
                if not (0 <= a < g.n and 0 <= b < g.n and g.has_edge(a, b)):
                    return f"missing edge {a}-{b}"
            if prev is not None and len(c) - prev != fam.difference:
                return f"length step {len(c) - prev} != {fam.difference}"
            prev = len(c)
        return None
    return f"unknown family type {type(fam).__name__}"


def cross_check(fam, g: Graph) -> bool:
    return diagnose_family(fam, g) is None


# ---------------------------------------------------------------------------
# conclusion predicates over realized length sets


def _run_pred(count: int, diff: int, parity=None, min_start=None):
    def pred(lengths):
        vals = [l for l in lengths if parity is None or l % 2 == parity]
        return find_run(vals, count, diff, min_start) is not None

    return pred


def _either_run_pred(count: int):
    one = _run_pred(count, 1)
    two = _run_pred(count, 2)
    return lambda lengths: one(lengths) or two(lengths)


def _covers_even_pred(k: int):
    need = {m % k for m in range(0, 2 * k, 2)}
    return lambda lengths: need.issubset({l % k for l in lengths})


def _covers_all_pred(k: int):
    return lambda lengths: len({l % k for l in lengths}) == k


def _eval_cycles(g: Graph, pred, caps: Caps, cache) -> bool:
    cs = cache.get("spectrum") if cache is not None else None
    if cs is None:
        cs = cycle_spectrum(
            g, budget=caps.spectrum_budget, stop_when=lambda f: pred(f.keys())
        )
        if cs.exhaustive and cache is not None:
            cache["spectrum"] = cs
    if pred(cs.lengths):
        return True
    if cs.exhaustive:
        return False
    raise CapExceeded("spectrum budget exhausted before a decision")


def _eval_paths(g: Graph, x: int, y: int, pred, caps: Caps, cache) -> bool:
    key = ("paths", x, y)
    pls = cache.get(key) if cache is not None else None
    if pls is None:
        pls = path_length_set(
            RootedGraph(g, x, y),
            budget=caps.spectrum_budget,
            stop_when=lambda f: pred(f.keys()),
        )
        if pls.exhaustive and cache is not None:
            cache[key] = pls
    if pred(pls.lengths):
        return True
    if pls.exhaustive:
        return False
    raise CapExceeded("path budget exhausted before a decision")


def _attempt(op, promise: int, g: Graph, lengths_pred=None):
    """Run a constructive op; (ok, witness, note)."""
    try:
        fam = op()
    except ConstructionIncomplete as exc:
        if "budget" in str(exc):
            raise CapExceeded(str(exc)) from exc
        return False, None, f"construction failed: {exc}"
    seqs = fam.paths if isinstance(fam, construct.PathFamily) else fam.cycles
    if len(seqs) != promise:
        return False, fam.to_json(), f"family size {len(seqs)} != promise {promise}"
    reason = diagnose_family(fam, g)
    if reason is not None:
        return False, fam.to_json(), f"cross check failed: {reason}"
    if lengths_pred is not None and not lengths_pred(fam.lengths):
        return False, fam.to_json(), "family lengths miss the claimed pattern"
    return True, fam.to_json(), ""


def _combine(graph_id, claim, k, spectral, constructed, witness, note) -> Verdict:
    if constructed is None:
        return Verdict(graph_id, claim, k, True, spectral, witness, note)
    if spectral != constructed:
        msg = f"route disagreement: spectral={spectral} constructed={constructed}"
        if note:
            msg += f" ({note})"
        return Verdict(graph_id, claim, k, True, False, witness, msg)
    return Verdict(graph_id, claim, k, True, spectral and constructed, witness, note)


# ---------------------------------------------------------------------------
# claim handlers


def _need_roots(roots):
    if roots is None:
        raise ValueError("this claim needs roots=(x, y)")
    return roots


def _need_exception(exception):
    if exception is None:
        raise ValueError("this claim needs an exception vertex")
    return exception


def _h_t2(g, k, roots, v):
    x, y = roots
    rg = RootedGraph(g, x, y)
    return (
        bipartition(g) is not None
        and is_rooted_two_connected(rg)
        and rooted_min_degree(rg) >= k + 1
    )


def _c_t2(g, k, roots, v, caps, cache, gid):
    x, y = roots
    pred = _run_pred(k, 2, min_start=2)
    spectral = _eval_paths(g, x, y, pred, caps, cache)
    ok, wit, note = _attempt(
        lambda: construct.ap_paths_bipartite(
            RootedGraph(g, x, y), k, budget=caps.construct_budget
        ),
        k,
        g,
    )
    return _combine(gid, "T2", k, spectral, ok, wit, note)


def _h_t3(g, k, roots, v):
    return (
        g.n >= 2
        and bipartition(g) is not None
        and all(g.degree(u) >= k + 1 for u in range(g.n) if u != v)
    )


def _c_t3(g, k, roots, v, caps, cache, gid):
    spectral = _eval_cycles(g, _run_pred(k, 2), caps, cache)
    ok, wit, note = _attempt(
        lambda: construct.cycles_bipartite(g, v, k, budget=caps.construct_budget),
        k,
        g,
    )
    return _combine(gid, "T3", k, spectral, ok, wit, note)


def _h_t4(g, k, roots, v):
    return g.n >= 1 and bipartition(g) is not None and min_degree(g) >= k + 1


def _c_t4(g, k, roots, v, caps, cache, gid):
    spectral = _eval_cycles(g, _run_pred(k, 2), caps, cache)
    ok, wit, note = _attempt(
        lambda: construct.cycles_bipartite(g, 0, k, budget=caps.construct_budget),
        k,
        g,
    )
    return _combine(gid, "T4", k, spectral, ok, wit, note)


def _h_t5(g, k, roots, v):
    return g.n >= 1 and min_degree(g) >= k + 1


def _c_t5(g, k, roots, v, caps, cache, gid):
    m = k // 2
    even_ok = _eval_cycles(g, _run_pred(m, 2, parity=0), caps, cache)
    odd_gate = is_k_connected(g, 2) and bipartition(g) is None
    spectral = even_ok
    if odd_gate:
        spectral = spectral and _eval_cycles(g, _run_pred(m, 2, parity=1), caps, cache)
    ok, wit, note = _attempt(
        lambda: construct.even_cycles(g, k, budget=caps.construct_budget), m, g
    )
    witness = {"even": wit}
    if odd_gate:
        ok2, wit2, note2 = _attempt(
            lambda: construct.odd_cycles(g, k, budget=caps.construct_budget), m, g
        )
        ok = ok and ok2
        witness["odd"] = wit2
        note = note or note2
    return _combine(gid, "T5", k, spectral, ok, witness, note)


def _h_t6(g, k, roots, v):
    return (
        min_degree(g) >= k + 1
        and is_k_connected(g, 3)
        and bipartition(g) is None
    )


def _c_t6(g, k, roots, v, caps, cache, gid):
    promise = 2 * ((k - 1) // 2)
    spectral = _eval_cycles(g, _run_pred(promise, 1), caps, cache)
    ok, wit, note = _attempt(
        lambda: construct.consecutive_cycles_nonsep(
            g, k, budget=caps.construct_budget
        ),
        promise,
        g,
    )
    return _combine(gid, "T6", k, spectral, ok, wit, note)


def _h_t7(g, k, roots, v):
    return g.n >= 1 and min_degree(g) >= k + 4


def _c_t7(g, k, roots, v, caps, cache, gid):
    spectral = _eval_cycles(g, _either_run_pred(k), caps, cache)
    ok, wit, note = _attempt(
        lambda: construct.k_cycles_general(g, k, budget=caps.construct_budget), k, g
    )
    return _combine(gid, "T7", k, spectral, ok, wit, note)


def _h_t8(g, k, roots, v):
    return k % 2 == 0 and k >= 2 and g.n >= 1 and min_degree(g) >= k + 1


def _c_t8(g, k, roots, v, caps, cache, gid):
    spectral = _eval_cycles(g, _covers_even_pred(k), caps, cache)
    full_gate = is_k_connected(g, 2) and bipartition(g) is None
    if full_gate:
        spectral = spectral and _eval_cycles(g, _covers_all_pred(k), caps, cache)
    need_even = {m % k for m in range(0, 2 * k, 2)}
    ok, wit, note = _attempt(
        lambda: construct.even_cycles(g, k, budget=caps.construct_budget),
        k // 2,
        g,
        lengths_pred=lambda ls: need_even.issubset({l % k for l in ls}),
    )
    witness = {"even": wit}
    if full_gate:
        need_odd = {m % k for m in range(1, 2 * k, 2)}
        ok2, wit2, note2 = _attempt(
            lambda: construct.odd_cycles(g, k, budget=caps.construct_budget),
            k // 2,
            g,
            lengths_pred=lambda ls: need_odd.issubset({l % k for l in ls}),
        )
        ok = ok and ok2
        witness["odd"] = wit2
        note = note or note2
    return _combine(gid, "T8", k, spectral, ok, witness, note)


def _h_t9(g, k, roots, v):
    return k % 2 == 1 and g.n >= 1 and min_degree(g) >= k + 4


def _c_t9(g, k, roots, v, caps, cache, gid):
    spectral = _eval_cycles(g, _covers_all_pred(k), caps, cache)
    ok, wit, note = _attempt(
        lambda: construct.k_cycles_general(g, k, budget=caps.construct_budget),
        k,
        g,
        lengths_pred=lambda ls: len({l % k for l in ls}) == k,
    )
    return _combine(gid, "T9", k, spectral, ok, wit, note)


def _c_t10(g, k, roots, v, caps, cache, gid):
    verdict = chromatic.verify_bound_ce_co(
        g, gid, cap=caps.chromatic_cap, spectrum_budget=caps.spectrum_budget
    )
    return verdict


def _c_t11(g, k, roots, v, caps, cache, gid):
    return chromatic.verify_bound_c(
        g, gid, cap=caps.chromatic_cap, spectrum_budget=caps.spectrum_budget
    )


def _h_l12(g, k, roots, v):
    x, y = roots
    rg = RootedGraph(g, x, y)
    return is_rooted_two_connected(rg) and rooted_min_degree(rg) >= k + 1


def _c_l12(g, k, roots, v, caps, cache, gid):
    x, y = roots
    m = k // 2
    spectral = _eval_paths(g, x, y, _run_pred(m, 2, min_start=2), caps, cache)
    ok, wit, note = _attempt(
        lambda: construct.ap_paths_general(
            RootedGraph(g, x, y), k, budget=caps.construct_budget
        ),
        m,
        g,
    )
    return _combine(gid, "L12", k, spectral, ok, wit, note)


def _h_l13(g, k, roots, v):
    x, y = roots
    return (
        len({x, y, v}) == 3
        and is_k_connected(g, 2)
        and all(g.degree(u) >= k + 1 for u in range(g.n) if u != v)
    )


def _c_l13(g, k, roots, v, caps, cache, gid):
    x, y = roots
    m = (k - 1) // 2
    spectral = _eval_paths(g, x, y, _run_pred(m, 2, min_start=2), caps, cache)
    ok, wit, note = _attempt(
        lambda: construct.ap_paths_one_exception(
            g, x, y, v, k, budget=caps.construct_budget
        ),
        m,
        g,
    )
    return _combine(gid, "L13", k, spectral, ok, wit, note)


def _h_l16(g, k, roots, v):
    return (
        min_degree(g) >= k + 1
        and is_k_connected(g, 2)
        and not is_k_connected(g, 3)
    )


def _c_l16(g, k, roots, v, caps, cache, gid):
    bip = bipartition(g) is not None
    promise = 2 * k - 1 if bip else 2 * (k // 2) - 1
    spectral = _eval_cycles(g, _run_pred(max(promise, 0), 2), caps, cache)
    ok, wit, note = _attempt(
        lambda: construct.cycles_2not3connected(g, k, budget=caps.construct_budget),
        max(promise, 0),
        g,
    )
    return _combine(gid, "L16", k, spectral, ok, wit, note)


def _h_t19(g, k, roots, v):
    return (
        min_degree(g) >= k + 1
        and is_k_connected(g, 2)
        and construct.find_nonsep_induced_odd_cycle(g) is not None
    )


def _c_t19(g, k, roots, v, caps, cache, gid):
    promise = 2 * ((k - 1) // 2)
    spectral = _eval_cycles(g, _run_pred(promise, 1), caps, cache)
    ok, wit, note = _attempt(
        lambda: construct.consecutive_cycles_nonsep(
            g, k, budget=caps.construct_budget
        ),
        promise,
        g,
    )
    return _combine(gid, "T19", k, spectral, ok, wit, note)


def _h_c1(g, k, roots, v):
    return g.n >= 1 and min_degree(g) >= k + 1


def _c_c1(g, k, roots, v, caps, cache, gid):
    holds = _eval_cycles(g, _covers_even_pred(k), caps, cache)
    return Verdict(gid, "C1", k, True, holds)


def _h_c2(g, k, roots, v):
    return (
        g.n >= 1
        and min_degree(g) >= k + 1
        and is_k_connected(g, 2)
        and bipartition(g) is None
    )


def _c_c2(g, k, roots, v, caps, cache, gid):
    holds = _eval_cycles(g, _covers_all_pred(k), caps, cache)
    return Verdict(gid, "C2", k, True, holds)


def _h_conj6a(g, k, roots, v):
    return (
        g.n >= 1
        and min_degree(g) >= k + 1
        and is_k_connected(g, 2)
        and bipartition(g) is None
    )


def _c_conj6a(g, k, roots, v, caps, cache, gid):
    holds = _eval_cycles(g, _run_pred((k + 1) // 2, 2, parity=1), caps, cache)
    return Verdict(gid, "CONJ6a", k, True, holds)


def _h_conj6b(g, k, roots, v):
    return g.n >= 1 and min_degree(g) >= k + 1


def _c_conj6b(g, k, roots, v, caps, cache, gid):
    holds = _eval_cycles(g, _either_run_pred(k), caps, cache)
    return Verdict(gid, "CONJ6b", k, True, holds)


@dataclass(frozen=True)
class _ClaimMeta:
    hypothesis: object
    conclude: object
    roots_mode: str  # "none" | "pair" | "pair+exception" | "exception"
    uses_k: bool = True


CLAIMS: dict[str, _ClaimMeta] = {
    "T2": _ClaimMeta(_h_t2, _c_t2, "pair"),
    "T3": _ClaimMeta(_h_t3, _c_t3, "exception"),
    "T4": _ClaimMeta(_h_t4, _c_t4, "none"),
    "T5": _ClaimMeta(_h_t5, _c_t5, "none"),
    "T6": _ClaimMeta(_h_t6, _c_t6, "none"),
    "T7": _ClaimMeta(_h_t7, _c_t7, "none"),
    "T8": _ClaimMeta(_h_t8, _c_t8, "none"),
    "T9": _ClaimMeta(_h_t9, _c_t9, "none"),
    "T10": _ClaimMeta(lambda g, k, r, v: True, _c_t10, "none", uses_k=False),
    "T11": _ClaimMeta(lambda g, k, r, v: True, _c_t11, "none", uses_k=False),
    "L12": _ClaimMeta(_h_l12, _c_l12, "pair"),
    "L13": _ClaimMeta(_h_l13, _c_l13, "pair+exception"),
    "L16": _ClaimMeta(_h_l16, _c_l16, "none"),
    "T19": _ClaimMeta(_h_t19, _c_t19, "none"),
    "C1": _ClaimMeta(_h_c1, _c_c1, "none"),
    "C2": _ClaimMeta(_h_c2, _c_c2, "none"),
    "CONJ6a": _ClaimMeta(_h_conj6a, _c_conj6a, "none"),
    "CONJ6b": _ClaimMeta(_h_conj6b, _c_conj6b, "none"),
}


def verify(
    claim: str,
    g: Graph,
    k: int | None = None,
    roots: tuple[int, int] | None = None,
    exception: int | None = None,
    graph_id: str | None = None,
    caps: Caps = Caps(),
    _cache: dict | None = None,
) -> Verdict:
    """Check one claim on one graph; hypothesis first, then both routes."""
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}")
    meta = CLAIMS[claim]
    if meta.roots_mode in ("pair", "pair+exception"):
        roots = _need_roots(roots)
    if meta.roots_mode in ("exception", "pair+exception"):
        exception = _need_exception(exception)
    if meta.uses_k and (k is None or k < 1):
        raise ValueError(f"claim {claim} needs k >= 1")
    gid = graph_id if graph_id is not None else f"g6:{to_graph6(g)}"
    if roots is not None:
        gid += f":x={roots[0]},y={roots[1]}"
    if exception is not None:
        gid += f":v={exception}"
    if not meta.hypothesis(g, k, roots, exception):
        return Verdict(gid, claim, k, False)
    cache = _cache if _cache is not None else {}
    return meta.conclude(g, k, roots, exception, caps, cache, gid)


def _instances_for(meta: _ClaimMeta, g: Graph):
    if meta.roots_mode == "none":
        yield None, None
    elif meta.roots_mode == "pair":
        for x, y in itertools.combinations(range(g.n), 2):
            yield (x, y), None
    elif meta.roots_mode == "exception":
        for v in range(g.n):
            yield None, v
    else:
        for x, y in itertools.combinations(range(g.n), 2):
            for v in range(g.n):
                if v != x and v != y:
                    yield (x, y), v


def sweep_iter(
    claim: str,
    spec: families.FamilySpec,
    k_values,
    caps: Caps = Caps(),
    limit: int | None = None,
    include_ungated: bool = False,
):
    """Yield gated verdicts for a family corpus, deterministically ordered."""
    meta = CLAIMS[claim]
    ks = list(k_values) if meta.uses_k else [None]
    for gid, g in families.stream(spec, limit):
        for roots, exc in _instances_for(meta, g):
            cache: dict = {}
            for k in ks:
                v = verify(
                    claim, g, k, roots=roots, exception=exc,
                    graph_id=gid, caps=caps, _cache=cache,
                )
                if v.hypothesis_met or include_ungated:
                    yield v


def sweep(
    claim: str,
    spec: families.FamilySpec,
    k_values,
    caps: Caps = Caps(),
    limit: int | None = None,
):
    """Materialized sweep: (verdicts, summary)."""
    verdicts = list(sweep_iter(claim, spec, k_values, caps, limit))
    gated = [v for v in verdicts if v.hypothesis_met]
    holds = [v for v in gated if v.conclusion_holds]
    summary = {
        "claim": claim,
        "family": str(spec),
        "k_values": [k for k in (k_values if CLAIMS[claim].uses_k else [])],
        "gated": len(gated),
        "holds": len(holds),
        "violations": len(gated) - len(holds),
    }
    return verdicts, summary


_HUNT_NEAR_MISS = {
    "C1": lambda g, k, caps, cache: not _eval_cycles(g, _covers_all_pred(k), caps, cache),
    "C2": lambda g, k, caps, cache: not _eval_cycles(g, _either_run_pred(k), caps, cache),
    "CONJ6a": lambda g, k, caps, cache: not _eval_cycles(
        g, _run_pred((k + 1) // 2 + 1, 2, parity=1), caps, cache
    ),
    "CONJ6b": lambda g, k, caps, cache: not _eval_cycles(
        g, _either_run_pred(k + 1), caps, cache
    ),
}


def hunt(
    target: str,
    spec: families.FamilySpec,
    k: int,
    budget: int,
    caps: Caps = Caps(),
) -> HuntReport:
    """Randomized counterexample hunt for a conjecture target.

    Violations (conclusion fails on a gated instance) are reported as
    graph6 strings that re-verify standalone; near misses are instances
    on which a strengthened conclusion fails while the target holds.
    """
    if target not in CONJECTURE_CLAIMS:
        raise ValueError(f"hunt target must be one of {CONJECTURE_CLAIMS}")
    if spec.kind != "rand":
        raise ValueError("hunts expect a random family spec")
    meta = CLAIMS[target]
    violations: list[str] = []
    near: list[str] = []
    skipped = 0
    tested = 0
    for i in range(budget):
        g = families.generate(spec, i)
        if not meta.hypothesis(g, k, None, None):
            skipped += 1
            continue
        cache: dict = {}
        try:
            verdict = meta.conclude(g, k, None, None, caps, cache, f"{spec}[{i}]")
        except CapExceeded:
            skipped += 1
            continue
        tested += 1
        if not verdict.conclusion_holds:
            violations.append(to_graph6(g))
            continue
        try:
            if _HUNT_NEAR_MISS[target](g, k, caps, cache):
                near.append(to_graph6(g))
        except CapExceeded:
            pass
    return HuntReport(
        target=target,
        model=str(spec),
        k=k,
        instances=tested,
        seed_start=spec.seed or 0,
        seed_end=(spec.seed or 0) + budget - 1,
        violations=tuple(violations),
        near_misses=tuple(near),
        skipped=skipped,
    )


def verdicts_to_jsonl(verdicts) -> str:
    return "".join(
        json.dumps(v.to_json(), sort_keys=True) + "\n" for v in verdicts
    )
