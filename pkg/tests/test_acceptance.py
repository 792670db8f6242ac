"""Acceptance suite: one test per criterion, each printing a PASS/FAIL
line (run with `pytest -s` to watch them stream)."""

import itertools
import json
import random
import time
from contextlib import contextmanager
from dataclasses import replace

import cyclekit.construct as cx
from cyclekit.chromatic import chromatic_number, verify_bound_c, verify_bound_ce_co
from cyclekit.families import (
    catalog,
    complete,
    complete_bipartite,
    ktt_chain,
    parse_spec,
    random_min_degree,
)
from cyclekit.graph import (
    Graph,
    RootedGraph,
    bipartition,
    is_connected,
    is_k_connected,
    is_rooted_two_connected,
    min_degree,
    rooted_min_degree,
)
from cyclekit.harness import (
    CLAIMS,
    Caps,
    _instances_for,
    cross_check,
    sweep_iter,
    verdicts_to_jsonl,
    verify,
)
from cyclekit.spectrum import cycle_spectrum, mod_coverage, path_length_set, stats

from helpers import petersen, random_graph, two_cliques_shared_edge


from conftest import record_acceptance


@contextmanager
def criterion(cid: str, limit: float):
    t0 = time.time()
    try:
        yield
    except BaseException:
        line = f"ACCEPTANCE {cid}: FAIL ({time.time() - t0:.1f}s)"
        print(line)
        record_acceptance(line)
        raise
    elapsed = time.time() - t0
    verdict = "PASS" if elapsed < limit else "FAIL"
    line = f"ACCEPTANCE {cid}: {verdict} ({elapsed:.1f}s, limit {limit:g}s)"
    print(line)
    record_acceptance(line)
    assert elapsed < limit, f"{cid} took {elapsed:.1f}s (limit {limit}s)"


def test_criterion_1_even_odd_tightness():
    with criterion("1-even-odd-tightness", 5):
        for k in range(2, 8):
            g = complete(k + 2)
            cs = cycle_spectrum(g)
            evens = [l for l in cs.lengths if l % 2 == 0]
            odds = [l for l in cs.lengths if l % 2 == 1]
            assert len(evens) == k // 2, (k, evens)
            if k % 2 == 0:
                assert len(odds) == k // 2, (k, odds)
            assert len(cx.even_cycles(g, k).cycles) == k // 2
            assert len(cx.odd_cycles(g, k).cycles) == k // 2


def test_criterion_2_extremal_spectra():
    with criterion("2-extremal-spectra", 10):
        for k in range(1, 7):
            cs = cycle_spectrum(complete(k + 2))
            assert set(cs.lengths) == set(range(3, k + 3))
            assert stats(cs).c == k
            for n in range(k + 1, k + 4):
                cs = cycle_spectrum(complete_bipartite(k + 1, n))
                assert set(cs.lengths) == set(range(4, 2 * k + 3, 2)), (k, n)
                assert stats(cs).ce == k


def test_criterion_3_bipartite_paths_witness_and_oracle():
    with criterion("3-bipartite-paths", 600):
        checked = 0

        def drive(g):
            nonlocal checked
            if bipartition(g) is None:
                return
            for x, y in itertools.combinations(range(g.n), 2):
                rg = RootedGraph(g, x, y)
                if not is_rooted_two_connected(rg):
                    continue
                top = rooted_min_degree(rg) - 1
                if top < 1:
                    continue
                oracle = set(path_length_set(rg).lengths)
                for k in range(1, top + 1):
                    fam = cx.ap_paths_bipartite(rg, k)
                    assert len(fam.paths) == k
                    assert cross_check(fam, g), (fam, x, y)
                    assert set(fam.lengths) <= oracle
                    checked += 1

        for n in range(1, 7):
            for g in catalog(n):
                drive(g)
        for a in range(1, 7):
            for b in range(a, 7):
                drive(complete_bipartite(a, b))
        assert checked > 1000, checked
        print(f"  criterion 3 instances: {checked}")


# graph-level necessary conditions, used only to skip hopeless instances
_PREGATE = {
    "T3": lambda g: g.n >= 2 and bipartition(g) is not None,
    "T4": lambda g: bipartition(g) is not None and g.n >= 1 and min_degree(g) >= 2,
    "T5": lambda g: g.n >= 1 and min_degree(g) >= 2,
    "T6": lambda g: min_degree(g) >= 2 and is_k_connected(g, 3),
    "T7": lambda g: g.n >= 1 and min_degree(g) >= 5,
    "T8": lambda g: g.n >= 1 and min_degree(g) >= 3,
    "T9": lambda g: g.n >= 1 and min_degree(g) >= 5,
    "L12": lambda g: g.n >= 3 and is_connected(g),
    "L13": lambda g: is_k_connected(g, 2),
    "L16": lambda g: min_degree(g) >= 2 and is_k_connected(g, 2)
    and not is_k_connected(g, 3),
    "T19": lambda g: min_degree(g) >= 2 and is_k_connected(g, 2),
}

_CRITERION_4_CLAIMS = (
    "T3", "T4", "T5", "T6", "T7", "T8", "T9", "L12", "L13", "L16", "T19",
)


def test_criterion_4_catalog_sweeps_dual_route():
    with criterion("4-catalog-sweeps", 1800):
        caps = Caps()
        gated = {c: 0 for c in _CRITERION_4_CLAIMS}
        for n in range(1, 7):
            for g in catalog(n):
                for claim in _CRITERION_4_CLAIMS:
                    if not _PREGATE[claim](g):
                        continue
                    meta = CLAIMS[claim]
                    for roots, exc in _instances_for(meta, g):
                        cache = {}
                        for k in range(1, 6):
                            if not meta.hypothesis(g, k, roots, exc):
                                continue
                            v = verify(
                                claim, g, k, roots=roots, exception=exc,
                                caps=caps, _cache=cache,
                            )
                            assert v.hypothesis_met
                            assert v.conclusion_holds, (claim, v)
                            gated[claim] += 1
        # every claim must actually have been exercised
        for claim, count in gated.items():
            assert count > 0, f"{claim} never gated"
        print(f"  criterion 4 gated instances: {gated}")


def test_criterion_5_mod_coverage_random():
    with criterion("5-mod-coverage", 600):
        caps = Caps()
        for k in (2, 4, 6):
            lo, hi = k + 2, min(14, k + 8)
            for i in range(200):
                n = lo + i % (hi - lo + 1)
                g = random_min_degree(n, k + 1, seed=1000 * k + i)
                v = verify("T8", g, k, caps=caps)
                assert v.hypothesis_met
                assert v.conclusion_holds, (k, i, v)
        for k in (3, 5):
            lo, hi = max(k + 5, 8), 14
            for i in range(200):
                n = lo + i % (hi - lo + 1)
                g = random_min_degree(n, k + 4, seed=5000 * k + i)
                v = verify("T9", g, k, caps=caps)
                assert v.hypothesis_met
                assert v.conclusion_holds, (k, i, v)


def test_criterion_6_chromatic_bounds():
    with criterion("6-chromatic-bounds", 900):
        def check(g, gid):
            assert verify_bound_ce_co(g, gid).conclusion_holds, gid
            assert verify_bound_c(g, gid).conclusion_holds, gid

        for n in range(1, 7):
            for i, g in enumerate(catalog(n)):
                check(g, f"catalog:{n}[{i}]")
        for n in range(3, 12):
            check(complete(n), f"complete:{n}")
        check(petersen(), "petersen")
        # tightness on odd complete graphs
        for k in range(1, 5):
            g = complete(2 * k + 3)
            st = stats(cycle_spectrum(g))
            chi = chromatic_number(g).chi
            assert chi == 2 * min(st.ce, st.co) + 3, k


def test_criterion_7_no_residue_two():
    with criterion("7-residue-two-gap", 1):
        for k in range(3, 9):
            cov = mod_coverage(cycle_spectrum(complete(k + 1)), k)
            assert set(cov.residues) == set(range(k)) - {2}, k
            assert not cov.covers_all


def test_criterion_8_chained_blocks_negative_control():
    with criterion("8-negative-controls", 5):
        for t in (2, 3):
            for s in (3, 5):
                g = ktt_chain(t, s)
                st = stats(cycle_spectrum(g))
                assert st.co == 1, (t, s)
                for k in (2, 4, 6):
                    v = verify("C2", g, k)
                    assert not v.hypothesis_met, (t, s, k)
                lengths = cycle_spectrum(g).lengths
                for k in (4, 6):
                    assert len({l % k for l in lengths}) < k, (t, s, k)


def _mutation_pool():
    k44 = complete_bipartite(4, 4)
    k6 = complete(6)
    k66 = complete_bipartite(6, 6)
    k10 = complete(10)
    glued = two_cliques_shared_edge(6)
    pool = [
        (cx.cycles_bipartite(k44, 0, 3), k44),
        (cx.ap_paths_bipartite(RootedGraph(k44, 0, 1), 3), k44),
        (cx.even_cycles(k6, 4), k6),
        (cx.odd_cycles(k6, 4), k6),
        (cx.consecutive_cycles_nonsep(k6, 4), k6),
        (cx.cycles_2not3connected(glued, 4), glued),
        (cx.ap_paths_general(RootedGraph(k6, 0, 1), 4), k6),
        (cx.k_cycles_general(k10, 5), k10),
        (cx.ap_paths_bipartite(RootedGraph(k66, 0, 1), 5), k66),
    ]
    for fam, g in pool:
        assert cross_check(fam, g)
    return pool


def _mutate(fam, g, kind, rng):
    """Return (family, graph) guaranteed to violate the contract."""
    seqs = fam.paths if isinstance(fam, cx.PathFamily) else fam.cycles
    is_path = isinstance(fam, cx.PathFamily)

    def with_seqs(new):
        key = "paths" if is_path else "cycles"
        return replace(fam, **{key: tuple(tuple(s) for s in new)})

    if kind == 0:  # remove an edge some sequence walks
        seq = seqs[rng.randrange(len(seqs))]
        i = rng.randrange(len(seq) if not is_path else len(seq) - 1)
        u, v = seq[i], seq[(i + 1) % len(seq)]
        return fam, g.remove_edge(u, v)
    if kind == 1 and len(seqs) >= 2:  # reorder breaks the progression
        return with_seqs(tuple(reversed(seqs))), g
    if kind == 2:  # repeat an interior vertex
        seq = list(seqs[0])
        seq.insert(1, seq[0])
        return with_seqs((tuple(seq),) + tuple(seqs[1:])), g
    if kind == 3:  # out-of-range difference
        return replace(fam, difference=3), g
    # endpoint / closing corruption
    if is_path:
        seq = list(seqs[-1])[:-1]
        return with_seqs(tuple(seqs[:-1]) + (tuple(seq),)), g
    seq = list(seqs[-1]) + [g.n]
    return with_seqs(tuple(seqs[:-1]) + (tuple(seq),)), g


def test_criterion_9_property_suite():
    with criterion("9-property-suite", 300):
        # 10^4 randomized mutations, all rejected
        rng = random.Random(20240817)
        pool = _mutation_pool()
        rejected = 0
        for i in range(10_000):
            fam, g = pool[i % len(pool)]
            bad_fam, bad_g = _mutate(fam, g, rng.randrange(5), rng)
            assert not cross_check(bad_fam, bad_g), (i, bad_fam)
            rejected += 1
        assert rejected == 10_000

        # spectrum monotonicity over 10^3 random subgraph pairs
        rng = random.Random(515)
        for _ in range(1_000):
            g = random_graph(rng, rng.randint(4, 9), rng.uniform(0.25, 0.55))
            keep = [v for v in range(g.n) if rng.random() < 0.85]
            from cyclekit.graph import subgraph

            h, _ = subgraph(g, keep)
            for u, v in list(h.edges()):
                if rng.random() < 0.15:
                    h = h.remove_edge(u, v)
            assert set(cycle_spectrum(h).lengths) <= set(cycle_spectrum(g).lengths)

        # byte-identical reports for identical invocations
        spec = parse_spec("catalog:4")
        first = verdicts_to_jsonl(sweep_iter("T5", spec, [1, 2, 3]))
        second = verdicts_to_jsonl(sweep_iter("T5", spec, [1, 2, 3]))
        assert first == second and first
        from cyclekit.harness import hunt

        ra = hunt("C1", parse_spec("rand:n=9,d=3,seed=77"), k=2, budget=30)
        rb = hunt("C1", parse_spec("rand:n=9,d=3,seed=77"), k=2, budget=30)
        assert json.dumps(ra.to_json(), sort_keys=True) == json.dumps(
            rb.to_json(), sort_keys=True
        )
