"""Command-line entry point.

Exit codes: 0 success (including conjecture findings, which print a
DISCOVERY marker), 1 input or parse error, 2 hypothesis violated,
3 cap or budget exhausted, 4 theorem-claim violation (a bug).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chromatic, construct, families, harness
from .errors import CapExceeded, ConstructionIncomplete, HypothesisViolated
from .formats import load_graph, to_graph6
from .graph import Graph, RootedGraph
from .spectrum import cycle_spectrum, spectrum_json


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="infile", help="graph file (graph6 or edge list)")
    src.add_argument("--gen", dest="gen", help="family spec, e.g. complete:6")
    p.add_argument("--format", default="auto", choices=("auto", "g6", "edges"))


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=10_000_000,
                   help="search-node budget for spectra and constructions")
    p.add_argument("--cap", type=int, default=chromatic.DEFAULT_CAP,
                   help="vertex cap for exact coloring")
    p.add_argument("--seed", type=int, default=None,
                   help="override the seed of a rand: family spec")
    p.add_argument("--out", help="write the report to this path")
    p.add_argument("--json", action="store_true", help="emit JSON to stdout")


def _spec_of(args) -> families.FamilySpec:
    spec = families.parse_spec(args.gen)
    if getattr(args, "seed", None) is not None:
        if spec.kind != "rand":
            raise ValueError("--seed only applies to rand: family specs")
        spec = families.FamilySpec(spec.kind, spec.params, args.seed)
    return spec


def _read_graph(args) -> Graph:
    if args.infile:
        return load_graph(args.infile, args.format)
    return families.generate(_spec_of(args))


def _config_echo(args, command: str) -> dict:
    echo = {"command": command}
    for key in ("infile", "gen", "k", "claim", "x", "y", "v", "kind", "mode",
                "kmin", "kmax", "count", "limit", "budget", "cap", "seed"):
        value = getattr(args, key, None)
        if value is not None:
            echo[key] = value
    return echo


def _emit(args, payload: dict, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(json.dumps(payload, sort_keys=True) + "\n")
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _caps(args) -> harness.Caps:
    return harness.Caps(
        spectrum_budget=args.budget,
        construct_budget=args.budget,
        chromatic_cap=args.cap,
    )


def cmd_analyze(args) -> int:
    g = _read_graph(args)
    cs = cycle_spectrum(g, budget=args.budget)
    payload = spectrum_json(cs, k=args.k)
    payload["config"] = _config_echo(args, "analyze")
    text = (
        f"n={g.n} m={g.edge_count} lengths={list(cs.lengths)}"
        f" exhaustive={cs.exhaustive} ce={payload['ce']} co={payload['co']}"
        f" c={payload['c']}"
    )
    if "mod" in payload:
        text += f" mod{args.k}={payload['mod']['residues']}"
    _emit(args, payload, text)
    return 0 if cs.exhaustive else 3


def cmd_paths(args) -> int:
    g = _read_graph(args)
    rg = RootedGraph(g, args.x, args.y)
    if args.mode == "bipartite":
        fam = construct.ap_paths_bipartite(rg, args.k, budget=args.budget)
    elif args.mode == "general":
        fam = construct.ap_paths_general(rg, args.k, budget=args.budget)
    else:
        fam = construct.ap_paths_one_exception(
            g, args.x, args.y, args.v, args.k, budget=args.budget
        )
    payload = fam.to_json()
    _emit(args, payload, f"{len(fam.paths)} paths, lengths {list(fam.lengths)}")
    return 0


def cmd_cycles(args) -> int:
    g = _read_graph(args)
    kind = args.kind
    if kind == "bipartite":
        fam = construct.cycles_bipartite(g, args.v, args.k, budget=args.budget)
    elif kind == "even":
        fam = construct.even_cycles(g, args.k, budget=args.budget)
    elif kind == "odd":
        fam = construct.odd_cycles(g, args.k, budget=args.budget)
    elif kind == "consecutive":
        fam = construct.consecutive_cycles_nonsep(g, args.k, budget=args.budget)
    elif kind == "two-cut":
        fam = construct.cycles_2not3connected(g, args.k, budget=args.budget)
    else:
        fam = construct.k_cycles_general(g, args.k, budget=args.budget)
    payload = fam.to_json()
    _emit(args, payload, f"{len(fam.cycles)} cycles, lengths {list(fam.lengths)}")
    return 0


def cmd_verify(args) -> int:
    g = _read_graph(args)
    roots = (args.x, args.y) if args.x is not None and args.y is not None else None
    verdict = harness.verify(
        args.claim, g, args.k, roots=roots, exception=args.v, caps=_caps(args)
    )
    payload = verdict.to_json()
    payload["config"] = _config_echo(args, "verify")
    status = (
        "HYPOTHESIS-NOT-MET"
        if not verdict.hypothesis_met
        else ("PASS" if verdict.conclusion_holds else "FAIL")
    )
    _emit(args, payload, f"{args.claim} {verdict.graph_id}: {status} {verdict.note}")
    if not verdict.hypothesis_met:
        return 2
    if verdict.conclusion_holds:
        return 0
    if args.claim in harness.CONJECTURE_CLAIMS:
        print("DISCOVERY: conjecture violated; re-check and report", file=sys.stderr)
        return 0
    return 4


def cmd_sweep(args) -> int:
    spec = _spec_of(args)
    ks = range(args.kmin, args.kmax + 1)
    caps = _caps(args)
    counts = {"gated": 0, "holds": 0, "violations": 0}
    lines = []
    for v in harness.sweep_iter(args.claim, spec, ks, caps=caps, limit=args.limit):
        counts["gated"] += 1
        if v.conclusion_holds:
            counts["holds"] += 1
        else:
            counts["violations"] += 1
        lines.append(json.dumps(v.to_json(), sort_keys=True))
    summary = {
        "claim": args.claim,
        "family": str(spec),
        "k_values": list(ks) if harness.CLAIMS[args.claim].uses_k else [],
        "config": _config_echo(args, "sweep"),
        **counts,
    }
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
        print(json.dumps(summary, sort_keys=True))
    elif args.json:
        for ln in lines:
            print(ln)
        print(json.dumps(summary, sort_keys=True))
    else:
        print(
            f"{args.claim} over {spec}: gated={counts['gated']}"
            f" holds={counts['holds']} violations={counts['violations']}"
        )
    if counts["violations"]:
        if args.claim in harness.CONJECTURE_CLAIMS:
            print("DISCOVERY: conjecture violated on swept instances", file=sys.stderr)
            return 0
        return 4
    return 0


def cmd_hunt(args) -> int:
    spec = _spec_of(args)
    report = harness.hunt(args.claim, spec, args.k, args.count, caps=_caps(args))
    payload = report.to_json()
    payload["config"] = _config_echo(args, "hunt")
    _emit(
        args,
        payload,
        f"{report.target} over {report.model}: tested={report.instances}"
        f" violations={len(report.violations)} near_misses={len(report.near_misses)}"
        f" skipped={report.skipped}",
    )
    if report.violations:
        print("DISCOVERY: conjecture violated; graph6 witnesses in report",
              file=sys.stderr)
    return 0


def cmd_gen(args) -> int:
    spec = _spec_of(args)
    lines = []
    if spec.kind in ("catalog", "rand"):
        n = args.count if args.count is not None else 1
        for _, g in families.stream(spec, limit=n):
            lines.append(to_graph6(g))
    else:
        lines.append(to_graph6(families.generate(spec)))
    text = "\n".join(lines)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cyclekit",
        description="cycle spectra, constructive families, claim verification",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="spectrum and statistics of one graph")
    _add_input(p)
    _add_common(p)
    p.add_argument("--k", type=int, default=None, help="also report residues mod k")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("paths", help="difference-2 path family between roots")
    _add_input(p)
    _add_common(p)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--v", type=int, help="exception vertex (mode one-exception)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", default="bipartite",
                   choices=("bipartite", "general", "one-exception"))
    p.set_defaults(fn=cmd_paths)

    p = sub.add_parser("cycles", help="cycle family constructions")
    _add_input(p)
    _add_common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--v", type=int, default=0, help="exception vertex (bipartite kind)")
    p.add_argument("--kind", default="general",
                   choices=("bipartite", "even", "odd", "consecutive",
                            "two-cut", "general"))
    p.set_defaults(fn=cmd_cycles)

    p = sub.add_parser("verify", help="check one claim on one graph")
    _add_input(p)
    _add_common(p)
    p.add_argument("--claim", required=True, choices=sorted(harness.CLAIMS))
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--x", type=int, default=None)
    p.add_argument("--y", type=int, default=None)
    p.add_argument("--v", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("sweep", help="check one claim over a family")
    _add_common(p)
    p.add_argument("--claim", required=True, choices=sorted(harness.CLAIMS))
    p.add_argument("--gen", required=True, help="family spec")
    p.add_argument("--kmin", type=int, default=1)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--limit", type=int, default=None,
                   help="cap the number of streamed instances")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("hunt", help="randomized conjecture counterexample hunt")
    _add_common(p)
    p.add_argument("--claim", required=True,
                   choices=sorted(harness.CONJECTURE_CLAIMS))
    p.add_argument("--gen", required=True, help="random family spec (rand:...)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--count", type=int, default=100, help="instances to test")
    p.set_defaults(fn=cmd_hunt)

    p = sub.add_parser("gen", help="emit family members as graph6")
    p.add_argument("--gen", required=True, help="family spec")
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_gen)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except HypothesisViolated as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return 2
    except (CapExceeded, ConstructionIncomplete) as exc:
        print(f"budget or cap exhausted: {exc}", file=sys.stderr)
        return 3
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
