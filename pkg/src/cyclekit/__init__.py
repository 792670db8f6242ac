"""Cycle spectra, constructive path/cycle families, and claim verification
for graphs under minimum-degree conditions."""

from .errors import CapExceeded, ConstructionIncomplete, HypothesisViolated, NoCore
from .graph import (
    BlockDecomposition,
    Graph,
    RootedGraph,
    bipartition,
    blocks,
    feasible_end_blocks,
    find_separation_order2,
    identify,
    is_k_connected,
    is_rooted_two_connected,
    min_degree,
    rooted_min_degree,
)
from .formats import from_graph6, load_graph, parse_edge_list, to_graph6
from .spectrum import (
    CycleSpectrum,
    PathLengthSet,
    ResidueCoverage,
    SpectrumStats,
    cycle_spectrum,
    has_ap_of_cycles,
    lower_bound_stats,
    mod_coverage,
    path_length_set,
    stats,
)
from .construct import (
    CycleFamily,
    PathFamily,
    SCore,
    ap_paths_bipartite,
    ap_paths_general,
    ap_paths_one_exception,
    consecutive_cycles_nonsep,
    cycles_2not3connected,
    cycles_bipartite,
    even_cycles,
    find_nonsep_induced_odd_cycle,
    find_s_core,
    k_cycles_general,
    max_bipartite_subgraph,
    odd_cycles,
)
from .families import (
    FamilySpec,
    catalog,
    complete,
    complete_bipartite,
    ktt_chain,
    parse_spec,
    random_min_degree,
)
from .chromatic import (
    ChromaticCertificate,
    chromatic_number,
    critical_subgraph,
    verify_bound_c,
    verify_bound_ce_co,
)
from .harness import Caps, cross_check, diagnose_family, hunt, sweep, verify
from .verdicts import HuntReport, Verdict

__all__ = [name for name in dir() if not name.startswith("_")]
