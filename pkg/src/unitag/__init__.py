"""Universal tag array design: tag sets under hybridization constraints,
c-token bounds, and pool-aware multiplexing."""

from .hybrid import (
    HybGraph,
    Pool,
    Selection,
    build_graph,
    compute_XY,
    condition_holds,
    construct_assignment,
    hybridizes,
    validate_assignment,
)
from .multiplex import (
    VARIANTS,
    ScheduleResult,
    primer_potential,
    schedule,
    schedule_graph,
    select_min,
    tag_potential,
    utilization_stats,
)
from .seq import DnaSeq, g, h, revcomp, weight
from .tagset import (
    FeasibilityReport,
    TagSetConfig,
    TokenRegistry,
    greedy_generate,
    greedy_search,
    oracle_verify,
    try_extend,
    verify_feasible,
)
from .tokens import (
    BoundReport,
    TokenClass,
    classify,
    enumerate_tokens,
    extract_tokens,
    is_token,
    lemma1_bounds,
    theorem1_tag_bound,
)

__version__ = "0.1.0"
