"""Fixed-parameter MaxCut above the Poljak-Turzik lower bound.

All bounds and targets are kept in quarter units so comparisons stay exact
integers.
"""

from .errors import *  # noqa: F401,F403
from .extend import claim18_cut, extend_cut, replay
from .graph import (
    Cut,
    QuarterBound,
    WeightedGraph,
    block_cut_forest,
    cut_weight,
    edwards_erdos_quarters,
    msf_weight,
    normalize_multigraph,
    poljak_turzik_quarters,
)
from .io import parse_graph, serialize_graph
from .kernels import BACKEND
from .oracle import OracleResult, assert_pt_bound, brute_max_cut
from .reduction import ReductionOutcome, ReductionStep, reduce, verify_ucf
from .rules import RuleInstance, apply_rule, check_rule, classify_leaf_block, select_rule
from .solver import Instance, Verdict, combine_subset, decide, decide_k, decide_target, max_cut, solve, solve_k
from .ucf import VertexWeights, brute_maxcut_vertex_weights, solve_ucf

__version__ = "0.1.0"
