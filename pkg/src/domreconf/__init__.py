"""Dominating set reconfiguration under token addition/removal."""

from .canonical import (
    cograph_canonical,
    interval_cells,
    label_interval,
    label_tree,
    transform_cograph,
    transform_interval,
    transform_tree,
    tree_cells,
)
from .cotree import Cotree, NotCograph, cotree_decompose, evaluate_cotree, is_cograph
from .formats import ParseError, format_instance, format_sequence, parse_instance, parse_sequence
from .generators import GenSpec, generate
from .domset import deletable_vertices, is_dominating, is_minimal, min_dominating_set_bruteforce
from .graph import Graph, connected_components, is_tree
from .intervals import IntervalRepresentation, validate_interval_representation
from .reconfig import (
    BudgetExceeded,
    DsrInstance,
    Move,
    MoveKind,
    ReconfSequence,
    apply,
    oracle_reachable,
    reverse,
    verify,
)
from .reductions import (
    ReductionMap,
    VcrInstance,
    normalize_sequence,
    reduce_split_to_bipartite_dsr,
    reduce_vcr_to_dsr,
    reduce_vcr_to_split_dsr,
    vcr_oracle,
)
from .scheme import ClassEvidence, Decision, Reason, UnsupportedClass, decide, solve

__version__ = "0.1.0"
