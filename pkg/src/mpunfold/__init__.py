"""Boolean network dynamics under classical and most permissive semantics,
and the three-variables-per-component Boolean unfolding whose asynchronous
behavior captures most permissive reachability."""

from .bdd import DiagramManager, FunctionRep
from .expr import BnetParseError, format_expr
from .models import EXAMPLE_A_BNET, SIGNAL_BNET, example_a, signal_model
from .network import (
    BooleanNetwork,
    RegEdge,
    RegGraph,
    build_function,
    eval_rule,
    infer_regulatory_graph,
    parse_bnet,
    parse_bnet_file,
    print_bnet,
    sign_witness,
    support,
)
from .oracle import (
    EquivalenceReport,
    Mismatch,
    RandomNetSpec,
    check_equivalence,
    naive_mp_successors,
    random_network,
)
from .reach import (
    DEFAULT_CAP,
    Attractor,
    CapExceeded,
    Edge,
    ReachResult,
    Stg,
    attractors,
    export_dot,
    fixed_points,
    mp_boolean_projection,
    reachable_set,
    reaches,
)
from .semantics import (
    async_successors,
    gamma_can_be,
    general_successors,
    is_boolean_state,
    mp_successors,
    sync_successor,
)
from .unfold import (
    ARTIFACT_TRIPLETS,
    LEVEL_TO_TRIPLET,
    TRANSIENT_TRIPLETS,
    TRIPLET_TO_LEVEL,
    VALID_TRIPLETS,
    UnfoldSpec,
    build_condition,
    decode_state,
    encode_state,
    translate_trajectory,
    triplet_step,
    unfold,
    unfolded_names,
)

__version__ = "0.1.0"

__all__ = [
    "ARTIFACT_TRIPLETS",
    "Attractor",
    "BnetParseError",
    "BooleanNetwork",
    "CapExceeded",
    "DEFAULT_CAP",
    "DiagramManager",
    "EXAMPLE_A_BNET",
    "Edge",
    "EquivalenceReport",
    "FunctionRep",
    "LEVEL_TO_TRIPLET",
    "Mismatch",
    "RandomNetSpec",
    "ReachResult",
    "RegEdge",
    "RegGraph",
    "SIGNAL_BNET",
    "Stg",
    "TRANSIENT_TRIPLETS",
    "TRIPLET_TO_LEVEL",
    "UnfoldSpec",
    "VALID_TRIPLETS",
    "async_successors",
    "attractors",
    "build_condition",
    "build_function",
    "check_equivalence",
    "decode_state",
    "encode_state",
    "eval_rule",
    "example_a",
    "export_dot",
    "fixed_points",
    "format_expr",
    "gamma_can_be",
    "general_successors",
    "infer_regulatory_graph",
    "is_boolean_state",
    "mp_boolean_projection",
    "mp_successors",
    "naive_mp_successors",
    "parse_bnet",
    "parse_bnet_file",
    "print_bnet",
    "random_network",
    "reachable_set",
    "reaches",
    "sign_witness",
    "signal_model",
    "support",
    "sync_successor",
    "translate_trajectory",
    "triplet_step",
    "unfold",
    "unfolded_names",
]
