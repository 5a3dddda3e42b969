"""graphforge: sequential graph construction under bounded resources.

A library and CLI for building graphs one vertex at a time from one-bit
instructions under several memory models, for the closed-form families those
machines realize, for exact likelihoods under randomness-only construction,
and for the bit costs of each resource.  Everything is sized for exhaustive
desk-scale verification in exact arithmetic.
"""

from .families import (
    alternating_runs,
    fading_path_sizes,
    fading_table_family,
    family_E,
    family_Eprime,
    family_K,
    family_Kprime,
    family_Ktilde,
    full_table_family,
    runs_of_ones,
    runs_of_zeros,
    threshold_creation,
    zero_anchored_blocks,
)
from .graphs import (
    Graph,
    add_vertex,
    automorphism_count,
    canonical_form,
    complete_bipartite,
    complete_graph,
    complete_split,
    connected_components,
    contains_induced,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_graph_classes,
    from_json,
    induced_subgraph,
    is_isomorphic,
    is_linear_forest,
    is_threshold,
    is_threshold_by_forbidden,
    is_tree,
    join,
    linear_forest,
    path_graph,
    relabel,
    remove_last_vertex,
    to_bitstring,
    to_dot,
    to_json,
)
from .machines import (
    FULL_MEMORY,
    FULL_RULES,
    MODIFIABLE,
    NO_MEMORY,
    NO_MEMORY_RULES,
    Action,
    ConstructionTrace,
    InvalidActionForModel,
    LabeledGraph,
    MemoryModel,
    ModifyUnsupported,
    ResourceCost,
    RuleSet,
    StepRecord,
    canonical_rule,
    fading_memory,
    interpret,
    interpret_modifiable,
    is_memory_modifiable_output,
    memory_modifiable_steps,
    parse_model,
    parse_rule,
    swap_rule,
)
from .randomness import (
    Binomial,
    McEstimate,
    Uniform,
    dyad_bits,
    likelihood_bounds,
    likelihood_exact,
    likelihood_extremes,
    likelihood_mc,
    randomness_cost_a,
    randomness_cost_a_closed,
    sample_gnp,
    sample_vertex_addition,
)
from .trees import (
    ParentVector,
    build_tree_from_instructions,
    decode_parent_bits,
    encode_parent_bits,
    enumerate_tree_classes,
    is_recursive_tree,
    prufer_decode,
    prufer_encode,
    sample_ua,
    sample_ua_parents,
    tree_cost,
    tree_positivity_check,
    ua_likelihood_exact,
)
from .verify import (
    VerificationReport,
    enumerate_outputs,
    expressiveness_count,
    find_constructions,
    hierarchy_report,
    reachable_classes,
    verify_proposition,
)

__version__ = "0.1.0"
