"""Finite posets, good chains, chain bounding and Bourbaki-Witt fixpoints."""

from .bounding import (
    BoundingWitness,
    Verdict,
    falsify_bound_assignment,
    selector_for_chain,
    unbounded_chain,
    zorn_maximal,
)
from .errors import *  # noqa: F403
from .fixpoint import (
    AbstractCpo,
    DataflowInstance,
    FinitePosetCpo,
    FixpointReport,
    bw_chain_equals_ggc,
    bw_fixpoint,
    reaching_definitions,
    solve_reaching_definitions,
    validate_cpo_finite,
)
from .gen_io import (
    GenConfig,
    parse_dataflow,
    parse_h_table,
    parse_poset,
    parse_selector,
    random_poset,
    to_dot,
    write_dataflow,
    write_h_table,
    write_poset,
    write_selector,
)
from .chains import (
    Expander,
    GoodChainReport,
    SelectorExpander,
    TableExpander,
    comparability_check,
    enumerate_chains,
    good_chains,
    greatest_good_chain_bruteforce,
    greatest_good_chain_iter,
    is_good,
    is_good_weak,
    selector_derived,
)
from .poset import (
    Poset,
    SubsetBits,
    is_chain,
    is_prop_segment,
    is_segment,
    maximal_elements,
    poset_from_pairs,
    strict_upper_bounds,
    sup_of,
    upper_bounds,
)
from .selector import Selector, Strategy, select
