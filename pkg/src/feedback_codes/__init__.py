"""Single-error-correcting codes for q-ary channels with limited feedback."""

from .bounds import (
    BoundsReport,
    compute_bounds,
    dada_quantities,
    dada_size,
    hamming_bound,
    m_cf,
    swap_capacity,
    swap_n_max,
    theorem2_size,
    theorem5_condition,
)
from .channel import ErrorGraph, PrefixGraph, prefix_graph, swap01_channel, symmetric_channel, word_outputs
from .cloud import (
    BlockPartition,
    Cloud,
    FeedbackCode,
    decode,
    expand,
    free_census,
    from_block_code,
    validate_structure,
)
from .constructions import (
    complete_chain,
    corollary1,
    dada,
    prop1_ham_plus_one,
    swap_channel_build,
    theorem2_code,
    theorem2_compose,
    theorem3_rs_analog,
    two_instance,
)
from .field import BlockCode, greedy_gv_code, hamming_code, make_field
from .verify import bound_report, certify, game_check, theorem1_condition_check
from .words import concat, hamming_distance, rank, split, unrank

__version__ = "0.1.0"
