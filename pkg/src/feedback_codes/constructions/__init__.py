from .chains import (
    complete_chain,
    nonadaptive_hamming,
    prop1_ham_plus_one,
    suffix_code,
    theorem2_code,
    two_instance,
)
from .dada import DadaError, DadaRound, DadaState, dada
from .onetime import (
    AssignmentTable,
    ConditionViolated,
    assign_free_words,
    corollary1,
    suffix_free_words,
    theorem2_compose,
    theorem3_rs_analog,
)
from .swap import swap_channel_build
