import pytest

from feedback_codes.bounds import dada_size, m_cf, swap_capacity
from feedback_codes.channel import prefix_graph, symmetric_channel
from feedback_codes.cloud import Cloud, FeedbackCode, expand, free_census, validate_structure
from feedback_codes.constructions import (
    ConditionViolated,
    DadaError,
    DadaRound,
    assign_free_words,
    complete_chain,
    corollary1,
    dada,
    prop1_ham_plus_one,
    suffix_free_words,
    swap_channel_build,
    theorem2_code,
    theorem2_compose,
    theorem3_rs_analog,
    two_instance,
)
from feedback_codes.constructions.chains import two_instance_plan
from feedback_codes.field import BlockCode, NotPrimePower
from feedback_codes.verify import game_check
from feedback_codes.words import all_words, unrank


def certified(code):
    assert validate_structure(code).ok
    assert game_check(code).ok
    return code


def assert_ball_sized(code):
    vol = 1 + code.n * (code.q - 1)
    assert all(len(expand(c, code.partition)) == vol for c in code.clouds)


# -- one-time feedback ---------------------------------------------------------

def test_theorem2_compose_ternary(ternary_hamming):
    code = theorem2_compose(3, 6, 2, 4, ternary_hamming.subcode(6))
    assert len(code) == 54
    assert code.partition.lengths == (2, 4)
    certified(code)
    assert_ball_sized(code)


def test_theorem2_compose_corollary_parameters():
    zero = BlockCode(6, 2, ((0, 0),), 3)
    code = theorem2_compose(6, 7, 5, 2, zero, certify=False)
    assert len(code) == 6**5 == 7776
    assert free_census(code) == 0


def test_theorem2_compose_condition_violated():
    # 6 words of length 3 cannot have distance 3; the count check fails first:
    # each v is reachable from 2*3 prefixes carrying 6 messages = 36 > 27
    bogus = BlockCode(3, 3, tuple(unrank(i, 3, 3) for i in range(6)), 1)
    with pytest.raises(ConditionViolated):
        theorem2_compose(3, 6, 3, 3, bogus)


def test_theorem2_compose_bad_split(ternary_hamming):
    with pytest.raises(ValueError):
        theorem2_compose(3, 6, 2, 3, ternary_hamming)


def test_assignment_accounting(ternary_hamming):
    ch = symmetric_channel(3)
    sub = ternary_hamming.subcode(6)
    graph = prefix_graph(ch, 2)
    table = assign_free_words(graph, sub, ch)
    free = set(suffix_free_words(sub, ch))
    assert len(free) == 81 - 6 * 9 == 27
    for v in range(9):
        words = list(table.assignments[v].values())
        assert len(words) == len(set(words)) == 4 * 6 == table.demand(v)
        assert set(words) <= free
        assert table.demand(v) <= table.free_counts[v]


def test_heterogeneous_suffix_codes(ternary_hamming):
    # different (smaller) codes per prefix are allowed
    codes = [ternary_hamming.subcode(1 + (u % 6)) for u in range(9)]
    code = theorem2_compose(3, 6, 2, 4, codes)
    assert len(code) == sum(len(c) for c in codes)


@pytest.mark.parametrize("q, k, n, size", [(6, 2, 7, 7776), (3, 2, 4, 9), (2, 3, 7, 16), (10, 2, 11, 10**9)])
def test_corollary1_sizes(q, k, n, size):
    if q**n > 10**6:
        pytest.skip("only the size formula is checked at this scale")
    code = corollary1(q, k, certify=q**n < 10**5)
    assert (code.n, len(code)) == (n, size)
    assert free_census(code) == 0


@pytest.mark.parametrize("q, n, size", [(4, 5, 64), (3, 4, 9), (5, 6, 625), (5, 4, 25)])
def test_theorem3_sizes(q, n, size):
    code = theorem3_rs_analog(q, n)
    assert len(code) == size == q ** (n - 2)
    assert code.partition.lengths == (n - 2, 2)


def test_theorem3_rejects_long():
    with pytest.raises(ValueError):
        theorem3_rs_analog(4, 6)
    with pytest.raises(ValueError):
        theorem3_rs_analog(4, 2)


def test_theorem2_code_picks_suffix():
    code = theorem2_code(3, 6, 2, 4)
    assert len(code) == 54
    code = theorem2_code(4, 6, 3, 3)  # length-3 greedy suffix code of size 1
    assert len(code) == 64 * (64 // 19)


# -- doubling ------------------------------------------------------------------

def test_dada_from_corollary1(cor_3_2):
    trace = []
    out = dada(cor_3_2, trace=trace)
    assert len(out) == 21 == dada_size(3, 5, 9)
    assert free_census(out) == 12
    assert out.partition.lengths == (1, 2, 2)
    assert_ball_sized(out)
    assert all(r.symmetric for r in trace if r.phase != "endgame-single")


def test_dada_r_branch():
    out = dada(theorem3_rs_analog(4, 5))
    assert len(out) == 214 == m_cf(4, 6)
    assert out.partition.lengths == (1, 3, 2)


def test_dada_from_nonadaptive_hamming(ternary_hamming_code):
    out = dada(ternary_hamming_code)
    assert len(out) == 21
    assert out.partition.lengths == (1, 4)
    assert out.partition.instances == 1


def test_dada_rejects_bad_input():
    with pytest.raises(DadaError):
        dada(theorem3_rs_analog(4, 3))  # n = 4 is not > q
    with pytest.raises(DadaError):
        dada(swap_channel_build(4, 2))
    good = theorem2_compose(3, 6, 2, 4, BlockCode(3, 4, ((0, 0, 0, 0),), 3))
    c = good.clouds[0]
    short = Cloud(c.message, c.root, {k: v for k, v in c.branches.items() if k != (6, 1)})
    bad = FeedbackCode(3, good.channel, good.partition, [short] + list(good.clouds[1:]))
    with pytest.raises(DadaError, match="members"):
        dada(bad)


@pytest.mark.parametrize("q, top", [(3, 8), (4, 7)])
def test_dada_symmetry_and_size_along_chains(q, top):
    code = theorem3_rs_analog(q, q + 1)
    while code.n < top:
        trace: list[DadaRound] = []
        nxt = dada(code, trace=trace, certify=False)
        assert len(nxt) == dada_size(q, code.n + 1, len(code))
        assert trace[0].phase == "start"
        for r in trace:
            if r.phase != "endgame-single":
                assert r.symmetric, r
        code = nxt


def test_dada_exercises_every_endgame():
    seen = set()
    for q, top in [(3, 9), (4, 7), (5, 7)]:
        code = theorem3_rs_analog(q, q + 1, certify=False)
        while code.n < top:
            trace = []
            code = dada(code, trace=trace, certify=False)
            seen |= {r.phase for r in trace}
    assert {"complete", "delete", "endgame-delete", "endgame-single"} <= seen


# -- chains --------------------------------------------------------------------

@pytest.mark.parametrize("q, n, size", [(3, 7, 144), (3, 4, 9), (4, 7, 744), (5, 7, 2690)])
def test_complete_chain(q, n, size):
    code = complete_chain(q, n)
    assert len(code) == size == m_cf(q, n)
    assert_ball_sized(code)


def test_complete_chain_rejects_short():
    with pytest.raises(ValueError):
        complete_chain(3, 3)


@pytest.mark.parametrize("q, k, n, size, blocks", [(3, 2, 5, 21, (1, 4)), (2, 3, 8, 28, (1, 7)), (4, 2, 6, 214, (1, 5))])
def test_prop1(q, k, n, size, blocks):
    code = prop1_ham_plus_one(q, k)
    assert (code.n, len(code)) == (n, size)
    assert size == m_cf(q, n)
    assert code.partition.lengths == blocks


def test_prop1_needs_prime_power():
    with pytest.raises(NotPrimePower):
        prop1_ham_plus_one(6, 2)


@pytest.mark.parametrize("n, size, blocks", [(6, 54, (1, 1, 4)), (7, 144, (1, 2, 4)), (8, 384, (1, 3, 4))])
def test_two_instance_ternary(n, size, blocks):
    code = two_instance(3, n)
    assert len(code) == size == m_cf(3, n)
    assert code.partition.lengths == blocks
    assert code.partition.instances == 2


def test_two_instance_hamming_lengths_defer():
    code = two_instance(4, 5)
    assert code.partition.instances == 0 and len(code) == 64
    code = two_instance(4, 6)
    assert code.partition.instances == 1 and len(code) == 214


def test_two_instance_q4():
    code = two_instance(4, 7)
    assert len(code) == 744 and code.partition.lengths == (1, 1, 5)


def test_two_instance_errors():
    with pytest.raises(ConditionViolated):
        two_instance(2, 5)
    with pytest.raises(NotPrimePower):
        two_instance(6, 8)
    with pytest.raises(ValueError):
        two_instance(3, 3)


def test_two_instance_plan_fallback_for_ternary_nine():
    n1, n2, suffix = two_instance_plan(3, 9)
    assert (n1, n2, len(suffix)) == (3, 5, 14)
    suffix.check()


# -- swap channel ----------------------------------------------------------------

def _swap_invariants(code):
    q, n = code.q, code.n
    singles = [c for c in code.clouds if not c.branches]
    pairs = [c for c in code.clouds if c.branches]
    assert len(singles) == (q - 2) ** n
    assert len(pairs) == (q**n - (q - 2) ** n) // 2
    assert all(not {0, 1} & set(c.root) for c in singles)
    assert all(sum(s in (0, 1) for s in c.root) == 1 for c in pairs)
    covered = [y for c in code.clouds for y in c.members(code.partition)]
    assert len(covered) == len(set(covered)) == q**n
    assert free_census(code) == 0


def test_swap_length_one():
    code = swap_channel_build(4, 1)
    assert len(code) == 3
    assert sorted(c.root for c in code.clouds if not c.branches) == [(2,), (3,)]
    pair = next(c for c in code.clouds if c.branches)
    assert expand(pair, code.partition) == {(0,), (1,)}


@pytest.mark.parametrize("q, n", [(4, 2), (10, 3), (10, 4), (3, 1), (6, 2), (20, 5)])
def test_swap_build(q, n):
    if q**n > 10**6:
        pytest.skip("large")
    code = swap_channel_build(q, n)
    assert len(code) == swap_capacity(q, n)
    _swap_invariants(code)


def test_swap_build_rejects_long():
    with pytest.raises(ValueError):
        swap_channel_build(4, 3)


# -- every construction emits certified, ball-sized codes ----------------------

@pytest.mark.parametrize(
    "build",
    [
        lambda: corollary1(3, 2),
        lambda: corollary1(4, 2),
        lambda: theorem3_rs_analog(5, 5),
        lambda: complete_chain(3, 6),
        lambda: prop1_ham_plus_one(3, 2),
        lambda: two_instance(3, 7),
        lambda: theorem2_code(3, 7, 3, 4),
    ],
)
def test_symmetric_constructions_certified(build):
    code = build()
    certified(code)
    assert_ball_sized(code)
