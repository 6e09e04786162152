from itertools import combinations, product

import pytest

from feedback_codes.field import (
    BlockCode,
    NotPrimePower,
    TargetUnreachable,
    gv_guarantee,
    greedy_gv_code,
    hamming_code,
    is_irreducible,
    make_field,
    min_degree_greedy_code,
    parity_check_matrix,
    prime_power,
)
from feedback_codes.words import all_words, hamming_distance, rank

FIELD_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def min_pairwise_distance(words):
    return min(hamming_distance(a, b) for a, b in combinations(words, 2))


def test_prime_power_detection():
    assert prime_power(9) == (3, 2)
    assert prime_power(16) == (2, 4)
    assert prime_power(6) is None
    assert prime_power(1) is None


def test_make_field_examples():
    f3 = make_field(3)
    assert (f3.p, f3.m, f3.q) == (3, 1, 3)
    f4 = make_field(4)
    assert f4.modulus == (1, 1, 1)
    # x^2 + x + 1 has no root in GF(2)
    assert all((x * x + x + 1) % 2 for x in range(2))
    with pytest.raises(NotPrimePower):
        make_field(6)
    with pytest.raises(ValueError):
        make_field(25)


def test_irreducibility_test_catches_reducible():
    assert not is_irreducible([1, 0, 1], 2)  # x^2 + 1 = (x + 1)^2 over GF(2)
    assert not is_irreducible([0, 0, 1, 0, 1], 2)  # x^4 + x^2 = x^2 (x^2 + 1)
    assert not is_irreducible([1, 0, 1, 0, 1], 2)  # x^4 + x^2 + 1 = (x^2 + x + 1)^2
    assert is_irreducible([1, 1, 0, 0, 1], 2)


@pytest.mark.parametrize("q", FIELD_ORDERS)
def test_field_axioms(q):
    f = make_field(q)
    add, mul = f.add, f.mul
    els = range(q)
    for a in els:
        assert add[a, 0] == a and mul[a, 1] == a and mul[a, 0] == 0
        assert add[a, f.neg[a]] == 0
        if a:
            assert mul[a, f.inv[a]] == 1
        for b in els:
            assert add[a, b] == add[b, a] and mul[a, b] == mul[b, a]
    triples = product(els, repeat=3) if q <= 9 else product(els, els, [2, q - 1])
    for a, b, c in triples:
        assert add[add[a, b], c] == add[a, add[b, c]]
        assert mul[mul[a, b], c] == mul[a, mul[b, c]]
        assert mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]


def test_parity_check_columns_normalised_and_ordered():
    H = parity_check_matrix(make_field(3), 2)
    cols = [tuple(H[:, j]) for j in range(H.shape[1])]
    assert cols == [(0, 1), (1, 0), (1, 1), (1, 2)]


def _check_perfect(code: BlockCode):
    q, n = code.q, code.n
    assert min_pairwise_distance(code.codewords) >= 3
    covered = {}
    for c in code.codewords:
        for w in all_words(q, n):
            if hamming_distance(w, c) <= 1:
                assert w not in covered
                covered[w] = c
    assert len(covered) == q**n


@pytest.mark.parametrize("q, k, n, size", [(3, 2, 4, 9), (2, 3, 7, 16), (4, 2, 5, 64), (2, 2, 3, 2), (3, 3, 13, 3**10)])
def test_hamming_code_parameters(q, k, n, size):
    code = hamming_code(make_field(q), k)
    assert (code.n, len(code)) == (n, size)
    assert len(set(code.codewords)) == size
    if q**n <= 5000:
        _check_perfect(code)
        assert size * (1 + n * (q - 1)) == q**n


def test_hamming_codewords_are_in_null_space():
    f = make_field(4)
    code = hamming_code(f, 2)
    H = parity_check_matrix(f, 2)
    for w in code.codewords:
        for row in H:
            acc = 0
            for h, x in zip(row, w):
                acc = f.add[acc, f.mul[h, x]]
            assert acc == 0


def test_hamming_guard():
    with pytest.raises(ValueError):
        hamming_code(make_field(4), 3)  # 4^21 words
    with pytest.raises(ValueError):
        hamming_code(make_field(3), 1)


def test_greedy_gv_examples():
    full = greedy_gv_code(6, 5)
    assert gv_guarantee(6, 5) == 29
    assert len(full) >= 29
    code = greedy_gv_code(6, 5, target_size=16)
    assert len(code) == 16
    assert code.codewords == full.codewords[:16]
    assert min_pairwise_distance(code.codewords) >= 3

    ternary = greedy_gv_code(3, 4, target_size=6)
    assert len(ternary) == 6 and 81 // 13 == 6
    assert min_pairwise_distance(ternary.codewords) >= 3

    with pytest.raises(TargetUnreachable):
        greedy_gv_code(2, 2, target_size=2)


@pytest.mark.parametrize("q, n", [(2, 5), (3, 5), (4, 4), (5, 3)])
def test_greedy_codes_keep_distance(q, n):
    for code in (greedy_gv_code(q, n), min_degree_greedy_code(q, n)):
        code.check()
        assert len(code) >= gv_guarantee(q, n)


def test_greedy_is_lexicographic_scan():
    code = greedy_gv_code(3, 4)
    kept = []
    for w in all_words(3, 4):
        if all(hamming_distance(w, c) >= 3 for c in kept):
            kept.append(w)
    assert list(code.codewords) == kept


def test_min_degree_beats_lexicode_for_ternary_length_five():
    assert len(greedy_gv_code(3, 5)) == 9
    code = min_degree_greedy_code(3, 5)
    assert len(code) >= 14
    code.check()


def test_subcode_takes_lowest_ranks():
    code = hamming_code(make_field(3), 2)
    sub = code.subcode(6)
    assert len(sub) == 6
    assert [rank(w, 3) for w in sub.codewords] == sorted(rank(w, 3) for w in code.codewords)[:6]
    with pytest.raises(ValueError):
        code.subcode(10)
