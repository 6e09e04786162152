import pytest
from hypothesis import given, strategies as st

from feedback_codes.words import (
    GuardExceeded,
    all_words,
    ball,
    check_guard,
    concat,
    hamming_distance,
    rank,
    split,
    unrank,
    word,
)


@pytest.mark.parametrize("a, b, d", [("012", "012", 0), ("012", "013", 1), ("000", "111", 3)])
def test_hamming_distance_examples(a, b, d):
    assert hamming_distance(word(a), word(b)) == d


def test_hamming_distance_length_mismatch():
    with pytest.raises(ValueError):
        hamming_distance((0, 1), (0, 1, 2))


def test_rank_examples():
    assert rank(word("00"), 3) == 0
    assert rank(word("12"), 3) == 5
    assert unrank(5, 3, 2) == word("12")


def test_unrank_out_of_range():
    with pytest.raises(ValueError):
        unrank(9, 3, 2)
    with pytest.raises(ValueError):
        unrank(-1, 3, 2)


def test_split_concat_examples():
    w = word("0123")
    assert split(w, 1) == ((0,), (1, 2, 3))
    assert split(w, 0) == ((), w)
    assert concat(word("01"), word("23")) == w
    with pytest.raises(ValueError):
        split(w, 5)


def test_word_rejects_out_of_alphabet():
    with pytest.raises(ValueError):
        word("013", q=3)


@pytest.mark.parametrize("q", range(2, 11))
@pytest.mark.parametrize("n", range(0, 8))
def test_rank_unrank_bijection(q, n):
    if q**n > 200_000:
        pytest.skip("too large for a full sweep")
    seen = [unrank(i, q, n) for i in range(q**n)]
    assert len(set(seen)) == q**n
    assert all(rank(w, q) == i for i, w in enumerate(seen))
    assert seen == sorted(seen)


@given(st.integers(2, 10), st.integers(1, 7), st.data())
def test_rank_roundtrip_random(q, n, data):
    w = tuple(data.draw(st.lists(st.integers(0, q - 1), min_size=n, max_size=n)))
    assert unrank(rank(w, q), q, n) == w


@given(st.integers(2, 6), st.integers(1, 6), st.data())
def test_hamming_is_a_metric(q, n, data):
    words = st.lists(st.integers(0, q - 1), min_size=n, max_size=n).map(tuple)
    a, b, c = data.draw(words), data.draw(words), data.draw(words)
    assert hamming_distance(a, b) == hamming_distance(b, a)
    assert (hamming_distance(a, b) == 0) == (a == b)
    assert hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c)


@pytest.mark.parametrize("q, n, radius", [(3, 4, 1), (2, 5, 2), (4, 3, 2)])
def test_ball_matches_distance_filter(q, n, radius):
    centre = unrank(q**n // 3, q, n)
    brute = {w for w in all_words(q, n) if hamming_distance(w, centre) <= radius}
    got = ball(centre, q, radius)
    assert len(got) == len(brute) and set(got) == brute


def test_guard():
    check_guard(10, 10)
    with pytest.raises(GuardExceeded):
        check_guard(11, 10)
    with pytest.raises(GuardExceeded):
        list(all_words(3, 5, guard=100))
