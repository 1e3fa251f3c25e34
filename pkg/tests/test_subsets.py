import pytest

from panconnect.subsets import (
    SubsetWord,
    complement,
    enumerate_k_subsets,
    from_elements,
    from_text,
    intersect_size,
    rank,
    symm_diff_size,
    to_text,
    unrank,
)

from oracles import colex_k_subsets


def test_word_validation():
    with pytest.raises(ValueError):
        SubsetWord(0, 0)
    with pytest.raises(ValueError):
        SubsetWord(0, 65)
    with pytest.raises(ValueError):
        SubsetWord(1 << 4, 4)  # bit outside [4]
    w = SubsetWord(0b1011, 4)
    assert w.size == 3
    assert w.elements() == (1, 2, 4)
    assert 2 in w and 3 not in w


def test_symm_diff_examples():
    a = from_elements([1, 2], 4)
    b = from_elements([1, 3], 4)
    assert symm_diff_size(a, b) == 2
    assert symm_diff_size(a, a) == 0
    assert symm_diff_size(from_elements([1], 3), from_elements([2, 3], 3)) == 3


def test_intersect_examples():
    assert intersect_size(from_elements([1, 2], 4), from_elements([1, 3], 4)) == 1
    assert intersect_size(from_elements([1, 2], 4), from_elements([3, 4], 4)) == 0


def test_mismatched_grounds_rejected():
    with pytest.raises(ValueError):
        symm_diff_size(from_elements([1], 3), from_elements([1], 4))
    with pytest.raises(ValueError):
        intersect_size(from_elements([1], 3), from_elements([1], 4))


def test_diff_intersect_identity_exhaustive():
    # |a ^ b| = 2 * (k - |a & b|) for same-size subsets
    for k in (1, 2, 3):
        words = enumerate_k_subsets(6, k)
        for a in words:
            for b in words:
                assert symm_diff_size(a, b) == 2 * (k - intersect_size(a, b))


def test_complement():
    assert complement(from_elements([1, 2], 5)).elements() == (3, 4, 5)
    assert complement(SubsetWord(0, 3)).elements() == (1, 2, 3)
    assert complement(from_elements([1, 3], 4)).elements() == (2, 4)
    for k in range(0, 5):
        for a in enumerate_k_subsets(5, k):
            assert complement(complement(a)) == a
            assert complement(a).size == 5 - k


def test_colex_enumeration_matches_oracle():
    for n in range(1, 8):
        for k in range(0, n + 1):
            got = [w.elements() for w in enumerate_k_subsets(n, k)]
            assert got == [tuple(t) for t in colex_k_subsets(n, k)]


def test_colex_is_numeric_bitmask_order():
    for n, k in [(6, 2), (7, 3), (5, 4)]:
        words = enumerate_k_subsets(n, k)
        bits = [w.bits for w in words]
        assert bits == sorted(bits)


def test_rank_examples():
    assert rank(from_elements([1, 2], 4)) == 0
    assert rank(from_elements([3, 4], 4)) == 5  # last of the six 2-subsets of [4]


def test_rank_unrank_round_trip():
    for n, k in [(6, 2), (6, 3), (7, 1), (5, 5), (4, 0)]:
        for i, w in enumerate(enumerate_k_subsets(n, k)):
            assert rank(w) == i
            assert unrank(i, n, k) == w


def test_unrank_out_of_range():
    with pytest.raises(ValueError):
        unrank(6, 4, 2)
    with pytest.raises(ValueError):
        unrank(-1, 4, 2)
    with pytest.raises(ValueError):
        enumerate_k_subsets(4, 5)


def test_enumeration_counts():
    assert [w.elements() for w in enumerate_k_subsets(3, 1)] == [(1,), (2,), (3,)]
    assert len(enumerate_k_subsets(4, 2)) == 6
    assert len(enumerate_k_subsets(5, 2)) == 10


def test_text_round_trip():
    for n, k in [(5, 0), (5, 2), (6, 3)]:
        for w in enumerate_k_subsets(n, k):
            assert from_text(to_text(w), n) == w
    assert to_text(SubsetWord(0, 4)) == "-"
    assert to_text(from_elements([1, 3, 4], 5)) == "1,3,4"
    with pytest.raises(ValueError):
        from_text("3,1", 5)
    with pytest.raises(ValueError):
        from_text("1,x", 5)
