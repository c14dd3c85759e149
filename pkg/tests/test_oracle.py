import pytest

from richwords import oracle


def test_naive_sets():
    assert oracle.naive_palindrome_set("aab") == {"", "a", "b", "aa"}
    assert oracle.naive_palindrome_set("") == {""}
    assert oracle.naive_palindrome_set("aba") == {"", "a", "b", "aba"}


def test_naive_definitions():
    assert oracle.naive_defect("cacaabca") == 2
    assert not oracle.naive_balanced("aabcb")
    assert oracle.naive_complete_returns("abaca", "a") == ["aba", "aca"]
    assert oracle.naive_complete_returns("aa", "a") == ["aa"]


def test_guards():
    with pytest.raises(ValueError, match="guard"):
        oracle.naive_palindrome_set("a" * (oracle.PALINDROME_GUARD + 1))
    with pytest.raises(ValueError, match="guard"):
        list(oracle.enumerate_words(3, 20))


def test_enumeration():
    assert list(oracle.enumerate_words(2, 2)) == ["aa", "ab", "ba", "bb"]
    assert list(oracle.enumerate_words(2, 0)) == [""]
    assert list(oracle.enumerate_words(3, 2, canonical=True)) == ["aa", "ab"]


def test_canonical_enumeration_is_a_quotient():
    for n in range(7):
        full = list(oracle.enumerate_words(3, n))
        canon = list(oracle.enumerate_words(3, n, canonical=True))
        assert canon == [w for w in full if oracle.is_canonical(w)]


def test_rich_counts():
    # counted by the literal palindrome-set definition
    two = [sum(oracle.naive_is_rich(w) for w in oracle.enumerate_words(2, n)) for n in range(11)]
    assert two == [1, 2, 4, 8, 16, 32, 64, 128, 252, 488, 932]
    three = [sum(oracle.naive_is_rich(w) for w in oracle.enumerate_words(3, n)) for n in range(8)]
    assert three == [1, 3, 9, 27, 75, 201, 513, 1269]
