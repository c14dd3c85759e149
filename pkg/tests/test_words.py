import pytest
from hypothesis import given, strategies as st

from richwords.words import (
    FIBONACCI,
    EventuallyPeriodic,
    MorphicFixedPoint,
    Morphism,
    Periodic,
    check_word,
    conjugates,
    factor_set,
    is_conjugate,
    is_palindrome,
    is_primitive,
    is_reversal_closed,
    letter_count,
    minimal_period,
    occurrences,
    parse_spec,
    prefix,
    primitive_root,
    reverse,
    rotate,
)

words = st.text(alphabet="abc", max_size=14)


def test_reverse_and_palindromes():
    assert reverse("abc") == "cba"
    assert reverse("") == ""
    assert reverse("aba") == "aba"
    assert is_palindrome("abcba")
    assert not is_palindrome("ab")
    assert is_palindrome("")


def test_conjugates():
    assert conjugates("abc") == ["bca", "cab"]
    assert conjugates("aaa") == ["aaa", "aaa"]
    assert conjugates("ab") == ["ba"]
    with pytest.raises(ValueError, match="empty input"):
        conjugates("")


def test_primitive_root():
    assert not is_primitive("abab")
    assert primitive_root("abab") == ("ab", 2)
    assert primitive_root("aab") == ("aab", 1)
    assert is_primitive("a")
    with pytest.raises(ValueError):
        primitive_root("")


def test_factor_sets():
    assert factor_set("aab", 2) == {"aa", "ab"}
    assert factor_set("aab", 5) == set()
    assert is_reversal_closed({"ab", "ba"})
    assert not is_reversal_closed({"ab"})


def test_letter_count():
    assert letter_count("abaa", "a") == 3
    assert letter_count("abaa", "c") == 0
    assert letter_count("", "a") == 0


def test_spec_prefixes():
    assert prefix(Periodic("abc"), 7) == "abcabca"
    assert prefix(FIBONACCI, 8) == "abaababa"
    assert prefix(EventuallyPeriodic("x", "ab"), 4) == "xaba"
    with pytest.raises(ValueError, match="not prolongable"):
        MorphicFixedPoint(Morphism.parse("a=ba,b=ab"), "a")


def test_spec_parsing_round_trip():
    for text in ["periodic:abc", "evper:x|ab", "morphic:a=ab,b=a;seed=a"]:
        assert str(parse_spec(text)) == text
    for bad in ["periodic:", "evper:ab", "morphic:a=ab,b=a", "foo:ab", "abc"]:
        with pytest.raises(ValueError):
            parse_spec(bad)


def test_word_alphabet():
    assert check_word("aZ09") == "aZ09"
    with pytest.raises(ValueError):
        check_word("a b")


def test_morphism_basics():
    m = Morphism.parse("a=aba,b=bb")
    assert m.iterate("a", 2) == "ababbaba"
    assert str(m) == "a=aba,b=bb"
    assert Morphism.parse(str(m)) == m
    with pytest.raises(ValueError):
        m("abc")
    with pytest.raises(ValueError):
        Morphism.parse("a=")
    fib = Morphism.parse("a=ab,b=a")
    assert fib.compose(fib) == fib.power(2) == Morphism.parse("a=aba,b=ab")
    assert fib.fixed_point_prefix("a", 13) == "abaababaabaab"


def test_fixed_point_budget():
    m = Morphism.parse("a=ab,b=b")
    with pytest.raises(ValueError, match="within"):
        m.fixed_point_prefix("a", 100, max_steps=10)


@given(words, st.integers(0, 20))
def test_rotation_is_conjugate(w, k):
    if w:
        assert is_conjugate(w, rotate(w, k))


@given(words)
def test_primitive_root_power(w):
    if w:
        r, e = primitive_root(w)
        assert r * e == w and is_primitive(r)


@given(words, st.text(alphabet="abc", min_size=1, max_size=3))
def test_occurrences_match_scan(w, u):
    assert occurrences(w, u) == [i for i in range(len(w) - len(u) + 1) if w[i:i + len(u)] == u]


@given(st.text(alphabet="ab", min_size=1, max_size=20))
def test_minimal_period(w):
    p = minimal_period(w)
    assert all(w[i] == w[i + p] for i in range(len(w) - p))
    assert all(any(w[i] != w[i + q] for i in range(len(w) - q)) for q in range(1, p))


@given(words, words)
def test_morphism_is_homomorphic(u, v):
    m = Morphism.parse("a=ab,b=ca,c=b")
    assert m(u + v) == m(u) + m(v)
