import pytest
from hypothesis import given, strategies as st

from richwords import oracle
from richwords.palindex import PalindromeIndex
from richwords.richness import (
    RichnessReport,
    analysis_window,
    complete_returns,
    defect,
    first_nonpalindromic_return,
    is_rich,
    is_rich_via_returns,
    is_weakly_rich,
    iterated_palindromic_closure,
    oddities,
    oddity_count,
    palindromic_closure,
    rich_extension_fastpath,
    rich_extensions,
    richness_report,
    weak_richness,
)
from richwords.words import Periodic, factor_set, is_reversal_closed

from corpus import ALMOST_RICH_PERIODS, RICH_PERIODS


def test_richness_pins():
    assert not is_rich("abbabaabba")
    assert is_rich("baababbabaab")
    assert not is_rich("aababbabaabb")


def test_defect_pins():
    assert defect("cacaabca") == 2
    assert defect("cacaabcaa") == 3
    r = richness_report("")
    assert (r.defect, r.defective_positions) == (0, [])


def test_closures():
    assert palindromic_closure("aab") == "aabaa"
    assert palindromic_closure("aba") == "aba"
    assert palindromic_closure("ab") == "aba"
    assert iterated_palindromic_closure("ab") == "aba"
    assert iterated_palindromic_closure("abc") == "abacaba"
    assert iterated_palindromic_closure("aa") == "aa"


def test_complete_returns():
    assert [r.return_word for r in complete_returns("abaca", "a")] == ["aba", "aca"]
    assert [r.return_word for r in complete_returns("aa", "a")] == ["aa"]
    w = Periodic("aacbccbcacbc").prefix(24)
    assert any(r.return_word != r.return_word[::-1] for r in complete_returns(w, "aa"))
    with pytest.raises(ValueError):
        complete_returns("ab", "")


def test_returns_characterization():
    assert not is_rich_via_returns("abbabaabba")
    r = first_nonpalindromic_return("abbabaabba")
    assert r.return_word != r.return_word[::-1]
    assert is_rich_via_returns("aabaa")
    assert is_rich_via_returns("a")


def test_weak_richness_pins():
    assert is_weakly_rich(Periodic("aacbccbcacbc").prefix(36))
    res = weak_richness(Periodic("aabacabaac").prefix(30))
    assert not res and res.witness.return_word == "cabaac"
    assert is_weakly_rich("ab")


def test_oddity_pins():
    w = Periodic("abcabcacbacb").prefix(36)
    odd = oddities(w)
    assert {o.pair for o in odd} == {frozenset({"abca", "acba"}), frozenset({"bcab", "bacb"}),
                                     frozenset({"cabc", "cbac"})}
    assert [o.end_position for o in odd] == [4, 5, 6]
    rep = richness_report(w)
    assert (rep.defect, rep.defective_positions) == (4, [4, 5, 6, 7])
    abc = Periodic("abc").prefix(30)
    assert oddity_count(abc) == 3
    assert PalindromeIndex(abc).defective_positions() == list(range(4, 31))
    assert oddities("abacaba") == []


def test_extensions():
    right, _ = rich_extensions("aab")
    assert "a" in right
    assert "a" in rich_extensions("a")[0]
    with pytest.raises(ValueError, match="input not rich"):
        rich_extensions("abbabaabba")
    assert rich_extension_fastpath("aa", "a") is True
    assert rich_extension_fastpath("ab", "a") is True
    assert rich_extension_fastpath("aab", "c") is None


def test_report_json_round_trip():
    rep = richness_report("abcabcacbacb" * 3, with_ups=True)
    assert RichnessReport.from_json(rep.to_json()) == rep


def test_analysis_windows():
    assert analysis_window(Periodic("ab")) == "ababab"
    assert analysis_window(Periodic("ab"), 3) == "aba"
    with pytest.raises(ValueError):
        analysis_window(Periodic("ab"), 0)


def test_oracle_agreement_exhaustive():
    for k, n in ((2, 10), (3, 7)):
        for w in oracle.enumerate_up_to(k, n, canonical=True):
            rep = richness_report(w)
            assert rep.defect == oracle.naive_defect(w)
            assert rep.defective_positions == oracle.naive_defective_positions(w)
            assert {(o.pair, o.incriminated_palindrome) for o in rep.oddities} == oracle.naive_oddity_pairs(w)
            assert is_rich_via_returns(w) == oracle.naive_is_rich_via_returns(w)
            wr = weak_richness(w)
            slow = oracle.naive_weak_richness_witness(w)
            assert wr.weakly_rich == (slow is None)


def test_rich_invariants_exhaustive():
    for k, n in ((2, 12), (3, 9)):
        for w in oracle.enumerate_up_to(k, n, canonical=True):
            if not is_rich(w):
                continue
            assert is_rich(w[1:]) and is_rich(w[:-1])
            assert is_rich(w[::-1])
            assert is_rich(palindromic_closure(w))
            if w:
                right, left = rich_extensions(w)
                assert right and left
            for x in set(w):
                if rich_extension_fastpath(w, x):
                    assert is_rich(w + x)


def test_abelian_equivalence_exhaustive():
    for k, n in ((2, 10), (3, 8)):
        seen = {}
        for w in oracle.enumerate_words(k, n):
            if not is_rich(w):
                continue
            key = frozenset(PalindromeIndex(w).palindromes())
            counts = tuple(sorted((x, w.count(x)) for x in set(w)))
            assert seen.setdefault(key, counts) == counts, w


def test_recurrent_rich_properties():
    for u in RICH_PERIODS:
        spec = Periodic(u)
        w = spec.prefix(3 * len(u))
        for n in range(1, len(u) + 1):
            assert is_reversal_closed(factor_set(w, n))
        counts = []
        for k in range(1, 7):
            pre = spec.prefix(k * len(u))
            counts.append(sum(pre[:i] == pre[:i][::-1] for i in range(1, len(pre) + 1)))
        assert all(a < b for a, b in zip(counts, counts[1:])), u
    for u in ALMOST_RICH_PERIODS:
        w = Periodic(u).prefix(3 * len(u))
        for n in range(1, len(u) + 1):
            assert is_reversal_closed(factor_set(w, n)), u


@given(st.text(alphabet="abc", max_size=30))
def test_oddities_bounded_by_defect(w):
    assert oddity_count(w) <= defect(w)


@given(st.text(alphabet="abc", max_size=30))
def test_reversal_keeps_defect(w):
    assert defect(w) == defect(w[::-1])
