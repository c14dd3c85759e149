"""Brute-force reference definitions.

Nothing in here shares code with the fast paths beyond ``str`` slicing; these
functions apply the definitions literally and are only meant for
cross-checking (tests and ``analyze --oracle``).
"""
from __future__ import annotations

import itertools
import string
from collections.abc import Iterator

PALINDROME_GUARD = 2000
RETURNS_GUARD = 2000
BALANCE_GUARD = 400
ENUMERATION_GUARD = 10**7

LETTERS = string.ascii_lowercase


def _guard(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise ValueError(f"{what}: input length {n} exceeds oracle guard {limit}")


def naive_palindrome_set(w: str) -> set[str]:
    _guard(len(w), PALINDROME_GUARD, "naive_palindrome_set")
    out = {""}
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n + 1):
            u = w[i:j]
            if u == u[::-1]:
                out.add(u)
    return out


def naive_defect(w: str) -> int:
    return len(w) + 1 - len(naive_palindrome_set(w))


def naive_is_rich(w: str) -> bool:
    return naive_defect(w) == 0


def naive_defective_positions(w: str) -> list[int]:
    """Positions i where |PAL(w[:i])| does not grow."""
    _guard(len(w), 300, "naive_defective_positions")
    out = []
    prev = 1
    for i in range(1, len(w) + 1):
        cur = len(naive_palindrome_set(w[:i]))
        if cur == prev:
            out.append(i)
        prev = cur
    return out


def naive_complete_returns(w: str, u: str) -> list[str]:
    """Factors of w that contain u exactly twice, once as prefix and once as suffix."""
    if not u:
        raise ValueError("empty factor")
    _guard(len(w), RETURNS_GUARD, "naive_complete_returns")
    out = []
    m = len(u)
    for i in range(len(w)):
        if w[i:i + m] != u:
            continue
        for j in range(i + 1, len(w) - m + 1):
            r = w[i:j + m]
            if r.endswith(u) and sum(r[k:k + m] == u for k in range(len(r) - m + 1)) == 2:
                out.append(r)
                break
    return out


def naive_is_rich_via_returns(w: str) -> bool:
    pals = naive_palindrome_set(w) - {""}
    return all(r == r[::-1] for p in pals for r in naive_complete_returns(w, p))


def naive_balanced(w: str) -> bool:
    _guard(len(w), BALANCE_GUARD, "naive_balanced")
    letters = set(w)
    for n in range(1, len(w) + 1):
        facs = {w[i:i + n] for i in range(len(w) - n + 1)}
        for u in facs:
            for v in facs:
                for x in letters:
                    if abs(u.count(x) - v.count(x)) > 1:
                        return False
    return True


def naive_oddity_pairs(w: str) -> set[tuple[frozenset[str], str]]:
    """Oddities as (unordered pair, incriminated palindrome)."""
    out = set()
    for p in naive_palindrome_set(w) - {""}:
        for r in naive_complete_returns(w, p):
            if r != r[::-1]:
                out.add((frozenset((r, r[::-1])), p))
    return out


def naive_weak_richness_witness(w: str) -> str | None:
    for x in sorted(set(w)):
        for r in naive_complete_returns(w, x):
            if r != r[::-1]:
                return r
    return None


def naive_complexity(w: str, n: int) -> tuple[int, int]:
    facs = {w[i:i + n] for i in range(len(w) - n + 1)}
    return sum(u == u[::-1] for u in facs), len(facs)


def is_canonical(w: str, letters: str = LETTERS) -> bool:
    """First occurrences of letters appear in alphabetical order (a, then b, ...)."""
    nxt = 0
    for c in w:
        k = letters.index(c)
        if k > nxt:
            return False
        if k == nxt:
            nxt += 1
    return True


def enumerate_words(alphabet_size: int, length: int, canonical: bool = False,
                    letters: str = LETTERS) -> Iterator[str]:
    """All words of the given length over the first ``alphabet_size`` letters, lexicographically.

    With ``canonical`` only one representative per letter permutation is kept.
    """
    if alphabet_size < 1 or alphabet_size > len(letters):
        raise ValueError(f"alphabet size must be in 1..{len(letters)}")
    if length < 0:
        raise ValueError("negative length")
    if alphabet_size ** length > ENUMERATION_GUARD:
        raise ValueError(f"{alphabet_size}^{length} words exceeds guard {ENUMERATION_GUARD}")
    alpha = letters[:alphabet_size]
    if not canonical:
        for t in itertools.product(alpha, repeat=length):
            yield "".join(t)
        return
    yield from _canonical_words(alpha, length, "", 0)


def _canonical_words(alpha: str, length: int, acc: str, used: int) -> Iterator[str]:
    if len(acc) == length:
        yield acc
        return
    for k in range(min(used + 1, len(alpha))):
        yield from _canonical_words(alpha, length, acc + alpha[k], max(used, k + 1))


def enumerate_up_to(alphabet_size: int, max_len: int, canonical: bool = False) -> Iterator[str]:
    for n in range(max_len + 1):
        yield from enumerate_words(alphabet_size, n, canonical)
