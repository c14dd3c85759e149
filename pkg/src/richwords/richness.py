"""Richness, defect, oddities, complete returns, and weak richness."""
from __future__ import annotations

from dataclasses import dataclass, field

from .palindex import PalindromeIndex
from .palindex import is_rich as _is_rich
from .words import InfiniteWordSpec, Periodic, EventuallyPeriodic, is_palindrome, occurrences

DEFAULT_MORPHIC_WINDOW = 200


@dataclass(frozen=True)
class CompleteReturn:
    factor: str
    return_word: str
    start: int  # 1-based position of the first letter


@dataclass(frozen=True)
class Oddity:
    representative: str
    incriminated_palindrome: str
    end_position: int

    @property
    def pair(self) -> frozenset[str]:
        return frozenset((self.representative, self.representative[::-1]))

    def to_json(self) -> dict:
        return {
            "representative": self.representative,
            "palindrome": self.incriminated_palindrome,
            "end_position": self.end_position,
        }


@dataclass
class RichnessReport:
    word: str
    word_length: int
    palindrome_count: int
    is_rich: bool
    defect: int
    defective_positions: list[int]
    oddities: list[Oddity] = field(default_factory=list)
    ups_per_prefix: list[str | None] | None = None

    def to_json(self) -> dict:
        out = {
            "word": self.word,
            "length": self.word_length,
            "palindrome_count": self.palindrome_count,
            "is_rich": self.is_rich,
            "defect": self.defect,
            "defective_positions": list(self.defective_positions),
            "oddities": [o.to_json() for o in self.oddities],
        }
        if self.ups_per_prefix is not None:
            out["ups_per_prefix"] = list(self.ups_per_prefix)
        return out

    @classmethod
    def from_json(cls, d: dict) -> RichnessReport:
        return cls(
            word=d["word"],
            word_length=d["length"],
            palindrome_count=d["palindrome_count"],
            is_rich=d["is_rich"],
            defect=d["defect"],
            defective_positions=list(d["defective_positions"]),
            oddities=[Oddity(o["representative"], o["palindrome"], o["end_position"])
                      for o in d["oddities"]],
            ups_per_prefix=d.get("ups_per_prefix"),
        )


def is_rich(w: str) -> bool:
    return _is_rich(w)


def defect(w: str) -> int:
    return PalindromeIndex(w).defect


def richness_report(w: str, with_oddities: bool = True, with_ups: bool = False) -> RichnessReport:
    idx = PalindromeIndex(w)
    positions = idx.defective_positions()
    ups = None
    if with_ups:
        ups = [idx.ups(i) for i in range(1, len(w) + 1)]
    return RichnessReport(
        word=w,
        word_length=len(w),
        palindrome_count=idx.palindrome_count,
        is_rich=not positions,
        defect=len(positions),
        defective_positions=positions,
        oddities=oddities(w, idx) if with_oddities else [],
        ups_per_prefix=ups,
    )


def palindromic_closure(w: str) -> str:
    """Shortest palindrome having w as a prefix."""
    if not w:
        return w
    lps = PalindromeIndex(w).longest_palindromic_suffix(len(w))
    head = w[:len(w) - len(lps)]
    return w + head[::-1]


def iterated_palindromic_closure(directive: str) -> str:
    out = ""
    for x in directive:
        out = palindromic_closure(out + x)
    return out


def complete_returns(w: str, u: str) -> list[CompleteReturn]:
    """Complete returns to u in w, one per pair of consecutive occurrences."""
    occ = occurrences(w, u)
    m = len(u)
    return [CompleteReturn(u, w[i:j + m], i + 1) for i, j in zip(occ, occ[1:])]


def is_rich_via_returns(w: str) -> bool:
    """Richness via 'every complete return to a palindromic factor is a palindrome'."""
    return first_nonpalindromic_return(w) is None


def first_nonpalindromic_return(w: str) -> CompleteReturn | None:
    for p in PalindromeIndex(w).palindromes():
        for r in complete_returns(w, p):
            if not is_palindrome(r.return_word):
                return r
    return None


@dataclass(frozen=True)
class WeakRichness:
    weakly_rich: bool
    witness: CompleteReturn | None = None

    def __bool__(self) -> bool:
        return self.weakly_rich


def weak_richness(w: str) -> WeakRichness:
    """Check that every complete return to every letter is a palindrome.

    The witness on failure is the non-palindromic letter return that ends
    earliest in w.
    """
    best: CompleteReturn | None = None
    for x in sorted(set(w)):
        for r in complete_returns(w, x):
            if is_palindrome(r.return_word):
                continue
            end = r.start + len(r.return_word)
            if best is None or (end, r.start) < (best.start + len(best.return_word), best.start):
                best = r
            break
    return WeakRichness(best is None, best)


def is_weakly_rich(w: str) -> bool:
    return weak_richness(w).weakly_rich


def oddities(w: str, idx: PalindromeIndex | None = None) -> list[Oddity]:
    """All oddities of w, keyed by unordered pair and incriminated palindrome.

    Each oddity carries the first (1-based) position where either member of
    the pair ends in w.  Sorted by end position.
    """
    if idx is None:
        idx = PalindromeIndex(w)
    found: dict[tuple[str, str], int] = {}
    for p in idx.palindromes():
        occ = occurrences(w, p)
        m = len(p)
        for i, j in zip(occ, occ[1:]):
            r = w[i:j + m]
            if r == r[::-1]:
                continue
            key = (min(r, r[::-1]), p)
            end = j + m
            if key not in found or end < found[key]:
                found[key] = end
    out = [Oddity(rep, p, end) for (rep, p), end in found.items()]
    out.sort(key=lambda o: (o.end_position, o.representative))
    return out


def oddity_count(w: str) -> int:
    return len(oddities(w))


def rich_extensions(w: str) -> tuple[set[str], set[str]]:
    """Letters x, z of Alph(w) such that wx (resp. zw) is rich."""
    if not _is_rich(w):
        raise ValueError("input not rich")
    letters = set(w)
    right = {x for x in letters if _is_rich(w + x)}
    left = {z for z in letters if _is_rich(z + w)}
    return right, left


def rich_extension_fastpath(u: str, x: str) -> bool | None:
    """True when ux has a palindromic suffix r with 2|r| >= |u| (so ux is rich), else None."""
    if not _is_rich(u):
        raise ValueError("input not rich")
    ux = u + x
    r = PalindromeIndex(ux).longest_palindromic_suffix(len(ux))
    if 2 * len(r) >= len(u):
        return True
    return None


def analysis_window(spec: InfiniteWordSpec, window: int | None = None) -> str:
    """The finite prefix on which infinite-word predicates are evaluated.

    Periodic words use three periods (after the preperiod, if any); morphic
    fixed points default to a fixed-length prefix.
    """
    if window is not None:
        if window < 1:
            raise ValueError("window must be >= 1")
        return spec.prefix(window)
    if isinstance(spec, Periodic):
        return spec.period * 3
    if isinstance(spec, EventuallyPeriodic):
        return spec.preperiod + spec.period * 3
    return spec.prefix(DEFAULT_MORPHIC_WINDOW)
