"""Balance, letter gaps and frequencies, Fraenkel words, and the balanced
weakly rich periodic families (with a recognizer up to permutation and shift).
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .words import alphabet, minimal_period, primitive_root


@dataclass(frozen=True)
class BalanceWitness:
    u: str
    v: str
    letter: str


@dataclass(frozen=True)
class BalanceResult:
    balanced: bool
    witness: BalanceWitness | None = None

    def __bool__(self) -> bool:
        return self.balanced


def _balance_over(w: str, lengths: range, start_count) -> BalanceResult:
    for x in alphabet(w):
        pref = [0]
        for c in w:
            pref.append(pref[-1] + (c == x))
        for n in lengths:
            counts = [pref[i + n] - pref[i] for i in range(start_count(n))]
            lo, hi = min(counts), max(counts)
            if hi - lo > 1:
                i, j = counts.index(hi), counts.index(lo)
                return BalanceResult(False, BalanceWitness(w[i:i + n], w[j:j + n], x))
    return BalanceResult(True)


def is_balanced(w: str) -> BalanceResult:
    """Balance of a finite word; the witness is a pair of equal-length factors and a letter."""
    return _balance_over(w, range(1, len(w) + 1), lambda n: len(w) - n + 1)


def is_periodic_balanced(u: str) -> BalanceResult:
    """Balance of u^ω, checking factor lengths 1..|u| at every start inside one period."""
    if not u:
        raise ValueError("empty input")
    m = len(u)
    return _balance_over(u * 3, range(1, m + 1), lambda n: m)


@dataclass(frozen=True)
class GapProfile:
    letter: str
    gaps: frozenset[int]


def gap_profile(w: str, a: str) -> GapProfile:
    """Distances between consecutive occurrences of a (adjacent occurrences have gap 1)."""
    pos = [i for i, c in enumerate(w) if c == a]
    return GapProfile(a, frozenset(j - i for i, j in zip(pos, pos[1:])))


def periodic_gap_profile(u: str, a: str) -> GapProfile:
    """Gaps of a in u^ω (read off a three-period window)."""
    return gap_profile(u * 3, a)


def frequencies(u: str) -> dict[str, Fraction]:
    """Exact letter frequencies of u^ω."""
    root, _ = primitive_root(u)
    return {x: Fraction(root.count(x), len(root)) for x in alphabet(root)}


def has_distinct_frequencies(u: str) -> bool:
    f = frequencies(u)
    return len(set(f.values())) == len(f)


def delete_letter(w: str, a: str) -> str:
    return w.replace(a, "")


def fraenkel_word(k: int) -> str:
    """F_1 = 1, F_i = F_{i-1} i F_{i-1}."""
    if not 1 <= k <= 9:
        raise ValueError("Fraenkel index must be in 1..9 (digit letters)")
    f = "1"
    for i in range(2, k + 1):
        f = f + str(i) + f
    return f


def sigma_map(a: str, w: str) -> str:
    """a x_1 a^e_1 x_2 ... a^e_{n-1} x_n with e_i = 2 iff x_i = x_{i+1}.

    The trailing block that would follow x_n is left out, so the result is a
    prefix of the image of any infinite word starting with w.
    """
    if not w:
        raise ValueError("empty input")
    if a in w:
        raise ValueError(f"letter {a!r} already occurs in the input")
    parts = [a, w[0]]
    for prev, cur in zip(w, w[1:]):
        parts.append(a * (2 if prev == cur else 1))
        parts.append(cur)
    return "".join(parts)


def psi_digit(i: int, w: str) -> str:
    """ψ_i on digit words: i -> i, x -> i x."""
    a = str(i)
    return "".join(c if c == a else a + c for c in w)


@dataclass(frozen=True)
class WRFamilySpec:
    """family 1: ψ_1^n ∘ ψ_2 ∘ ... ∘ ψ_{k-1}(k^ω);
    family 2: σ_1 ∘ ... ∘ σ_j ∘ ψ_{j+1}^2 ∘ ψ_{j+2} ∘ ... ∘ ψ_{k-1}(k^ω)."""

    family: int
    k: int
    n: int = 0
    j: int = 0

    def __post_init__(self):
        if self.family not in (1, 2):
            raise ValueError("family must be 1 or 2")
        if not 3 <= self.k <= 9:
            raise ValueError("k must be in 3..9")
        if self.family == 1 and self.n < 1:
            raise ValueError("family 1 needs n >= 1")
        if self.family == 2 and not 1 <= self.j <= self.k - 2:
            raise ValueError("family 2 needs 1 <= j <= k-2")

    def __str__(self) -> str:
        if self.family == 1:
            return f"family1(k={self.k},n={self.n})"
        return f"family2(k={self.k},j={self.j})"


def _expand_family(spec: WRFamilySpec, copies: int) -> str:
    k = spec.k
    w = str(k) * copies
    if spec.family == 1:
        for i in range(k - 1, 1, -1):
            w = psi_digit(i, w)
        for _ in range(spec.n):
            w = psi_digit(1, w)
        return w
    for i in range(k - 1, spec.j + 1, -1):
        w = psi_digit(i, w)
    w = psi_digit(spec.j + 1, psi_digit(spec.j + 1, w))
    for i in range(spec.j, 0, -1):
        w = sigma_map(str(i), w)
    return w


@functools.lru_cache(maxsize=None)
def wr_family_word(spec: WRFamilySpec) -> str:
    """Minimal period of the family word.

    The word is expanded from three and from four copies of the seed period;
    both windows must agree on the period.
    """
    periods = []
    for copies in (3, 4):
        w = _expand_family(spec, copies)
        p = minimal_period(w)
        periods.append(w[:p])
    if periods[0] != periods[1]:
        raise RuntimeError(f"period of {spec} not stable across windows: {periods}")
    return periods[0]


def family_specs(k: int, max_period: int) -> list[WRFamilySpec]:
    """Family specs on k letters whose minimal period is at most max_period."""
    out = []
    n = 1
    while True:
        s = WRFamilySpec(1, k, n=n)
        if len(wr_family_word(s)) > max_period:
            break
        out.append(s)
        n += 1
    for j in range(1, k - 1):
        s = WRFamilySpec(2, k, j=j)
        if len(wr_family_word(s)) <= max_period:
            out.append(s)
    return out


def eq21_check(j: int, tail: str, n: int) -> bool:
    """Compare σ_1∘...∘σ_j∘ψ_{j+1}^2(x) with F_{j+1}^2 x_1 F_{j+1}^2 x_2 ... on n letters.

    ``tail`` is a finite word (over letters > j+1) repeated to form x.
    """
    if j < 1 or j + 1 > 8:
        raise ValueError("j must be in 1..7")
    if not tail or any(not c.isdigit() or int(c) <= j + 1 for c in tail):
        raise ValueError(f"tail must be a non-empty digit word over letters > {j + 1}")
    reps = n + 2
    x = (tail * reps)[:reps]
    left = psi_digit(j + 1, psi_digit(j + 1, x))
    for i in range(j, 0, -1):
        left = sigma_map(str(i), left)
    f2 = fraenkel_word(j + 1) * 2
    right = "".join(f2 + c for c in x)
    if len(left) < n or len(right) < n:
        raise RuntimeError("expansion too short")
    return left[:n] == right[:n]


@dataclass(frozen=True)
class WRMatch:
    spec: WRFamilySpec
    permutation: dict[str, str]  # family letter -> letter of the input
    shift: int  # input root == rotate(permuted family period, shift)


@functools.lru_cache(maxsize=None)
def _family_periods(k: int, length: int) -> tuple[tuple[WRFamilySpec, str], ...]:
    return tuple((s, wr_family_word(s)) for s in family_specs(k, length)
                 if len(wr_family_word(s)) == length)


def matches_wr_family(u: str) -> WRMatch | None:
    """Recognize u^ω as a family word up to letter permutation and shift."""
    if not u:
        raise ValueError("empty input")
    root, _ = primitive_root(u)
    letters = alphabet(root)
    k = len(letters)
    if k < 3:
        return None
    for spec, f in _family_periods(k, len(root)):
        digits = "".join(str(i) for i in range(1, k + 1))
        for perm in itertools.permutations(letters):
            g = f.translate(str.maketrans(digits, "".join(perm)))
            s = (g + g).find(root)
            if s != -1:
                return WRMatch(spec, dict(zip(digits, perm)), s)
    return None
