"""Exhaustive checks of the richness theorems over small words and periods.

Each hunt walks every word (or every period) up to a length, applies one
per-word check, and stops at the first violation.  Hunts whose statement is
invariant under letter permutation only visit canonical words.
"""
from __future__ import annotations

import itertools
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import morphisms
from .balance import is_periodic_balanced, matches_wr_family
from .oracle import enumerate_words
from .palindex import PalindromeIndex, is_rich
from .periodic import (
    INFINITE,
    conjugates_all_rich,
    is_power_almost_rich,
    is_power_rich,
    is_product_of_two_palindromes,
    periodic_defect,
    periodic_defective_positions,
)
from .richness import is_rich_via_returns, is_weakly_rich, oddity_count
from .words import is_primitive

Check = Callable[[str], "str | None"]


def _window_rich(u: str, copies: int) -> bool:
    return is_rich(u * copies)


def check_p1(w: str) -> str | None:
    a, b = is_rich(w), is_rich_via_returns(w)
    return None if a == b else f"is_rich={a} but returns test={b}"


def check_closure(w: str) -> str | None:
    if w and is_rich(w) and not (is_rich(w[1:]) and is_rich(w[:-1])):
        return "rich word with a non-rich prefix or suffix"
    return None


def check_periodic(u: str) -> str | None:
    """w^ω rich, w² rich, and (two palindromes and all conjugates rich) agree."""
    small, big = _window_rich(u, 4), _window_rich(u, 6)
    if small != big:
        return "window verdict not stabilized"
    two = is_rich(u + u)
    three = is_product_of_two_palindromes(u) and conjugates_all_rich(u)
    if not small == two == three:
        return f"omega={small} square={two} conjugates={three}"
    if is_power_rich(u) != two:
        return "is_power_rich disagrees with the square"
    return None


def check_per_alm(u: str) -> str | None:
    """Defect formula against a long window; no factorization means growing defect."""
    d = periodic_defect(u)
    short = PalindromeIndex(u * 3).defect
    long = PalindromeIndex(u * 6).defect
    if d == INFINITE:
        if is_power_almost_rich(u):
            return "almost rich yet infinite defect"
        if long <= short:
            return f"expected growing defect, got {short} then {long}"
        return None
    if d != long or d != short:
        return f"formula {d}, windows {short}/{long}"
    return None


def check_oddity(w: str) -> str | None:
    o, d = oddity_count(w), PalindromeIndex(w).defect
    return None if o <= d else f"{o} oddities > defect {d}"


def check_oddity_periodic(u: str) -> str | None:
    """O ≤ D for u^ω, read on the 6-period window."""
    return check_oddity(u * 6)


def _replacements(ks: list[int]):
    def rec(i: int, lo: int, acc: list[int]):
        if i == len(ks):
            yield list(acc)
            return
        for h in range(lo, ks[i] + 1):
            acc.append(h)
            yield from rec(i + 1, h + 1, acc)
            acc.pop()
    yield from rec(0, 1, [])


def check_pi(w: str) -> str | None:
    r = is_rich(w)
    for a in sorted(set(w)):
        ks = morphisms.a_exponents(w, a)
        for hs in _replacements(ks):
            v = morphisms.pi_transform(w, a, hs)
            if is_rich(v) != r:
                return f"pi_{a}{hs} gives {v!r} with richness {not r}"
    return None


def check_ext_l5(u: str) -> str | None:
    r = is_power_rich(u)
    for a in sorted(set(u)):
        s = morphisms.psi(a, u)(u)
        if is_power_rich(s) != r:
            return f"psi_{a}: {r} vs {not r}"
    return None


def check_defective(u: str) -> str | None:
    d = periodic_defect(u)
    for a in sorted(set(u)):
        ds = periodic_defect(morphisms.psi(a, u)(u))
        if ds < d:
            return f"psi_{a} image defect {ds} < {d}"
    return None


def check_balance_transfer(u: str) -> str | None:
    tb = is_periodic_balanced(u).balanced
    for a in sorted(set(u)):
        if is_periodic_balanced(morphisms.psi(a, u)(u)).balanced and not tb:
            return f"psi_{a} image balanced but period not"
    return None


def check_doubling(u: str) -> str | None:
    pos = periodic_defective_positions(u)
    if pos is None:
        return None
    doubled = periodic_defective_positions(morphisms.doubling(u)(u))
    expected = sorted(q for p in pos for q in (2 * p - 1, 2 * p))
    if doubled != expected:
        return f"doubled positions {doubled}, expected {expected}"
    return None


def check_wr_converse(u: str) -> str | None:
    """Balanced weakly rich periods on three letters are family words."""
    if len(set(u)) != 3 or not is_primitive(u):
        return None
    if not (is_periodic_balanced(u).balanced and is_weakly_rich(u * 3)):
        return None
    if matches_wr_family(u) is None:
        return "balanced and weakly rich but no family matches"
    return None


@dataclass(frozen=True)
class Theorem:
    check: Check
    periodic: bool  # enumerate non-empty periods rather than all words
    canonical: bool
    summary: str


THEOREMS: dict[str, Theorem] = {
    "theorem-p1": Theorem(check_p1, False, True, "rich iff all complete returns to palindromes are palindromes"),
    "closure": Theorem(check_closure, False, True, "factors of rich words are rich"),
    "periodic": Theorem(check_periodic, True, True, "w^ω rich iff w² rich iff two palindromes with rich conjugates"),
    "per-alm": Theorem(check_per_alm, True, True, "w^ω almost rich iff two palindromes; defect formula"),
    "oddity": Theorem(check_oddity, False, True, "oddities never exceed the defect"),
    "oddity-periodic": Theorem(check_oddity_periodic, True, True, "oddities never exceed the defect of u^ω"),
    "pi": Theorem(check_pi, False, True, "exponent transform keeps richness"),
    "ext-l5": Theorem(check_ext_l5, True, True, "psi_a(t) rich iff t rich"),
    "defective": Theorem(check_defective, True, True, "psi_a never lowers the defect"),
    "balance-transfer": Theorem(check_balance_transfer, True, True, "psi_a(t) balanced implies t balanced"),
    "doubling": Theorem(check_doubling, True, True, "doubling maps defect k at p_i to 2k at 2p_i-1, 2p_i"),
    "wr-converse": Theorem(check_wr_converse, True, True, "balanced weakly rich periods match a family"),
}


@dataclass
class HuntResult:
    theorem: str
    alphabet_size: int
    max_len: int
    checked: int = 0
    per_length: dict[int, int] = field(default_factory=dict)
    violation: tuple[str, str] | None = None

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "alphabet_size": self.alphabet_size,
            "max_len": self.max_len,
            "checked": self.checked,
            "per_length": {str(k): v for k, v in sorted(self.per_length.items())},
            "violation": None if self.violation is None
            else {"word": self.violation[0], "message": self.violation[1]},
        }


def _hunt_length(args: tuple[str, int, int]) -> tuple[int, int, tuple[str, str] | None]:
    theorem_id, k, n = args
    th = THEOREMS[theorem_id]
    checked = 0
    for w in enumerate_words(k, n, canonical=th.canonical):
        checked += 1
        msg = th.check(w)
        if msg is not None:
            return n, checked, (w, msg)
    return n, checked, None


def _map(fn, tasks, jobs: int):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, tasks))
    return [fn(t) for t in tasks]


def hunt(theorem_id: str, alphabet_size: int, max_len: int, jobs: int = 1) -> HuntResult:
    """Check one theorem on every word (or period) up to max_len."""
    if theorem_id not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem_id!r}; choose from {', '.join(THEOREMS)}")
    th = THEOREMS[theorem_id]
    start = 1 if th.periodic else 0
    tasks = [(theorem_id, alphabet_size, n) for n in range(start, max_len + 1)]
    out = HuntResult(theorem_id, alphabet_size, max_len)
    for n, checked, bad in _map(_hunt_length, tasks, jobs):
        out.per_length[n] = checked
        out.checked += checked
        if bad is not None and out.violation is None:
            out.violation = bad
    return out


def _count_rich(args: tuple[int, int]) -> tuple[int, int]:
    k, n = args
    return n, sum(1 for w in enumerate_words(k, n) if is_rich(w))


def count_rich(alphabet_size: int, max_len: int, jobs: int = 1) -> dict[int, int]:
    """Number of rich words of each length 0..max_len."""
    tasks = [(alphabet_size, n) for n in range(max_len + 1)]
    return dict(_map(_count_rich, tasks, jobs))


def _count_wr_periods(args: tuple[int, int]) -> tuple[int, int]:
    k, n = args
    return n, sum(1 for u in enumerate_words(k, n) if is_weakly_rich(u * 3))


def count_weakly_rich_periods(alphabet_size: int, max_len: int, jobs: int = 1) -> dict[int, int]:
    """Number of periods u of each length with u^ω weakly rich."""
    tasks = [(alphabet_size, n) for n in range(1, max_len + 1)]
    return dict(_map(_count_wr_periods, tasks, jobs))


@dataclass(frozen=True)
class WRHit:
    period: str
    family: str | None


def _balanced_wr(args: tuple[int, int]) -> list[WRHit]:
    k, n = args
    hits = []
    for u in enumerate_words(k, n, canonical=True):
        if len(set(u)) != k or not is_primitive(u):
            continue
        if is_periodic_balanced(u).balanced and is_weakly_rich(u * 3):
            m = matches_wr_family(u)
            hits.append(WRHit(u, None if m is None else str(m.spec)))
    return hits


def balanced_wr_periods(alphabet_size: int, max_len: int, jobs: int = 1) -> list[WRHit]:
    """Canonical primitive periods on exactly alphabet_size letters that are
    balanced and weakly rich, each with the family it matches (if any)."""
    tasks = [(alphabet_size, n) for n in range(1, max_len + 1)]
    return list(itertools.chain.from_iterable(_map(_balanced_wr, tasks, jobs)))
