"""Richness and almost richness of periodic infinite words w^ω."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConsistencyError
from .palindex import PalindromeIndex, is_rich
from .words import is_palindrome, primitive_root, rotate

INFINITE = math.inf


@dataclass(frozen=True)
class TwoPalindromeFactorization:
    p: str
    q: str

    @property
    def word(self) -> str:
        return self.p + self.q


def two_palindrome_factorizations(w: str) -> list[TwoPalindromeFactorization]:
    """Every split w = p·q with p and q palindromes, by increasing |p|."""
    return [TwoPalindromeFactorization(w[:i], w[i:])
            for i in range(len(w) + 1)
            if is_palindrome(w[:i]) and is_palindrome(w[i:])]


def is_product_of_two_palindromes(w: str) -> bool:
    return any(is_palindrome(w[:i]) and is_palindrome(w[i:]) for i in range(len(w) + 1))


def _nonempty(w: str) -> None:
    if not w:
        raise ValueError("empty input")


def is_power_rich(w: str) -> bool:
    """Whether w^ω is rich, decided by the richness of w·w."""
    _nonempty(w)
    return is_rich(w + w)


def conjugates_all_rich(w: str) -> bool:
    _nonempty(w)
    return all(is_rich(rotate(w, k)) for k in range(len(w)))


def is_power_almost_rich(w: str) -> bool:
    """Whether w^ω has finite defect: its primitive root is a product of two palindromes."""
    _nonempty(w)
    root, _ = primitive_root(w)
    return is_product_of_two_palindromes(root)


def defect_bound_length(f: TwoPalindromeFactorization) -> int:
    """Prefix length of (pq)^ω whose defect is the defect of the whole word."""
    return len(f.p) + len(f.q) + abs(len(f.p) - len(f.q)) // 3


def periodic_defect(w: str) -> int | float:
    """Defect of w^ω, or ``INFINITE`` when w^ω is not almost rich."""
    _nonempty(w)
    root, _ = primitive_root(w)
    facts = two_palindrome_factorizations(root)
    if not facts:
        return INFINITE
    values = set()
    for f in facts:
        n = defect_bound_length(f)
        reps = -(-n // len(root))
        values.add(PalindromeIndex((root * reps)[:n]).defect)
    if len(values) != 1:
        raise ConsistencyError(f"factorizations of {root!r} give different defects {sorted(values)}")
    return values.pop()


def periodic_defective_positions(w: str) -> list[int] | None:
    """Defective positions of w^ω (None when infinitely many)."""
    _nonempty(w)
    root, _ = primitive_root(w)
    facts = two_palindrome_factorizations(root)
    if not facts:
        return None
    n = max(defect_bound_length(f) for f in facts)
    reps = -(-n // len(root))
    return PalindromeIndex((root * reps)[:n]).defective_positions()


def balanced_conjugate_factorization(w: str) -> TwoPalindromeFactorization:
    """A conjugate p'q' of w (p', q' palindromes) with ||p'| - |q'|| <= 2."""
    if not is_product_of_two_palindromes(w):
        raise ValueError(f"{w!r} is not a product of two palindromes")
    for k in range(max(len(w), 1)):
        c = rotate(w, k)
        for f in two_palindrome_factorizations(c):
            if abs(len(f.p) - len(f.q)) <= 2:
                return f
    raise ConsistencyError(f"no balanced conjugate factorization found for {w!r}")


@dataclass(frozen=True)
class PeriodicVerdict:
    word: str
    primitive_root: str
    power_rich: bool
    power_almost_rich: bool
    defect: int | float

    def to_json(self) -> dict:
        return {
            "word": self.word,
            "primitive_root": self.primitive_root,
            "power_rich": self.power_rich,
            "power_almost_rich": self.power_almost_rich,
            "defect": "infinite" if self.defect == INFINITE else self.defect,
        }


def periodic_verdict(w: str) -> PeriodicVerdict:
    root, _ = primitive_root(w)
    rich = is_power_rich(w)
    d = periodic_defect(w)
    if rich != (d == 0):
        raise ConsistencyError(f"power richness of {w!r} disagrees with its defect {d}")
    return PeriodicVerdict(w, root, rich, d != INFINITE, d)
