"""Palindrome-related morphisms: named maps, the π_a exponent transform,
class P certificates, special P-morphisms, and empirical preservation sweeps.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Literal

from .oracle import enumerate_words
from .palindex import is_rich
from .words import (
    EventuallyPeriodic,
    InfiniteWordSpec,
    MorphicFixedPoint,
    Morphism,
    Periodic,
    is_palindrome,
    is_primitive,
    primitive_root,
)
from .richness import analysis_window

__all__ = [
    "Morphism", "apply", "compose", "iterate",
    "psi", "psi_bar", "insertion", "doubling", "theta",
    "pi_transform", "a_exponents", "separating_letter", "psi_preimage",
    "Appended", "Trimmed", "StandardPMorphism", "class_p_certificates", "is_class_P",
    "SpecialCheck", "special_check", "is_special",
    "small_factors", "palindromic_prefix_length", "special_rich_test",
    "SpecialFixedPoint", "special_fixed_point_class", "RICH", "INFINITE_DEFECT",
    "free_relation", "check_mpr_hypotheses",
    "Preservation", "preserves_richness_empirical",
    "PalindromePreservation", "palindrome_preservation_class",
]

RICH = "Rich"
INFINITE_DEFECT = "InfiniteDefect"


def apply(m: Morphism, w: str) -> str:
    return m(w)


def compose(m1: Morphism, m2: Morphism) -> Morphism:
    """m1 ∘ m2."""
    return m1.compose(m2)


def iterate(m: Morphism, a: str, steps: int) -> str:
    return m.iterate(a, steps)


def _letters(alphabet: str) -> str:
    if not alphabet:
        raise ValueError("empty alphabet")
    return "".join(sorted(set(alphabet)))


def psi(a: str, alphabet: str) -> Morphism:
    """a -> a, x -> ax."""
    return Morphism({x: x if x == a else a + x for x in _letters(alphabet + a)})


def psi_bar(a: str, alphabet: str) -> Morphism:
    """a -> a, x -> xa."""
    return Morphism({x: x if x == a else x + a for x in _letters(alphabet + a)})


def insertion(a: str, alphabet: str) -> Morphism:
    """x -> xa for every letter, a included."""
    return Morphism({x: x + a for x in _letters(alphabet + a)})


def doubling(alphabet: str) -> Morphism:
    return Morphism({x: x + x for x in _letters(alphabet)})


def theta(a: str, n: int, alphabet: str) -> Morphism:
    """a -> a^n, every other letter fixed."""
    if n < 1:
        raise ValueError("theta needs n >= 1")
    return Morphism({x: a * n if x == a else x for x in _letters(alphabet + a)})


# -- exponent transform -----------------------------------------------------

def _runs(w: str, a: str) -> list[tuple[int, int]]:
    """Maximal runs of a as (start, length)."""
    out = []
    i = 0
    while i < len(w):
        if w[i] != a:
            i += 1
            continue
        j = i
        while j < len(w) and w[j] == a:
            j += 1
        out.append((i, j - i))
        i = j
    return out


def a_exponents(w: str, a: str) -> list[int]:
    """Distinct exponents of a in w, ascending. Prefix and suffix runs count."""
    return sorted({k for _, k in _runs(w, a)})


def pi_transform(w: str, a: str, new_exponents: list[int]) -> str:
    """Replace every run a^{k_i} by a^{h_i}, k_1 < k_2 < ... being the exponents of a."""
    ks = a_exponents(w, a)
    hs = list(new_exponents)
    if len(hs) != len(ks):
        raise ValueError(f"expected {len(ks)} exponents for {a!r}, got {len(hs)}")
    if any(h < 1 for h in hs):
        raise ValueError("exponents must be positive")
    if any(x >= y for x, y in zip(hs, hs[1:])):
        raise ValueError("exponents must be strictly increasing")
    if any(h > k for h, k in zip(hs, ks)):
        raise ValueError("new exponent larger than the one it replaces")
    table = dict(zip(ks, hs))
    parts = []
    pos = 0
    for start, k in _runs(w, a):
        parts.append(w[pos:start])
        parts.append(a * table[k])
        pos = start + k
    parts.append(w[pos:])
    return "".join(parts)


def separating_letter(w: str) -> str | None:
    """A letter occurring in every length-2 factor (the smaller one if two qualify)."""
    if len(w) < 2:
        raise ValueError("need |w| >= 2")
    pairs = {w[i:i + 2] for i in range(len(w) - 1)}
    for x in sorted(set(w)):
        if all(x in p for p in pairs):
            return x
    return None


def psi_preimage(w: str, a: str) -> str | None:
    """v with ψ_a(v) = w, where a leading a is supplied if w starts with another letter."""
    if w and w[0] != a:
        w = a + w
    out = []
    i = 0
    while i < len(w):
        if w[i] != a:
            return None
        if i + 1 < len(w) and w[i + 1] != a:
            out.append(w[i + 1])
            i += 2
        else:
            out.append(a)
            i += 1
    return "".join(out)


# -- class P ----------------------------------------------------------------

@dataclass(frozen=True)
class Appended:
    """Image is p followed by this palindrome."""
    palindrome: str

    def to_json(self) -> dict:
        return {"appended": self.palindrome}


@dataclass(frozen=True)
class Trimmed:
    """Image is p with its palindromic suffix of length k removed."""
    k: int

    def to_json(self) -> dict:
        return {"trimmed": self.k}


@dataclass(frozen=True)
class StandardPMorphism:
    p: str
    q: dict[str, Appended | Trimmed] = field(hash=False)
    shift: int = 0

    def standard_image(self, x: str) -> str:
        qx = self.q[x]
        if isinstance(qx, Appended):
            return self.p + qx.palindrome
        return self.p[:len(self.p) - qx.k]

    def standard(self) -> Morphism:
        """The standard P-morphism x -> p q_x (shift dropped)."""
        return Morphism({x: self.standard_image(x) for x in self.q})

    def morphism(self) -> Morphism:
        """The certified morphism, i.e. the standard one conjugated by the shift."""
        i = self.shift
        return Morphism({x: self.standard_image(x)[i:] + self.p[:i] for x in self.q})

    def validate(self) -> None:
        if not is_palindrome(self.p):
            raise ValueError(f"p={self.p!r} is not a palindrome")
        if not 0 <= self.shift <= len(self.p):
            raise ValueError("shift out of range")
        for x, qx in self.q.items():
            if isinstance(qx, Appended):
                if not is_palindrome(qx.palindrome):
                    raise ValueError(f"q_{x} is not a palindrome")
            else:
                if not 1 <= qx.k < len(self.p) or not is_palindrome(self.p[len(self.p) - qx.k:]):
                    raise ValueError(f"bad trimmed suffix for {x!r}")
            if len(self.standard_image(x)) < self.shift:
                raise ValueError("shift longer than an image")

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": {x: self.q[x].to_json() for x in sorted(self.q)},
            "shift": self.shift,
        }


def _fit(image: str, p: str) -> Appended | Trimmed | None:
    if image.startswith(p):
        rest = image[len(p):]
        return Appended(rest) if is_palindrome(rest) else None
    if p.startswith(image):
        k = len(p) - len(image)
        if 1 <= k < len(p) and is_palindrome(p[len(image):]):
            return Trimmed(k)
    return None


def _p_candidates(images: dict[str, str], s: str) -> set[str]:
    words = list(images.values())
    common = os.path.commonprefix(words)
    cands = {common[:i] for i in range(len(common) + 1) if is_palindrome(common[:i])}
    for v in words:
        for k in range(1, len(v) + 1):
            c = v + v[:k][::-1]
            if is_palindrome(c):
                cands.add(c)
    return {c for c in cands if c.startswith(s) and len(c) >= len(s)}


def class_p_certificates(m: Morphism) -> list[StandardPMorphism]:
    """Every class P certificate of m, by shift ascending then |p| descending."""
    images = m.images
    out = []
    shortest = min(len(v) for v in images.values())
    for i in range(shortest + 1):
        first = next(iter(images.values()))
        s = first[len(first) - i:]
        if any(not v.endswith(s) for v in images.values()):
            break
        std = {x: s + v[:len(v) - i] for x, v in images.items()}
        found = []
        for p in _p_candidates(std, s):
            q = {}
            for x, v in std.items():
                fit = _fit(v, p)
                if fit is None:
                    break
                q[x] = fit
            else:
                cert = StandardPMorphism(p, q, i)
                if cert.morphism() == m:
                    found.append(cert)
        found.sort(key=lambda c: (-len(c.p), c.p))
        out.extend(found)
    return out


def is_class_P(m: Morphism) -> StandardPMorphism | None:
    certs = class_p_certificates(m)
    return certs[0] if certs else None


# -- special P --------------------------------------------------------------

@dataclass(frozen=True)
class SpecialCheck:
    special: bool
    distinct_last_letters: bool
    synchronized: bool
    bound: int  # B = ceil(2 max|σ(x)p| / min|σ(y)|) + 2
    window: int  # number of blocks actually scanned
    witness: str | None = None  # a word whose image has a misaligned occurrence


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def special_check(m: Morphism, cert: StandardPMorphism) -> SpecialCheck:
    """Test both conditions of a special P-morphism on the standard form of cert.

    Every occurrence of some σ(x)p in σ(y_1...y_n)p has length at most
    max|σ(x)p|, so if it starts inside block i it ends inside the next
    ceil(max / min) blocks.  Since σ(w)p is always a prefix of σ(wz)p, it is
    enough to scan words of that many blocks plus one and look at occurrences
    starting in the first block.  The reported bound B is the looser textbook
    one; the scanned window never exceeds it.
    """
    cert.validate()
    if cert.morphism() != m:
        raise ValueError("certificate does not reconstruct the morphism")
    sigma = cert.standard()
    p = cert.p
    letters = sigma.domain
    images = {x: sigma[x] for x in letters}
    blocks = {x: images[x] + p for x in letters}
    longest = max(len(b) for b in blocks.values())
    shortest = min(len(v) for v in images.values())
    bound = _ceil_div(2 * longest, shortest) + 2
    window = _ceil_div(longest, shortest) + 1
    lasts = [v[-1] for v in images.values()]
    distinct = len(set(lasts)) == len(lasts)
    witness = None
    for tup in itertools.product(letters, repeat=window):
        y0 = tup[0]
        text = sigma("".join(tup)) + p
        first = len(images[y0])
        for x, b in blocks.items():
            start = text.find(b)
            while start != -1 and start < first:
                if start != 0 or images[y0] != images[x]:
                    witness = "".join(tup)
                    break
                start = text.find(b, start + 1)
            if witness:
                break
        if witness:
            break
    synced = witness is None
    return SpecialCheck(distinct and synced, distinct, synced, bound, window, witness)


def is_special(m: Morphism, cert: StandardPMorphism) -> bool:
    return special_check(m, cert).special


# -- h prefixes -------------------------------------------------------------

def small_factors(spec: InfiniteWordSpec, max_rounds: int | None = None) -> set[str]:
    """Exact set of factors of length 1 and 2 of an infinite word."""
    if isinstance(spec, Periodic):
        u = spec.period
        w = u + u + u[0]
        return {w[i:i + n] for n in (1, 2) for i in range(len(u))}
    if isinstance(spec, EventuallyPeriodic):
        u = spec.period
        pre = spec.preperiod
        w = pre + u + u + u[0]
        return {w[i:i + n] for n in (1, 2) for i in range(len(w) - n + 1)}
    return _morphic_small_factors(spec, max_rounds)


def _morphic_small_factors(spec: MorphicFixedPoint, max_rounds: int | None) -> set[str]:
    m, a = spec.morphism, spec.seed
    letters = {a}
    pending = [a]
    while pending:
        for c in m[pending.pop()]:
            if c not in letters:
                letters.add(c)
                pending.append(c)
    pairs = set()
    for x in letters:
        v = m[x]
        pairs.update(v[i:i + 2] for i in range(len(v) - 1))
    limit = max_rounds if max_rounds is not None else len(letters) ** 2 + len(letters) + 1
    for _ in range(limit):
        new = set(pairs)
        for xy in pairs:
            new.add(m[xy[0]][-1] + m[xy[1]][0])
        if new == pairs:
            return letters | pairs
        pairs = new
    raise RuntimeError("factor set not stabilized")


def palindromic_prefix_length(spec: InfiniteWordSpec, max_len: int = 100_000) -> int:
    """Least h such that the prefix of length h holds all palindromic factors of length <= 2."""
    targets = {u for u in small_factors(spec) if is_palindrome(u)}
    n = 16
    while True:
        w = spec.prefix(min(n, max_len))
        seen = set()
        for i, c in enumerate(w):
            seen.add(c)
            if i and w[i - 1] == c:
                seen.add(c + c)
            if targets <= seen:
                return i + 1
        if n >= max_len or len(w) < min(n, max_len):
            raise RuntimeError("factor set not stabilized")
        n *= 2


def special_rich_test(m: Morphism, cert: StandardPMorphism, t: InfiniteWordSpec,
                      window: int | None = None) -> bool:
    """Richness of σ(t) for a rich t, decided on σ(t_h)p."""
    if not special_check(m, cert).special:
        raise ValueError("morphism is not special P")
    if not is_rich(analysis_window(t, window)):
        raise ValueError("t is not rich on its analysis window")
    h = palindromic_prefix_length(t)
    return is_rich(cert.standard()(t.prefix(h)) + cert.p)


@dataclass(frozen=True)
class SpecialFixedPoint:
    verdict: Literal["Rich", "InfiniteDefect"]
    prefix: str  # s_h
    image: str  # σ(s_h)p


def special_fixed_point_class(m: Morphism, cert: StandardPMorphism, a: str) -> SpecialFixedPoint:
    """Rich or infinitely many defects, for the fixed point of a special standard P-morphism."""
    if cert.shift != 0:
        raise ValueError("expected a standard certificate (shift 0)")
    if not special_check(m, cert).special:
        raise ValueError("morphism is not special P")
    spec = MorphicFixedPoint(m, a)
    h = palindromic_prefix_length(spec)
    s_h = spec.prefix(h)
    image = m(s_h) + cert.p
    return SpecialFixedPoint(RICH if is_rich(image) else INFINITE_DEFECT, s_h, image)


# -- hypotheses of the preservation theorem ---------------------------------

def _free_reduce(parts: list[tuple[str, int]]) -> list[tuple[str, int]]:
    stack: list[tuple[str, int]] = []
    for c, e in parts:
        if stack and stack[-1][0] == c and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((c, e))
    return stack


def _group_power(w: str, k: int) -> list[tuple[str, int]]:
    if k >= 0:
        return [(c, 1) for c in w] * k
    return [(c, -1) for c in reversed(w)] * (-k)


def free_relation(m: Morphism, max_exp: int = 3) -> tuple[tuple[str, int], ...] | None:
    """A product φ(x)^α φ(y)^β φ(z)^γ equal to ε in the free group, with
    distinct letters, nonzero exponents bounded by max_exp, or None."""
    letters = m.domain
    exps = [e for e in range(-max_exp, max_exp + 1) if e]
    for r in (1, 2, 3):
        for combo in itertools.permutations(letters, r):
            for es in itertools.product(exps, repeat=r):
                parts = []
                for x, e in zip(combo, es):
                    parts.extend(_group_power(m[x], e))
                if not _free_reduce(parts):
                    return tuple(zip(combo, es))
    return None


def check_mpr_hypotheses(m: Morphism) -> bool:
    """Distinct primitive images with pairwise distinct primitive roots, none a
    power of another's root, and no bounded free-group relation among them."""
    images = [m[x] for x in m.domain]
    if len(set(images)) != len(images):
        return False
    if not all(is_primitive(v) for v in images):
        return False
    roots = [primitive_root(v)[0] for v in images]
    if len(set(roots)) != len(roots):
        return False
    for v, r in itertools.product(images, roots):
        if v != r and primitive_root(v)[0] == r:
            return False
    return free_relation(m) is None


# -- empirical sweeps -------------------------------------------------------

def _shortlex(alphabet: str, max_len: int):
    alpha = _letters(alphabet)
    for n in range(1, max_len + 1):
        yield from enumerate_words(len(alpha), n, letters=alpha)


@dataclass(frozen=True)
class Preservation:
    preserves: bool
    counterexample: str | None
    counterexamples: tuple[str, ...] = ()
    checked: int = 0


def preserves_richness_empirical(m: Morphism, max_len: int,
                                 alphabet: str | None = None) -> Preservation:
    """Apply m to every rich word up to max_len (shortlex) and collect non-rich images."""
    bad = []
    checked = 0
    for w in _shortlex(alphabet or m.domain, max_len):
        if not is_rich(w):
            continue
        checked += 1
        if not is_rich(m(w)):
            bad.append(w)
    return Preservation(not bad, bad[0] if bad else None, tuple(bad), checked)


@dataclass(frozen=True)
class PalindromePreservation:
    verdict: Literal["Preserves", "StrictlyPreserves"] | None
    witnesses: tuple[str, ...] = ()  # non-palindromes with palindromic image

    @property
    def witness(self) -> str | None:
        return self.witnesses[0] if self.witnesses else None


def palindrome_preservation_class(m: Morphism, max_len: int = 8) -> PalindromePreservation:
    if not all(is_palindrome(m[x]) for x in m.domain):
        return PalindromePreservation(None)
    bad = tuple(w for w in _shortlex(m.domain, max_len)
                if not is_palindrome(w) and is_palindrome(m(w)))
    return PalindromePreservation("Preserves" if bad else "StrictlyPreserves", bad)
