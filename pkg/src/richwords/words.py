"""Finite words, morphisms, and finitely described infinite words.

Words are plain ``str`` values; a letter is a one-character string and the
alphabet of a word is whatever characters it contains.  Positions reported
anywhere in the package are 1-based.
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

WORD_RE = re.compile(r"[A-Za-z0-9]*")

DEFAULT_STEP_BUDGET = 30


def check_word(w: str) -> str:
    if not WORD_RE.fullmatch(w):
        raise ValueError(f"invalid word {w!r}: letters must be [A-Za-z0-9]")
    return w


def reverse(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def alphabet(w: str) -> str:
    """Sorted string of the distinct letters of ``w``."""
    return "".join(sorted(set(w)))


def letter_count(w: str, a: str) -> int:
    return w.count(a)


def rotate(w: str, k: int) -> str:
    """The circular shift T^k(w)."""
    if not w:
        return w
    k %= len(w)
    return w[k:] + w[:k]


def conjugates(w: str, include_self: bool = False) -> list[str]:
    """Circular shifts T^k(w) for k = 1..|w|-1 (k = 0 too with ``include_self``)."""
    if not w:
        raise ValueError("empty input")
    start = 0 if include_self else 1
    return [rotate(w, k) for k in range(start, len(w))]


def primitive_root(w: str) -> tuple[str, int]:
    """Return ``(r, k)`` with ``w == r * k`` and ``r`` primitive."""
    if not w:
        raise ValueError("empty input")
    # The smallest rotation that fixes w is the length of the root.
    n = len(w)
    p = (w + w).find(w, 1)
    if n % p:
        p = n
    return w[:p], n // p


def is_primitive(w: str) -> bool:
    return primitive_root(w)[1] == 1


def is_conjugate(u: str, v: str) -> bool:
    return len(u) == len(v) and v in u + u


def factor_set(w: str, n: int) -> set[str]:
    if n < 0:
        raise ValueError("negative factor length")
    if n > len(w):
        return set()
    return {w[i:i + n] for i in range(len(w) - n + 1)}


def is_reversal_closed(factors: Iterable[str]) -> bool:
    fs = set(factors)
    return all(u[::-1] in fs for u in fs)


def occurrences(w: str, u: str) -> list[int]:
    """0-based start indices of every (possibly overlapping) occurrence of u in w."""
    if not u:
        raise ValueError("empty factor")
    out = []
    i = w.find(u)
    while i != -1:
        out.append(i)
        i = w.find(u, i + 1)
    return out


def minimal_period(w: str) -> int:
    """Smallest p >= 1 with w[i] == w[i + p] for all valid i (|w| for aperiodic w)."""
    n = len(w)
    if n == 0:
        return 0
    # KMP failure function: period = n - border.
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    return n - fail[-1]


class Morphism:
    """A non-erasing morphism given by its letter images.

    Instances are immutable and hashable.  Calling a morphism on a word applies
    its homomorphic extension.
    """

    __slots__ = ("_images", "_key")

    def __init__(self, images: Mapping[str, str]):
        if not images:
            raise ValueError("a morphism needs at least one letter")
        for x, img in images.items():
            if len(x) != 1:
                raise ValueError(f"morphism domain letter {x!r} is not a single character")
            if not img:
                raise ValueError(f"image of {x!r} is empty (morphisms are non-erasing)")
            check_word(x)
            check_word(img)
        self._images = dict(sorted(images.items()))
        self._key = tuple(self._images.items())

    @classmethod
    def parse(cls, text: str) -> Morphism:
        """Parse ``a=ab,b=a`` into a morphism."""
        images = {}
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            letter, sep, img = part.partition("=")
            if not sep:
                raise ValueError(f"bad morphism item {part!r}, expected <letter>=<word>")
            letter = letter.strip()
            if letter in images:
                raise ValueError(f"letter {letter!r} given twice")
            images[letter] = img.strip()
        return cls(images)

    def __str__(self) -> str:
        return ",".join(f"{x}={img}" for x, img in self._key)

    def __repr__(self) -> str:
        return f"Morphism({self._images!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Morphism) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __getitem__(self, x: str) -> str:
        try:
            return self._images[x]
        except KeyError:
            raise ValueError(f"letter {x!r} outside the morphism's domain") from None

    def __call__(self, w: str) -> str:
        return self.apply(w)

    @property
    def images(self) -> dict[str, str]:
        return dict(self._images)

    @property
    def domain(self) -> str:
        return "".join(self._images)

    def items(self):
        return self._key

    def apply(self, w: str) -> str:
        images = self._images
        try:
            return "".join([images[x] for x in w])
        except KeyError as exc:
            raise ValueError(f"letter {exc.args[0]!r} outside the morphism's domain") from None

    def compose(self, inner: Morphism) -> Morphism:
        """``self ∘ inner``: x -> self(inner(x))."""
        return Morphism({x: self.apply(img) for x, img in inner.items()})

    def power(self, k: int) -> Morphism:
        if k < 1:
            raise ValueError("power must be >= 1")
        m = self
        for _ in range(k - 1):
            m = self.compose(m)
        return m

    def iterate(self, a: str, steps: int) -> str:
        """m^steps(a)."""
        w = a
        for _ in range(steps):
            w = self.apply(w)
        return w

    def is_prolongable(self, a: str) -> bool:
        img = self._images.get(a)
        return img is not None and len(img) > 1 and img[0] == a

    def fixed_point_prefix(self, a: str, n: int, max_steps: int = DEFAULT_STEP_BUDGET) -> str:
        """Length-n prefix of the fixed point m^ω(a)."""
        if not self.is_prolongable(a):
            raise ValueError(f"not prolongable on {a!r}")
        w = a
        steps = 0
        while len(w) < n:
            if steps >= max_steps:
                raise ValueError(f"fixed point did not reach length {n} within {max_steps} iterations")
            w = self.apply(w)
            steps += 1
        return w[:n]

    def is_injective_on_letters(self) -> bool:
        return len(set(self._images.values())) == len(self._images)


@dataclass(frozen=True)
class Periodic:
    period: str

    def __post_init__(self):
        if not self.period:
            raise ValueError("empty period")
        check_word(self.period)

    def prefix(self, n: int) -> str:
        reps = -(-n // len(self.period))
        return (self.period * reps)[:n]

    def __str__(self) -> str:
        return f"periodic:{self.period}"


@dataclass(frozen=True)
class EventuallyPeriodic:
    preperiod: str
    period: str

    def __post_init__(self):
        if not self.period:
            raise ValueError("empty period")
        check_word(self.preperiod)
        check_word(self.period)

    def prefix(self, n: int) -> str:
        if n <= len(self.preperiod):
            return self.preperiod[:n]
        return self.preperiod + Periodic(self.period).prefix(n - len(self.preperiod))

    def __str__(self) -> str:
        return f"evper:{self.preperiod}|{self.period}"


@dataclass(frozen=True)
class MorphicFixedPoint:
    morphism: Morphism
    seed: str
    max_steps: int = DEFAULT_STEP_BUDGET

    def __post_init__(self):
        if not self.morphism.is_prolongable(self.seed):
            raise ValueError(f"not prolongable on {self.seed!r}")

    def prefix(self, n: int) -> str:
        return self.morphism.fixed_point_prefix(self.seed, n, self.max_steps)

    def __str__(self) -> str:
        return f"morphic:{self.morphism};seed={self.seed}"


InfiniteWordSpec = Periodic | EventuallyPeriodic | MorphicFixedPoint


def prefix(spec: InfiniteWordSpec, n: int) -> str:
    if n < 0:
        raise ValueError("negative prefix length")
    return spec.prefix(n)


def parse_spec(text: str) -> InfiniteWordSpec:
    """Parse ``periodic:<w>``, ``evper:<pre>|<w>`` or ``morphic:<a>=<w>,...;seed=<a>``."""
    kind, sep, body = text.partition(":")
    if not sep:
        raise ValueError(f"not an infinite-word spec: {text!r}")
    if kind == "periodic":
        return Periodic(body)
    if kind == "evper":
        pre, bar, per = body.partition("|")
        if not bar:
            raise ValueError("evper spec needs '<pre>|<period>'")
        return EventuallyPeriodic(pre, per)
    if kind == "morphic":
        images, semi, seed_part = body.partition(";")
        key, eq, seed = seed_part.partition("=")
        if not semi or key.strip() != "seed" or not eq:
            raise ValueError("morphic spec needs ';seed=<letter>'")
        return MorphicFixedPoint(Morphism.parse(images), seed.strip())
    raise ValueError(f"unknown spec kind {kind!r}")


def is_spec_text(text: str) -> bool:
    return text.split(":", 1)[0] in ("periodic", "evper", "morphic") and ":" in text


FIBONACCI = MorphicFixedPoint(Morphism({"a": "ab", "b": "a"}), "a")
THUE_MORSE = MorphicFixedPoint(Morphism({"a": "ab", "b": "ba"}), "a")
