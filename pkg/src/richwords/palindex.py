"""Palindromic tree (eertree) over a finite word.

One node per distinct non-empty palindromic factor plus two roots (lengths
-1 and 0).  Position i of the word (1-based) creates at most one node, and it
does so exactly when the longest palindromic suffix of the length-i prefix is
unioccurrent in that prefix, which is what richness and defect are built on.
"""
from __future__ import annotations

from dataclasses import dataclass

IMAGINARY_ROOT = 0  # length -1
EMPTY_ROOT = 1  # length 0


@dataclass(frozen=True)
class ComplexityProfile:
    n: int
    palindromes: int  # P(n)
    factors: int  # C(n)


class PalindromeIndex:
    """Eertree over ``word``; immutable once built."""

    def __init__(self, word: str):
        self.word = word
        length = [-1, 0]
        link = [IMAGINARY_ROOT, IMAGINARY_ROOT]
        edges: list[dict[str, int]] = [{}, {}]
        first_end = [0, 0]
        lps_node: list[int] = []
        created: list[bool] = []

        last = EMPTY_ROOT
        for i, c in enumerate(word):
            cur = last
            while True:
                j = i - length[cur] - 1
                if j >= 0 and word[j] == c:
                    break
                cur = link[cur]
            node = edges[cur].get(c)
            if node is not None:
                last = node
                lps_node.append(node)
                created.append(False)
                continue
            node = len(length)
            length.append(length[cur] + 2)
            edges.append({})
            first_end.append(i + 1)
            if length[node] == 1:
                link.append(EMPTY_ROOT)
            else:
                sl = link[cur]
                while True:
                    j = i - length[sl] - 1
                    if j >= 0 and word[j] == c:
                        break
                    sl = link[sl]
                link.append(edges[sl][c])
            edges[cur][c] = node
            last = node
            lps_node.append(node)
            created.append(True)

        count = [0] * len(length)
        for node in lps_node:
            count[node] += 1
        # Children are created after their suffix link targets.
        for node in range(len(length) - 1, 1, -1):
            count[link[node]] += count[node]

        self.length = length
        self.link = link
        self.edges = edges
        self.first_end = first_end
        self.count = count
        self.lps_node = lps_node
        self.created = created

    def __len__(self) -> int:
        return len(self.word)

    @property
    def node_count(self) -> int:
        """Number of distinct non-empty palindromic factors."""
        return len(self.length) - 2

    @property
    def palindrome_count(self) -> int:
        """|PAL(w)|, counting the empty word."""
        return len(self.length) - 1

    def node_word(self, node: int) -> str:
        end = self.first_end[node]
        return self.word[end - self.length[node]:end]

    def palindromes(self) -> list[str]:
        """Distinct non-empty palindromic factors in order of first appearance."""
        return [self.node_word(v) for v in range(2, len(self.length))]

    def occurrence_count(self, node: int) -> int:
        return self.count[node]

    def _check_position(self, i: int) -> None:
        if not 1 <= i <= len(self.word):
            raise ValueError(f"position {i} out of range 1..{len(self.word)}")

    def longest_palindromic_suffix(self, i: int) -> str:
        self._check_position(i)
        return self.word[i - self.length[self.lps_node[i - 1]]:i]

    def has_ups(self, i: int) -> bool:
        """Whether the length-i prefix has a unioccurrent palindromic suffix."""
        self._check_position(i)
        return self.created[i - 1]

    def ups(self, i: int) -> str | None:
        return self.longest_palindromic_suffix(i) if self.has_ups(i) else None

    def defective_positions(self) -> list[int]:
        return [i + 1 for i, new in enumerate(self.created) if not new]

    @property
    def defect(self) -> int:
        return len(self.word) + 1 - self.palindrome_count

    def palindrome_length_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {0: 1}
        for v in range(2, len(self.length)):
            counts[self.length[v]] = counts.get(self.length[v], 0) + 1
        return counts

    def complexity(self, n: int) -> ComplexityProfile:
        if not 0 <= n <= len(self.word):
            raise ValueError(f"length {n} out of range 0..{len(self.word)}")
        pal = self.palindrome_length_counts().get(n, 0)
        w = self.word
        fac = len({w[i:i + n] for i in range(len(w) - n + 1)})
        return ComplexityProfile(n, pal, fac)

    def complexity_table(self, max_n: int) -> list[ComplexityProfile]:
        return [self.complexity(n) for n in range(min(max_n, len(self.word)) + 1)]


def build(w: str) -> PalindromeIndex:
    return PalindromeIndex(w)


def palindrome_count(w: str) -> int:
    return PalindromeIndex(w).palindrome_count


def is_rich(w: str) -> bool:
    """Early-exit richness test: stops at the first prefix without a ups."""
    length = [-1, 0]
    link = [0, 0]
    edges: list[dict[str, int]] = [{}, {}]
    last = 1
    for i, c in enumerate(w):
        cur = last
        while True:
            j = i - length[cur] - 1
            if j >= 0 and w[j] == c:
                break
            cur = link[cur]
        if c in edges[cur]:
            return False
        node = len(length)
        length.append(length[cur] + 2)
        edges.append({})
        if length[node] == 1:
            link.append(1)
        else:
            sl = link[cur]
            while True:
                j = i - length[sl] - 1
                if j >= 0 and w[j] == c:
                    break
                sl = link[sl]
            link.append(edges[sl][c])
        edges[cur][c] = node
        last = node
    return True
