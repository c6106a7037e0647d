"""
Permutations in one-line notation, pattern containment and Rothe diagrams.

Everything is 1-based to match the usual conventions: ``Permutation((1, 3, 4, 2))``
sends 1 -> 1, 2 -> 3, 3 -> 4, 4 -> 2.

>>> w = Permutation.parse("1342")
>>> w.length()
2
>>> sorted(rothe_diagram(w))
[(2, 2), (3, 2)]
>>> contains_pattern(w, Permutation.parse("132"))
True
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from functools import cached_property

__all__ = [
    "Permutation",
    "Diagram",
    "PatternTooLong",
    "GROTHENDIECK_ZERO_ONE_PATTERNS",
    "SCHUBERT_ZERO_ONE_PATTERNS",
    "contains_pattern",
    "avoids_zero_one_patterns",
    "avoids_schubert_zero_one_patterns",
    "rothe_diagram",
    "enumerate_sn",
]


class PatternTooLong(ValueError):
    pass


class Permutation:
    """An immutable permutation of {1..n} in one-line notation."""

    def __init__(self, entries):
        entries = tuple(int(e) for e in entries)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"not a permutation of 1..{len(entries)}: {entries}")
        self.entries = entries

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Digits when n <= 9 (``"58326147"``), comma separated otherwise."""
        text = text.strip()
        if not text:
            raise ValueError("empty permutation")
        if "," in text:
            parts = [p.strip() for p in text.split(",")]
        else:
            parts = list(text)
        try:
            return cls(int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"cannot parse permutation {text!r}: {exc}") from None

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(range(n, 0, -1))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __call__(self, i: int) -> int:
        return self.entries[i - 1]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.entries == other.entries

    def __lt__(self, other):
        return self.entries < other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Permutation({self})"

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.entries))
        return ",".join(map(str, self.entries))

    @cached_property
    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.entries, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def inv(self, j: int) -> int:
        """w^{-1}(j)."""
        return self.inverse.entries[j - 1]

    def length(self) -> int:
        """Number of inversions."""
        e = self.entries
        return sum(1 for a, b in itertools.combinations(range(self.n), 2) if e[a] > e[b])

    def swap(self, i: int) -> Permutation:
        """w s_i: exchange the values in positions i and i+1."""
        e = list(self.entries)
        e[i - 1], e[i] = e[i], e[i - 1]
        return Permutation(e)

    def ascents(self) -> list[int]:
        """Positions i with w(i) < w(i+1)."""
        e = self.entries
        return [i for i in range(1, self.n) if e[i - 1] < e[i]]

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.entries, start=1))

    def is_dominant(self) -> bool:
        return not contains_pattern(self, Permutation((1, 3, 2)))


Diagram = frozenset  # of (row, column) pairs, 1-based

GROTHENDIECK_ZERO_ONE_PATTERNS = tuple(
    Permutation.parse(p) for p in ("1432", "1342", "13254", "31524", "12534", "21534")
)

SCHUBERT_ZERO_ONE_PATTERNS = tuple(
    Permutation.parse(p)
    for p in (
        "12543", "13254", "13524", "13542", "21543", "125364",
        "125634", "215364", "215634", "315264", "315624", "315642",
    )
)


def contains_pattern(w: Permutation, sigma: Permutation) -> bool:
    """True iff some subsequence of w is order-isomorphic to sigma."""
    k = sigma.n
    n = w.n
    if k > n:
        raise PatternTooLong(f"pattern {sigma} is longer than {w}")
    if k == 0:
        return True
    word = w.entries
    pat = sigma.entries
    chosen: list[int] = []

    def consistent(value: int, idx: int) -> bool:
        # value must sit relative to earlier chosen values exactly as pat[idx] does
        p = pat[idx]
        for j, v in enumerate(chosen):
            if (pat[j] < p) != (v < value):
                return False
        return True

    def search(start: int, idx: int) -> bool:
        if idx == k:
            return True
        # leave room for the remaining k - idx - 1 letters
        for pos in range(start, n - (k - idx) + 1):
            value = word[pos]
            if consistent(value, idx):
                chosen.append(value)
                if search(pos + 1, idx + 1):
                    return True
                chosen.pop()
        return False

    return search(0, 0)


def _avoids_all(w: Permutation, patterns) -> bool:
    return not any(contains_pattern(w, p) for p in patterns if p.n <= w.n)


def avoids_zero_one_patterns(w: Permutation) -> bool:
    """The six-pattern test for zero-one Grothendieck polynomials."""
    return _avoids_all(w, GROTHENDIECK_ZERO_ONE_PATTERNS)


def avoids_schubert_zero_one_patterns(w: Permutation) -> bool:
    """The twelve-pattern test for zero-one Schubert polynomials."""
    return _avoids_all(w, SCHUBERT_ZERO_ONE_PATTERNS)


def rothe_diagram(w: Permutation) -> Diagram:
    """Cells (i, j) with w(i) > j and w^{-1}(j) > i."""
    return frozenset(
        (i, j)
        for i in range(1, w.n + 1)
        for j in range(1, w(i))
        if w.inv(j) > i
    )


def enumerate_sn(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    if n < 1:
        raise ValueError("n must be positive")
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)
