"""Permutations over arbitrary ground sets, classical/vincular patterns, and
the elementary constructions used by the counting code (complement,
standardization, matching permutation, subpermutation, shuffles)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence


class PermutationError(ValueError):
    """Raised for malformed permutations, patterns or prefix queries."""


def parse_entries(text: str) -> tuple[int, ...]:
    """Parse ``"3,1,2"`` or the digit shorthand ``"312"`` into a tuple.

    The empty string (or only whitespace) parses to the empty tuple.
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
    else:
        parts = list(text)
    try:
        values = tuple(int(p) for p in parts)
    except ValueError:
        raise PermutationError(f"not a permutation: {text!r}") from None
    return values


@dataclass(frozen=True)
class Permutation:
    """A sequence of distinct positive integers.

    The ground set is implicit (the set of entries), so ``Permutation((4, 7, 2))``
    is a permutation on ``{2, 4, 7}``.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        if any(v < 1 for v in entries):
            raise PermutationError(f"entries must be positive: {entries}")
        if len(set(entries)) != len(entries):
            raise PermutationError(f"entries must be distinct: {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return cls(parse_entries(text))

    @property
    def ground_set(self) -> frozenset[int]:
        return frozenset(self.entries)

    def is_standard(self) -> bool:
        """True when the ground set is exactly ``{1, ..., len(self)}``."""
        return sorted(self.entries) == list(range(1, len(self.entries) + 1))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        if all(v <= 9 for v in self.entries):
            return "".join(map(str, self.entries))
        return ",".join(map(str, self.entries))


def _as_perm(word) -> Permutation:
    return word if isinstance(word, Permutation) else Permutation(tuple(word))


@dataclass(frozen=True)
class Pattern:
    """A permutation of ``[k]`` with an adjacency block structure.

    ``blocks`` partitions the positions ``1..k`` into runs of consecutive
    positions; positions inside one block must be adjacent in the host word.
    All-singleton blocks is a classical pattern.
    """

    perm: Permutation
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        perm = _as_perm(self.perm)
        if not perm.is_standard() or len(perm) == 0:
            raise PermutationError(f"pattern must be a permutation of [k]: {perm}")
        blocks = tuple(tuple(b) for b in self.blocks)
        flat = [p for b in blocks for p in b]
        if flat != list(range(1, len(perm) + 1)) or any(len(b) == 0 for b in blocks):
            raise PermutationError(f"blocks must split 1..{len(perm)} into runs: {blocks}")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def classical(cls, word) -> "Pattern":
        perm = Permutation.parse(word) if isinstance(word, str) else _as_perm(word)
        return cls(perm, tuple((i,) for i in range(1, len(perm) + 1)))

    @classmethod
    def from_adjacency(cls, word, adjacency: Sequence[bool]) -> "Pattern":
        perm = _as_perm(word)
        if len(adjacency) != max(len(perm) - 1, 0):
            raise PermutationError("adjacency needs one flag per neighbouring pair")
        blocks: list[list[int]] = [[1]] if len(perm) else []
        for pos, glued in enumerate(adjacency, start=2):
            if glued:
                blocks[-1].append(pos)
            else:
                blocks.append([pos])
        return cls(perm, tuple(tuple(b) for b in blocks))

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        """Parse ``"1-32"`` (1 then the adjacent block 32); no dash means classical."""
        text = text.strip()
        if not text:
            raise PermutationError("empty pattern")
        chunks = [parse_entries(chunk) for chunk in text.split("-")]
        if any(len(c) == 0 for c in chunks):
            raise PermutationError(f"empty block in pattern {text!r}")
        entries = tuple(v for c in chunks for v in c)
        if "-" not in text:
            return cls.classical(Permutation(entries))
        blocks, pos = [], 1
        for c in chunks:
            blocks.append(tuple(range(pos, pos + len(c))))
            pos += len(c)
        return cls(Permutation(entries), tuple(blocks))

    def __len__(self) -> int:
        return len(self.perm)

    @property
    def adjacency(self) -> tuple[bool, ...]:
        """Flag ``a`` is set when positions ``a+1`` and ``a+2`` share a block."""
        flags = []
        for b in self.blocks:
            flags.extend([True] * (len(b) - 1))
            flags.append(False)
        return tuple(flags[: len(self.perm) - 1])

    @property
    def is_classical(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def __str__(self) -> str:
        if self.is_classical:
            return str(self.perm)
        sep = "" if len(self.perm) <= 9 else ","
        parts = []
        for b in self.blocks:
            parts.append(sep.join(str(self.perm[p - 1]) for p in b))
        return "-".join(parts)


def as_pattern(p) -> Pattern:
    if isinstance(p, Pattern):
        return p
    if isinstance(p, str):
        return Pattern.parse(p)
    return Pattern.classical(p)


def contains_pattern(word, pat) -> bool:
    """Whether ``word`` contains ``pat`` (classical or vincular).

    Depth-first over increasing index assignments; a candidate index is kept
    only if it is order-compatible with every earlier assigned entry, and
    inside a block the next index is forced to be the neighbour.
    """
    w = tuple(word)
    pat = as_pattern(pat)
    p = pat.perm.entries
    adj = pat.adjacency
    k, n = len(p), len(w)
    if k > n:
        return False
    chosen: list[int] = []

    def extend(start: int) -> bool:
        a = len(chosen)
        if a == k:
            return True
        if a > 0 and adj[a - 1]:
            candidates: Iterable[int] = (chosen[-1] + 1,) if chosen[-1] + 1 < n else ()
        else:
            candidates = range(start, n - (k - a) + 1)
        for i in candidates:
            v = w[i]
            if all((w[j] < v) == (p[b] < p[a]) for b, j in enumerate(chosen)):
                chosen.append(i)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def avoids_all(word, patterns) -> bool:
    return not any(contains_pattern(word, p) for p in patterns)


def complement(word) -> Permutation:
    """Entry-wise ``n + 1 - w(i)``; the word must be a permutation of ``[n]``."""
    w = _as_perm(word)
    if not w.is_standard():
        raise PermutationError(f"complement needs a permutation of [n], got {w}")
    n = len(w)
    return Permutation(tuple(n + 1 - v for v in w))


def complement_pattern(pat) -> Pattern:
    pat = as_pattern(pat)
    return Pattern(complement(pat.perm), pat.blocks)


def standardize(word) -> Permutation:
    w = _as_perm(word)
    if len(w) == 0:
        raise PermutationError("cannot standardize the empty permutation")
    rank = {v: i for i, v in enumerate(sorted(w), start=1)}
    return Permutation(tuple(rank[v] for v in w))


def matching_permutation(word, ground) -> Permutation:
    """Relabel a permutation of ``[k]`` onto the ``k``-element set ``ground``."""
    w = _as_perm(word)
    values = sorted(set(ground))
    if len(values) != len(w):
        raise PermutationError(f"ground set has {len(values)} elements, word has {len(w)}")
    if not w.is_standard():
        raise PermutationError(f"matching permutation needs a permutation of [k], got {w}")
    return Permutation(tuple(values[v - 1] for v in w))


def subpermutation(word, subset) -> Permutation:
    w = _as_perm(word)
    subset = set(subset)
    if not subset <= w.ground_set:
        raise PermutationError(f"{sorted(subset - w.ground_set)} not in the ground set of {w}")
    return Permutation(tuple(v for v in w if v in subset))


def _index_of(word: Permutation, a: int) -> int:
    try:
        return word.entries.index(a)
    except ValueError:
        raise PermutationError(f"{a} does not occur in {word}") from None


def ancestors(word, a: int) -> frozenset[int]:
    w = _as_perm(word)
    return frozenset(w.entries[: _index_of(w, a)])


def descendants(word, a: int) -> frozenset[int]:
    w = _as_perm(word)
    return frozenset(w.entries[_index_of(w, a) + 1 :])


def count_shuffles(k: int, l: int) -> int:
    return comb(k + l, k)


def enumerate_shuffles(s, t) -> list[Permutation]:
    """All interleavings of ``s`` and ``t`` keeping each one's internal order.

    Results come out in the order of the position sets chosen for ``s``.
    """
    s, t = _as_perm(s), _as_perm(t)
    if s.ground_set & t.ground_set:
        raise PermutationError(f"ground sets of {s} and {t} overlap")
    size = len(s) + len(t)
    out = []
    for slots in combinations(range(size), len(s)):
        slot_set = set(slots)
        si, ti = iter(s.entries), iter(t.entries)
        out.append(Permutation(tuple(next(si) if i in slot_set else next(ti) for i in range(size))))
    return out


@dataclass(frozen=True)
class PrefixQuery:
    """The counting problem: permutations of ``[n]`` starting with ``prefix``
    and avoiding every pattern in ``patterns``.

    An empty prefix means no constraint on the leading entries.
    """

    n: int
    prefix: Permutation
    patterns: tuple[Pattern, ...]

    def __post_init__(self):
        n = int(self.n)
        if n < 1:
            raise PermutationError(f"n must be positive, got {n}")
        prefix = _as_perm(self.prefix)
        if any(v > n for v in prefix):
            raise PermutationError(f"prefix {prefix} has entries outside [1, {n}]")
        if len(prefix) >= n:
            raise PermutationError(f"prefix length {len(prefix)} must be below n={n}")
        patterns = tuple(as_pattern(p) for p in self.patterns)
        if not patterns:
            raise PermutationError("at least one pattern is required")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "patterns", patterns)

    @classmethod
    def make(cls, n: int, prefix=(), patterns=()) -> "PrefixQuery":
        if isinstance(prefix, str):
            prefix = Permutation.parse(prefix)
        if isinstance(patterns, (str, Pattern)):
            patterns = (patterns,)
        return cls(n, _as_perm(prefix), tuple(patterns))

    @property
    def t(self) -> int:
        return len(self.prefix)

    def complemented(self) -> "PrefixQuery":
        n = self.n
        return PrefixQuery(
            n,
            Permutation(tuple(n + 1 - c for c in self.prefix)),
            tuple(complement_pattern(p) for p in self.patterns),
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "prefix": list(self.prefix.entries),
            "patterns": [str(p) for p in self.patterns],
        }
