"""Closed-form counts of pattern-avoiding permutations with a fixed prefix.

Every public counter returns a :class:`CountOutcome` whose ``rule`` names the
case that produced the number. Patterns whose closed form is stated for a
representative are handled by complementing prefix and patterns first; the
outcome then carries ``complemented=True`` and the representative's rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import PermutationError, PrefixQuery, as_pattern, avoids_all
from .oracle import oracle_count
from .sequences import ballot, binomial, catalan, schroder

S3 = ("123", "132", "213", "231", "312", "321")
SCHRODER_PAIR = frozenset({"3412", "3421"})

# one representative per complement class of pairs
_BASE_PAIRS = {
    frozenset({"132", "312"}),
    frozenset({"213", "231"}),
    frozenset({"123", "321"}),
    frozenset({"123", "132"}),
    frozenset({"123", "213"}),
    frozenset({"132", "213"}),
    frozenset({"132", "231"}),
    frozenset({"123", "312"}),
    frozenset({"123", "231"}),
}
_COMPLEMENT = {"123": "321", "132": "312", "213": "231", "231": "213", "312": "132", "321": "123"}

SINGLE_RULES = (
    "prefix-contains-pattern",
    "catalan-total",
    "small-n-oracle",
    "231-zero-condition",
    "231-block-product",
    "123-zero-condition",
    "123-ballot-reduction",
    "132-zero-condition",
    "132-ballot-reduction",
)

PAIR_RULES = (
    "prefix-contains-pattern",
    "small-n-oracle",
    "pair-total-power",
    "pair-total-binomial",
    "pair-132-312-consecutive",
    "pair-132-312-zero",
    "pair-213-231-shuffle",
    "pair-213-231-zero",
    "pair-123-321-erdos-szekeres",
    "pair-123-321-oracle",
    "pair-123-132-zero-top",
    "pair-123-132-case-2",
    "pair-123-132-case-3",
    "pair-123-132-power",
    "pair-123-213-zero",
    "pair-123-213-case-1",
    "pair-123-213-case-2",
    "pair-132-213-zero-1",
    "pair-132-213-zero-2",
    "pair-132-213-power",
    "pair-132-231-zero",
    "pair-132-231-power",
    "pair-123-312-case-1",
    "pair-123-312-case-2",
    "pair-123-312-case-3",
    "pair-123-312-case-4",
    "pair-123-312-case-5",
    "pair-123-312-case-6",
    "pair-123-231-decreasing-top",
    "pair-123-231-case-1",
    "pair-123-231-case-2",
    "pair-123-231-case-3",
    "pair-123-231-case-3-straddle",
)

SCHRODER_RULES = (
    "prefix-contains-pattern",
    "schroder-total",
    "schroder-leading-edge",
    "schroder-leading-split",
    "schroder-zero-U",
    "schroder-zero-V",
    "schroder-block-product",
)


@dataclass(frozen=True)
class CountOutcome:
    count: int
    rule: str
    complemented: bool = False

    def to_dict(self) -> dict:
        return {"count": str(self.count), "rule": self.rule}


@dataclass(frozen=True)
class PrefixAnalysis:
    """Order data of a prefix ``c`` of a permutation of ``[n]``.

    ``gaps[k-1]`` is the number of free values strictly between the
    ``(k-1)``-th and ``k``-th order statistic, with sentinels 0 and ``n+1``.
    ``U`` holds entries that start a 231 inside the prefix, ``V`` entries
    with a later larger prefix entry, and ``j`` is the first (1-based) index
    with a nonzero gap.
    """

    n: int
    prefix: tuple[int, ...]
    order_stats: tuple[int, ...]
    gaps: tuple[int, ...]
    min_c: int | None
    max_c: int | None
    U: frozenset[int]
    V: frozenset[int]
    j: int | None

    @property
    def free(self) -> tuple[int, ...]:
        taken = set(self.prefix)
        return tuple(v for v in range(1, self.n + 1) if v not in taken)


def analyze_prefix(n: int, prefix) -> PrefixAnalysis:
    c = PrefixQuery.make(n, prefix, ("1",)).prefix.entries
    stats = tuple(sorted(c))
    bounds = (0,) + stats + (n + 1,)
    gaps = tuple(bounds[k] - bounds[k - 1] - 1 for k in range(1, len(bounds)))
    t = len(c)
    U = frozenset(
        c[i]
        for i, j, k in combinations(range(t), 3)
        if c[k] < c[i] < c[j]
    )
    V = frozenset(c[i] for i, j in combinations(range(t), 2) if c[i] < c[j])
    j = next((k for k, g in enumerate(gaps, start=1) if g > 0), None)
    return PrefixAnalysis(
        n=n,
        prefix=c,
        order_stats=stats,
        gaps=gaps,
        min_c=min(c) if c else None,
        max_c=max(c) if c else None,
        U=U,
        V=V,
        j=j,
    )


def _query(n, prefix, patterns) -> PrefixQuery:
    return PrefixQuery.make(n, prefix, patterns)


def _complement_prefix(n: int, c) -> tuple[int, ...]:
    return tuple(n + 1 - v for v in c)


def _ascents(c):
    """All index pairs ``i < j`` with ``c[i] < c[j]``, as value pairs."""
    return [(c[i], c[j]) for i, j in combinations(range(len(c)), 2) if c[i] < c[j]]


def _pairs(c):
    return [(c[i], c[j]) for i, j in combinations(range(len(c)), 2)]


def _is_consecutive(c) -> bool:
    return max(c) - min(c) + 1 == len(c)


# ---------------------------------------------------------------- singles


def _single_231(n, c) -> CountOutcome:
    free = set(range(1, n + 1)) - set(c)
    lowest_free = min(free)
    if any(lowest_free < ci for ci, _ in _ascents(c)):
        return CountOutcome(0, "231-zero-condition")
    count = 1
    for g in analyze_prefix(n, c).gaps:
        count *= catalan(g)
    return CountOutcome(count, "231-block-product")


def _single_123(n, c) -> CountOutcome:
    highest_free = max(set(range(1, n + 1)) - set(c))
    if any(highest_free > cj for _, cj in _ascents(c)):
        return CountOutcome(0, "123-zero-condition")
    return CountOutcome(ballot(n - len(c) + 1, min(c)), "123-ballot-reduction")


def _single_132(n, c) -> CountOutcome:
    free = set(range(1, n + 1)) - set(c)
    if any(any(ci < a < cj for a in free) for ci, cj in _ascents(c)):
        return CountOutcome(0, "132-zero-condition")
    return CountOutcome(ballot(n - len(c) + 1, min(c)), "132-ballot-reduction")


_SINGLE = {"231": _single_231, "123": _single_123, "132": _single_132}


def count_single_length3(n: int, prefix, p) -> CountOutcome:
    """``|S_{n,prefix}(p)|`` for a classical ``p`` of length three."""
    pat = as_pattern(p)
    key = str(pat)
    if not pat.is_classical or key not in S3:
        raise PermutationError(f"expected a classical pattern of length 3, got {pat}")
    q = _query(n, prefix, (pat,))
    c = q.prefix.entries
    if not avoids_all(c, q.patterns):
        return CountOutcome(0, "prefix-contains-pattern")
    if not c:
        return CountOutcome(catalan(n), "catalan-total")
    if n < 3:
        return CountOutcome(oracle_count(n, c, q.patterns), "small-n-oracle")
    if key in _SINGLE:
        return _SINGLE[key](n, c)
    out = _SINGLE[_COMPLEMENT[key]](n, _complement_prefix(n, c))
    return CountOutcome(out.count, out.rule, True)


# ------------------------------------------------------------------ pairs


def _pair_132_312(n, c):
    if _is_consecutive(c):
        return CountOutcome(binomial(n - len(c), min(c) - 1), "pair-132-312-consecutive")
    return CountOutcome(0, "pair-132-312-zero")


def _pair_213_231(n, c):
    t = len(c)
    for s in range(t + 1):
        low = tuple(v for v in c if v <= t - s)
        high = tuple(v for v in c if v >= n - s + 1)
        if (
            len(low) + len(high) == t
            and low == tuple(range(1, t - s + 1))
            and high == tuple(range(n, n - s, -1))
        ):
            return CountOutcome(2 ** (n - t - 1), "pair-213-231-shuffle")
    return CountOutcome(0, "pair-213-231-zero")


def _pair_123_321(n, c):
    if n >= 5:
        return CountOutcome(0, "pair-123-321-erdos-szekeres")
    return CountOutcome(oracle_count(n, c, ("123", "321")), "pair-123-321-oracle")


def _pair_123_132(n, c):
    t = len(c)
    alpha = max(set(range(1, n + 1)) - set(c))
    top = n - alpha
    if set(c[:top]) != set(range(alpha + 1, n + 1)):
        return CountOutcome(0, "pair-123-132-zero-top")
    tail = c[top:]
    expected = tuple(range(alpha - 1, n - t - 1, -1))
    if tail == expected:
        return CountOutcome(2 ** (n - t - 1), "pair-123-132-power")
    if set(tail) != set(expected):
        return CountOutcome(0, "pair-123-132-case-2")
    return CountOutcome(0, "pair-123-132-case-3")


def _pair_123_213(n, c):
    free = set(range(1, n + 1)) - set(c)
    alpha = max(free)
    if any(max(a, b) < alpha for a, b in _pairs(c)):
        return CountOutcome(0, "pair-123-213-zero")
    x = min(c)
    if x == 1:
        return CountOutcome(1, "pair-123-213-case-1")
    return CountOutcome(2 ** (x - 2), "pair-123-213-case-2")


def _pair_132_213(n, c):
    free = set(range(1, n + 1)) - set(c)
    x = min(c)
    for ci in c:
        if any(x < a < ci for a in free) and any(b > ci for b in free):
            return CountOutcome(0, "pair-132-213-zero-1")
    for ci, cj in _pairs(c):
        if any(ci < a < cj or cj < ci < a for a in free):
            return CountOutcome(0, "pair-132-213-zero-2")
    return CountOutcome(2 ** max(0, x - 2), "pair-132-213-power")


def _pair_132_231(n, c):
    free = set(range(1, n + 1)) - set(c)
    for ci, cj in _ascents(c):
        if any(ci < a < cj or a < ci for a in free):
            return CountOutcome(0, "pair-132-231-zero")
    return CountOutcome(2 ** max(0, min(c) - 2), "pair-132-231-power")


def _pair_123_312(n, c):
    t = len(c)
    free = set(range(1, n + 1)) - set(c)
    x = min(c)
    rising_below_free = any(cj < a for _, cj in _ascents(c) for a in free)
    if _is_consecutive(c):
        if rising_below_free:
            return CountOutcome(0, "pair-123-312-case-1")
        if x == n - t + 1:
            return CountOutcome(1, "pair-123-312-case-2")
        return CountOutcome(x, "pair-123-312-case-3")
    if rising_below_free:
        return CountOutcome(0, "pair-123-312-case-4")
    if any(cj < a < ci for ci, cj in _pairs(c) for a in free):
        return CountOutcome(0, "pair-123-312-case-5")
    return CountOutcome(1, "pair-123-312-case-6")


def _pair_123_231(n, c):
    t = len(c)
    if c == tuple(range(n, n - t, -1)):
        return CountOutcome(binomial(n - t, 2) + 1, "pair-123-231-decreasing-top")
    if set(c) == set(range(n - t + 1, n + 1)):
        return CountOutcome(0, "pair-123-231-case-1")
    free = set(range(1, n + 1)) - set(c)
    for ci, cj in _ascents(c):
        if any(cj < a or a < ci for a in free):
            return CountOutcome(0, "pair-123-231-case-2")
    # c_i with free a < c_i < b, a above the prefix minimum: the forced tail
    # puts b before a, giving the 231 c_i b a
    x = min(c)
    for ci in c:
        if any(x < a < ci for a in free) and any(b > ci for b in free):
            return CountOutcome(0, "pair-123-231-case-3-straddle")
    return CountOutcome(1, "pair-123-231-case-3")


_PAIR = {
    frozenset({"132", "312"}): _pair_132_312,
    frozenset({"213", "231"}): _pair_213_231,
    frozenset({"123", "321"}): _pair_123_321,
    frozenset({"123", "132"}): _pair_123_132,
    frozenset({"123", "213"}): _pair_123_213,
    frozenset({"132", "213"}): _pair_132_213,
    frozenset({"132", "231"}): _pair_132_231,
    frozenset({"123", "312"}): _pair_123_312,
    frozenset({"123", "231"}): _pair_123_231,
}
assert set(_PAIR) == _BASE_PAIRS

_POWER_PAIRS = {
    frozenset(p)
    for p in (
        ("123", "132"), ("321", "312"), ("123", "213"), ("321", "231"), ("132", "213"),
        ("312", "231"), ("132", "231"), ("312", "213"), ("132", "312"), ("213", "231"),
    )
}


def pair_123_321_total(n: int) -> int:
    """``|S_n(123, 321)|`` from its piecewise closed form."""
    if n >= 5:
        return 0
    return n if n <= 2 else 4


def _pair_total(n, key) -> CountOutcome:
    if key == frozenset({"123", "321"}):
        return _pair_123_321(n, ())
    if key in _POWER_PAIRS:
        return CountOutcome(2 ** (n - 1), "pair-total-power")
    return CountOutcome(binomial(n, 2) + 1, "pair-total-binomial")


def _pair_key(pair) -> frozenset[str]:
    pats = [as_pattern(p) for p in pair]
    keys = frozenset(str(p) for p in pats)
    if len(pats) != 2 or len(keys) != 2 or not all(
        p.is_classical and str(p) in S3 for p in pats
    ):
        raise PermutationError(f"expected two distinct classical patterns of length 3, got {pair}")
    return keys


def count_pair_length3(n: int, prefix, pair) -> CountOutcome:
    """``|S_{n,prefix}(p, q)|`` for distinct classical ``p, q`` of length three."""
    key = _pair_key(pair)
    q = _query(n, prefix, tuple(sorted(key)))
    c = q.prefix.entries
    if not avoids_all(c, q.patterns):
        return CountOutcome(0, "prefix-contains-pattern")
    if not c:
        return _pair_total(n, key)
    if n < 3:
        return CountOutcome(oracle_count(n, c, q.patterns), "small-n-oracle")
    if key in _PAIR:
        return _PAIR[key](n, c)
    flipped = frozenset(_COMPLEMENT[p] for p in key)
    out = _PAIR[flipped](n, _complement_prefix(n, c))
    return CountOutcome(out.count, out.rule, True)


# --------------------------------------------------------- 3412 and 3421


def count_pair_3412_3421(n: int, prefix) -> CountOutcome:
    """``|S_{n,prefix}(3412, 3421)|`` through large Schröder numbers."""
    q = _query(n, prefix, ("3412", "3421"))
    c = q.prefix.entries
    t = len(c)
    if not avoids_all(c, q.patterns):
        return CountOutcome(0, "prefix-contains-pattern")
    if t == 0:
        return CountOutcome(schroder(n - 1), "schroder-total")
    if t == 1:
        r = c[0]
        if r in (1, 2, n):
            return CountOutcome(schroder(n - 2), "schroder-leading-edge")
        return CountOutcome(schroder(r - 2) * schroder(n - r), "schroder-leading-split")

    info = analyze_prefix(n, c)
    taken = set(c)
    if info.U and sum(1 for v in range(1, max(info.U) + 1) if v not in taken) >= 1:
        return CountOutcome(0, "schroder-zero-U")
    if info.V and sum(1 for v in range(1, max(info.V) + 1) if v not in taken) >= 2:
        return CountOutcome(0, "schroder-zero-V")
    j = info.j
    count = schroder(info.gaps[j - 1] - 1)
    for g in info.gaps[j:]:
        count *= schroder(g)
    return CountOutcome(count, "schroder-block-product")


# ------------------------------------------------------------- dispatcher


def count(n: int, prefix, patterns) -> CountOutcome:
    """Closed form when one applies to ``patterns``, else the exhaustive count."""
    pats = tuple(as_pattern(p) for p in patterns)
    keys = frozenset(str(p) for p in pats)
    classical = all(p.is_classical for p in pats)
    if classical and keys <= set(S3):
        if len(keys) == 1:
            return count_single_length3(n, prefix, pats[0])
        if len(keys) == 2:
            return count_pair_length3(n, prefix, tuple(keys))
    if classical and keys == SCHRODER_PAIR:
        return count_pair_3412_3421(n, prefix)
    return CountOutcome(oracle_count(n, prefix, pats), "oracle")
