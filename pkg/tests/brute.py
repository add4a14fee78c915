"""Deliberately naive reference code shared by the tests.

Nothing here touches the library's matcher or kernel: occurrences are found
by trying every index subset.
"""

from itertools import combinations, permutations


def std(seq):
    ranks = sorted(seq)
    return tuple(ranks.index(v) + 1 for v in seq)


def brute_contains(word, pattern, adjacency=None):
    word, pattern = tuple(word), tuple(pattern)
    k = len(pattern)
    adjacency = adjacency or (False,) * (k - 1)
    for idx in combinations(range(len(word)), k):
        if any(glued and idx[a + 1] != idx[a] + 1 for a, glued in enumerate(adjacency)):
            continue
        if std([word[i] for i in idx]) == pattern:
            return True
    return False


def parse(text):
    """"1-32" -> ((1, 3, 2), (False, True)); no dash means classical."""
    blocks = text.split("-")
    values, adj = [], []
    for b in blocks:
        if values:
            adj.append(False)
        for i, ch in enumerate(b):
            if i:
                adj.append(True)
            values.append(int(ch))
    if len(blocks) == 1:
        adj = [False] * (len(values) - 1)
    return tuple(values), tuple(adj)


def brute_count(n, prefix, patterns):
    parsed = [parse(p) for p in patterns]
    prefix = tuple(prefix)
    total = 0
    for w in permutations(range(1, n + 1)):
        if w[: len(prefix)] != prefix:
            continue
        if not any(brute_contains(w, p, a) for p, a in parsed):
            total += 1
    return total
