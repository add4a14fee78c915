"""Pure-Python enumeration kernel; the reference twin of ``_kernel.pyx``.

Patterns arrive pre-packed as ``(values, adjacency)`` pairs where ``values``
is the pattern as a tuple over ``1..k`` and ``adjacency[a]`` says pattern
positions ``a`` and ``a + 1`` (0-based) must be neighbours in the host.
"""

from __future__ import annotations

from itertools import permutations


def ends_at(w, m, p, adj) -> bool:
    """Is there an occurrence of ``p`` in ``w[:m + 1]`` whose last index is ``m``?"""
    k = len(p)
    if m < k - 1:
        return False
    idx = [0] * k
    idx[k - 1] = m

    def back(a):
        if a < 0:
            return True
        hi = idx[a + 1] - 1
        lo = hi if adj[a] else a
        pa = p[a]
        for i in range(hi, lo - 1, -1):
            v = w[i]
            for b in range(a + 1, k):
                if (v < w[idx[b]]) != (pa < p[b]):
                    break
            else:
                idx[a] = i
                if back(a - 1):
                    return True
        return False

    return back(k - 2)


def _contains(w, patterns) -> bool:
    return any(ends_at(w, m, p, adj) for p, adj in patterns for m in range(len(w)))


def count_completions(n, prefix, patterns, collect=False, cap=0, prune=True):
    """Count permutations of ``[n]`` that start with ``prefix`` and avoid all
    ``patterns``; return ``(count, witnesses)``.

    Witnesses (at most ``cap``) come out in lexicographic order. With
    ``prune`` off every full word is tested from scratch.
    """
    prefix = list(prefix)
    patterns = [(tuple(p), tuple(adj)) for p, adj in patterns]
    free = [v for v in range(1, n + 1) if v not in set(prefix)]
    witnesses = []

    if not prune:
        count = 0
        for tail in permutations(free):
            w = prefix + list(tail)
            if not _contains(w, patterns):
                count += 1
                if collect and len(witnesses) < cap:
                    witnesses.append(tuple(w))
        return count, witnesses

    word = []
    for v in prefix:
        word.append(v)
        m = len(word) - 1
        if any(ends_at(word, m, p, adj) for p, adj in patterns):
            return 0, witnesses

    used = [False] * (n + 1)
    for v in prefix:
        used[v] = True

    def dfs(pos):
        if pos == n:
            if collect and len(witnesses) < cap:
                witnesses.append(tuple(word))
            return 1
        total = 0
        word.append(0)
        for v in range(1, n + 1):
            if used[v]:
                continue
            word[pos] = v
            if any(ends_at(word, pos, p, adj) for p, adj in patterns):
                continue
            used[v] = True
            total += dfs(pos + 1)
            used[v] = False
        word.pop()
        return total

    return dfs(len(prefix)), witnesses
