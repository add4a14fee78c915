"""Exact integer sequences: binomials, Catalan, Bell, large Schröder, ballot
numbers and the descent-prefix counts of 123-avoiders.

Bell and Schröder numbers are built from their recurrences into growable
memo tables guarded by a lock, so concurrent callers see pure functions.
"""

from __future__ import annotations

import threading
from math import comb

__all__ = [
    "binomial",
    "catalan",
    "bell",
    "schroder",
    "ballot",
    "simion_schmidt_a",
    "ballot_descent_sum",
    "vandermonde_sum",
    "SEQUENCES",
]


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, and 0 whenever ``k`` falls outside ``[0, n]``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


class _Memo:
    def __init__(self, seed, step):
        self._table = list(seed)
        self._step = step
        self._lock = threading.Lock()

    def __call__(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"index must be nonnegative, got {n}")
        table = self._table
        if n < len(table):
            return table[n]
        with self._lock:
            while len(table) <= n:
                table.append(self._step(table))
            return table[n]


def _catalan_step(table):
    m = len(table)
    return comb(2 * m, m) // (m + 1)


def _bell_step(table):
    # B_m = sum_k C(m-1, k) B_k
    m = len(table)
    return sum(comb(m - 1, k) * table[k] for k in range(m))


def _schroder_step(table):
    # S_{m} = S_{m-1} + sum_{r=0}^{m-1} S_r S_{m-1-r}
    m = len(table) - 1
    return table[m] + sum(table[r] * table[m - r] for r in range(m + 1))


catalan = _Memo([1], _catalan_step)
catalan.__doc__ = "n-th Catalan number."
bell = _Memo([1], _bell_step)
bell.__doc__ = "n-th Bell number."
schroder = _Memo([1], _schroder_step)
schroder.__doc__ = "n-th large Schröder number."


def ballot(n: int, r: int) -> int:
    """Ballot number ``(n-r+1)/(n+r-1) * C(n+r-1, n)`` for ``1 <= r <= n``."""
    if not 1 <= r <= n:
        raise ValueError(f"ballot(n, r) needs 1 <= r <= n, got n={n}, r={r}")
    num = (n - r + 1) * comb(n + r - 1, n)
    q, rem = divmod(num, n + r - 1)
    assert rem == 0, (n, r)
    return q


def simion_schmidt_a(n: int, i: int) -> int:
    """Number of 123-avoiders of ``[n]`` whose first ascent sits at position ``i``
    (``i = n`` meaning no ascent at all)."""
    if not 1 <= i <= n:
        raise ValueError(f"simion_schmidt_a(n, i) needs 1 <= i <= n, got n={n}, i={i}")
    m = 2 * n - i - 1
    return binomial(m, n - 1) - binomial(m, n)


SEQUENCES = {
    "catalan": catalan,
    "bell": bell,
    "schroder": schroder,
}


def ballot_descent_sum(n: int, r: int) -> int:
    """``sum_{i=1}^{r-1} C(i+n-r, i) * a_{r-1}(i)``; equals ``ballot(n, r)`` for ``r >= 2``."""
    return sum(binomial(i + n - r, i) * simion_schmidt_a(r - 1, i) for i in range(1, r))


def vandermonde_sum(n: int, r: int) -> int:
    """``sum_{i=1}^{r-1} C(i+n-r, i-1) * C(2r-i-3, r-2)``; equals ``C(n+r-2, r-2)``."""
    return sum(binomial(i + n - r, i - 1) * binomial(2 * r - i - 3, r - 2) for i in range(1, r))
