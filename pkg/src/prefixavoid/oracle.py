"""Exhaustive ground truth: walk every completion of a prefix and keep the
ones avoiding all patterns.

Any occurrence inside a partial word survives in every extension of it (for
vincular patterns too, since positions never move), so a branch is cut as
soon as the newest entry closes an occurrence. ``prune=False`` tests full
words only and exists for differential testing.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import kernel
from .core import Permutation, PrefixQuery

DEFAULT_CAP = 1000
JOBS_ENV = "PREFIXAVOID_JOBS"


@dataclass(frozen=True)
class OracleResult:
    count: int
    witnesses: list[Permutation] | None = field(default=None)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _run(args):
    n, prefix, packed, collect, cap, prune = args
    return kernel.count_completions(n, prefix, packed, collect, cap, prune)


def enumerate_avoiders(
    q: PrefixQuery,
    collect: bool = False,
    cap: int | None = None,
    jobs: int | None = None,
    prune: bool = True,
) -> OracleResult:
    """Count (and optionally list) the permutations described by ``q``.

    With ``jobs > 1`` the subtrees under each choice of the first free entry
    are counted in separate processes and summed; the result does not depend
    on ``jobs``. ``cap`` only limits the witness list.
    """
    cap = DEFAULT_CAP if cap is None else cap
    if cap < 1:
        raise ValueError("cap must be positive")
    jobs = default_jobs() if jobs is None else jobs
    packed = kernel.pack(q.patterns)
    prefix = q.prefix.entries

    if jobs <= 1 or q.n - q.t < 2:
        count, wit = kernel.count_completions(q.n, prefix, packed, collect, cap, prune)
    else:
        used = set(prefix)
        tasks = [
            (q.n, prefix + (v,), packed, collect, cap, prune)
            for v in range(1, q.n + 1)
            if v not in used
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run, tasks))
        count = sum(c for c, _ in parts)
        wit = [w for _, ws in parts for w in ws][:cap]
    witnesses = [Permutation(w) for w in wit] if collect else None
    return OracleResult(count, witnesses)


def oracle_count(n: int, prefix=(), patterns=(), **kw) -> int:
    return enumerate_avoiders(PrefixQuery.make(n, prefix, patterns), **kw).count


def leading_term_vector(n: int, patterns, jobs: int | None = None) -> list[int]:
    """``[|S_{n,r}(patterns)| for r in 1..n]``."""
    if n == 1:
        # a single-entry prefix would equal n; the only word is "1"
        return [oracle_count(1, (), patterns)]
    return [oracle_count(n, (r,), patterns, jobs=jobs) for r in range(1, n + 1)]
