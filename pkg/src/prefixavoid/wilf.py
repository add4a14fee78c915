"""r-Wilf classes of length-3 patterns and the leading-term tables.

Classes are read off from count vectors over a finite window of ``n``, so a
classification here is evidence, never a proof.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Pattern, as_pattern
from .formulas import S3, count_single_length3
from .oracle import oracle_count
from .sequences import bell, catalan

CLASSICAL_S3 = S3
VINCULAR_S3 = (
    "2-13", "2-31", "13-2", "31-2", "3-21", "3-12",
    "1-23", "1-32", "12-3", "21-3", "23-1", "32-1",
)


@dataclass(frozen=True)
class WilfClassification:
    r: int
    n_range: tuple[int, int]
    patterns: tuple[Pattern, ...]
    classes: tuple[tuple[Pattern, ...], ...]
    evidence: dict[str, tuple[int, ...]]

    def to_dict(self) -> dict:
        lo, hi = self.n_range
        return {
            "r": self.r,
            "n_range": [lo, hi],
            "basis": f"empirical over {lo} <= n <= {hi}",
            "classes": [[str(p) for p in cls] for cls in self.classes],
            "evidence": {k: [str(v) for v in vec] for k, vec in self.evidence.items()},
        }


def leading_count(n: int, r: int, pattern, jobs: int | None = None) -> int:
    """``|S_{n,r}(pattern)|``: closed form for classical length-3, oracle otherwise."""
    pat = as_pattern(pattern)
    if n == 1:
        return oracle_count(1, (), (pat,))
    if pat.is_classical and str(pat) in S3:
        return count_single_length3(n, (r,), pat).count
    return oracle_count(n, (r,), (pat,), jobs=jobs)


def classify_r_wilf(r: int, patterns, n_max: int, jobs: int | None = None) -> WilfClassification:
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if n_max < r:
        raise ValueError(f"n_max={n_max} must be at least r={r}")
    pats = tuple(as_pattern(p) for p in patterns)
    evidence = {
        str(p): tuple(leading_count(n, r, p, jobs) for n in range(r, n_max + 1)) for p in pats
    }
    groups: dict[tuple[int, ...], list[Pattern]] = {}
    for p in pats:
        groups.setdefault(evidence[str(p)], []).append(p)
    classes = tuple(tuple(g) for g in groups.values())
    return WilfClassification(r, (r, n_max), pats, classes, evidence)


def table2(n: int) -> dict[tuple[int, str], int]:
    """Closed forms of ``|S_{n,r}(p)|`` for ``r`` in ``{1, 2, n-1, n}``."""
    if n < 2:
        raise ValueError(f"table2 needs n >= 2, got {n}")
    c1, c2 = catalan(n - 1), catalan(n - 2)
    rows = {
        1: dict(zip(S3, (1, 1, c1, c1, c1, c1))),
        2: dict(zip(S3, (n - 1, n - 1, c2, c2, c1, c1))),
        n - 1: dict(zip(S3, (c1, c1, c2, c2, n - 1, n - 1))),
        n: dict(zip(S3, (c1, c1, c1, c1, 1, 1))),
    }
    return {(r, p): v for r, row in rows.items() for p, v in row.items()}


def table3(r: int) -> dict[tuple[str, int], int | None]:
    """Leading-term counts of the twelve vincular patterns at ``n = r, r+1, r+2``.

    Cells without a closed form are ``None``.
    """
    if r < 3:
        raise ValueError(f"table3 needs r >= 3, got {r}")
    rows = {
        "2-13": (catalan(r - 1), catalan(r - 1), None),
        "2-31": (catalan(r - 1), catalan(r - 1), None),
        "13-2": (catalan(r - 1), catalan(r), None),
        "3-21": (1, 2 ** (r - 1), None),
        "3-12": (1, 2 ** (r - 1), None),
        "31-2": (1, r, None),
        "1-23": (bell(r - 1), bell(r), bell(r + 1) - bell(r - 1)),
        "1-32": (bell(r - 1), bell(r), bell(r + 1) - bell(r - 1)),
        "12-3": (bell(r - 1), bell(r), bell(r + 1) - bell(r)),
        "21-3": (bell(r - 1), bell(r - 1), None),
        "23-1": (bell(r - 1), bell(r) - bell(r - 1), None),
        "32-1": (bell(r - 2), None, None),
    }
    return {(p, r + d): v for p, vals in rows.items() for d, v in enumerate(vals)}
