"""Formula-versus-oracle sweeps behind ``prefixavoid verify``."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, permutations

from . import formulas, wilf
from .oracle import oracle_count
from .sequences import (
    ballot,
    ballot_descent_sum,
    bell,
    binomial,
    catalan,
    schroder,
    vandermonde_sum,
)

SUITES = ("singles", "pairs", "schroder", "tables", "identities")
PAIRS_S3 = tuple(combinations(formulas.S3, 2))


@dataclass
class Report:
    suite: str
    checks: int = 0
    mismatches: list[str] = field(default_factory=list)
    coverage: Counter = field(default_factory=Counter)
    known_rules: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def check(self, label: str, got, want, rule: str | None = None):
        self.checks += 1
        if rule is not None:
            self.coverage[rule] += 1
        if got != want:
            self.mismatches.append(f"{label}: formula={got} oracle={want}")

    def lines(self) -> list[str]:
        out = [f"suite {self.suite}: {self.checks} checks, {len(self.mismatches)} mismatches"]
        out += [f"  MISMATCH {m}" for m in sorted(self.mismatches)]
        for rule in sorted(set(self.known_rules) | set(self.coverage)):
            out.append(f"  rule {rule}: {self.coverage[rule]}")
        out.append(f"  {'PASS' if self.ok else 'FAIL'}")
        return out


def prefixes(n: int, t_max: int):
    """Every prefix of length ``0..min(t_max, n-1)`` over ``[n]``."""
    for t in range(min(t_max, n - 1) + 1):
        yield from permutations(range(1, n + 1), t)


def _fmt(c) -> str:
    return ",".join(map(str, c)) or "-"


def verify_singles(n_max: int = 8, prefix_max: int = 3, jobs=None) -> Report:
    rep = Report("singles", known_rules=formulas.SINGLE_RULES)
    for n in range(1, n_max + 1):
        for c in prefixes(n, prefix_max):
            for p in formulas.S3:
                out = formulas.count_single_length3(n, c, p)
                want = oracle_count(n, c, (p,), jobs=jobs)
                rep.check(f"n={n} prefix={_fmt(c)} patterns={p}", out.count, want, out.rule)
    return rep


def verify_pairs(n_max: int = 8, prefix_max: int = 3, jobs=None) -> Report:
    rep = Report("pairs", known_rules=formulas.PAIR_RULES)
    for n in range(1, n_max + 1):
        for c in prefixes(n, prefix_max):
            for pair in PAIRS_S3:
                out = formulas.count_pair_length3(n, c, pair)
                want = oracle_count(n, c, pair, jobs=jobs)
                label = f"n={n} prefix={_fmt(c)} patterns={'/'.join(pair)}"
                rep.check(label, out.count, want, out.rule)
                if n >= 5 and set(pair) == {"123", "321"}:
                    rep.check(label + " (erdos-szekeres)", out.count, 0)
        if n <= 4:
            rep.check(
                f"n={n} total 123/321 piecewise",
                formulas.pair_123_321_total(n),
                oracle_count(n, (), ("123", "321")),
            )
    return rep


def verify_schroder(n_max: int = 7, prefix_max: int = 3, jobs=None) -> Report:
    rep = Report("schroder", known_rules=formulas.SCHRODER_RULES)
    pats = ("3412", "3421")
    for n in range(1, n_max + 1):
        rep.check(f"n={n} total", schroder(n - 1), oracle_count(n, (), pats, jobs=jobs))
        for c in prefixes(n, prefix_max):
            out = formulas.count_pair_3412_3421(n, c)
            want = oracle_count(n, c, pats, jobs=jobs)
            rep.check(f"n={n} prefix={_fmt(c)} patterns=3412/3421", out.count, want, out.rule)
    return rep


def verify_tables(n_max: int = 8, jobs=None) -> Report:
    rep = Report("tables")
    for n in range(2, n_max + 1):
        for (r, p), v in wilf.table2(n).items():
            rep.check(f"table2 n={n} r={r} {p}", v, oracle_count(n, (r,), (p,), jobs=jobs))
    for r in range(3, n_max + 1):
        for (p, n), v in wilf.table3(r).items():
            if v is None or n > n_max:
                continue
            rep.check(f"table3 r={r} n={n} {p}", v, oracle_count(n, (r,), (p,), jobs=jobs))
    return rep


def verify_identities() -> Report:
    rep = Report("identities")
    for n in range(2, 31):
        for r in range(2, n + 1):
            rep.check(f"descent sum n={n} r={r}", ballot_descent_sum(n, r), ballot(n, r))
            rep.check(
                f"vandermonde n={n} r={r}", vandermonde_sum(n, r), binomial(n + r - 2, r - 2)
            )
    for n in range(4, 26):
        rep.check(f"catalan<bell n={n}", catalan(n) < bell(n), True)
    for n in range(3, 26):
        rep.check(f"bell growth n={n}", bell(n) > 2 * bell(n - 1), True)
    for n in range(1, 21):
        rep.check(
            f"catalan recurrence n={n}",
            sum(catalan(n - r) * catalan(r - 1) for r in range(1, n + 1)),
            catalan(n),
        )
    for n in range(2, 13):
        row = sum(formulas.count_pair_3412_3421(n, (r,)).count for r in range(1, n + 1))
        rep.check(f"schroder row sum n={n}", row, schroder(n - 1))
    return rep


def run_suite(name: str, n_max: int | None = None, prefix_max: int = 3, jobs=None) -> Report:
    if name == "singles":
        return verify_singles(n_max or 8, prefix_max, jobs)
    if name == "pairs":
        return verify_pairs(n_max or 8, prefix_max, jobs)
    if name == "schroder":
        return verify_schroder(n_max or 7, prefix_max, jobs)
    if name == "tables":
        return verify_tables(n_max or 8, jobs)
    if name == "identities":
        return verify_identities()
    raise ValueError(f"unknown suite {name!r}")
