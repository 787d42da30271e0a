"""
Brute-force oracle over prime fields.

Enumerates every subspace of F_p^n through its reduced row echelon basis,
measures its profile under a diagonal operator with distinct entries, and
compares the tallies with the closed forms in :mod:`interlacing.profiles`.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .blambda import BLambdaCache
from .partitions import Partition, format_partition, partitions_up_to
from .poly import q_binomial
from .profiles import (anti_invariant_count, pi, pi_pivots, pivot_count, r_locus_count, sigma,
                       sigma_pivots, splitting_count)

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 7


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(f"enumeration needs {required} subspaces, over the budget of {budget}; "
                         f"raise the budget to proceed")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")


@dataclass(frozen=True)
class FpMatrix:
    p: int
    rows: tuple[tuple[int, ...], ...]
    ncols: int = -1

    def __post_init__(self):
        rows = tuple(tuple(int(x) % self.p for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.ncols < 0:
            object.__setattr__(self, "ncols", len(rows[0]) if rows else 0)
        if any(len(r) != self.ncols for r in rows):
            raise ValueError("ragged matrix")


def rref(m: FpMatrix) -> tuple[FpMatrix, int]:
    """Reduced row echelon form over F_p (zero rows last) and the rank."""
    p = m.p
    _require_prime(p)
    a = [list(r) for r in m.rows]
    nrows, ncols = len(a), m.ncols
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = pow(a[rank][col], p - 2, p)
        a[rank] = [x * inv % p for x in a[rank]]
        for r in range(nrows):
            if r != rank and a[r][col]:
                f = a[r][col]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[rank])]
        rank += 1
        if rank == nrows:
            break
    return FpMatrix(p, tuple(tuple(r) for r in a), ncols), rank


def pivot_columns(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """1-based leading positions of the nonzero rows of an echelon matrix."""
    return tuple(next(j for j, x in enumerate(r) if x) + 1 for r in rows if any(r))


@dataclass(frozen=True)
class Subspace:
    p: int
    n: int
    basis: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def span(cls, p: int, n: int, vectors: Sequence[Sequence[int]]) -> Subspace:
        if not vectors:
            return cls(p, n, (), ())
        reduced, rank = rref(FpMatrix(p, tuple(tuple(v) for v in vectors), n))
        basis = reduced.rows[:rank]
        return cls(p, n, basis, pivot_columns(basis))


def subspace_count(p: int, n: int, m: int) -> int:
    return q_binomial(n, m)(p)


def galois_number(p: int, n: int) -> int:
    return sum(subspace_count(p, n, m) for m in range(n + 1))


def _check_budget(required: int, budget: int | None) -> None:
    budget = DEFAULT_BUDGET if budget is None else budget
    if required > budget:
        raise BudgetExceeded(required, budget)


def subspaces_with_pivots(p: int, n: int, pivots: Sequence[int]) -> Iterator[Subspace]:
    """All subspaces whose RREF basis has the given (1-based) pivot columns."""
    pivots = tuple(pivots)
    pset = set(pivots)
    free = [(i, j) for i, c in enumerate(pivots) for j in range(c, n) if (j + 1) not in pset]
    for values in itertools.product(range(p), repeat=len(free)):
        rows = [[0] * n for _ in pivots]
        for i, c in enumerate(pivots):
            rows[i][c - 1] = 1
        for (i, j), v in zip(free, values):
            rows[i][j] = v
        yield Subspace(p, n, tuple(tuple(r) for r in rows), pivots)


def enumerate_subspaces(p: int, n: int, m: int, budget: int | None = None) -> Iterator[Subspace]:
    """Every m-dimensional subspace of F_p^n exactly once."""
    _require_prime(p)
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    _check_budget(subspace_count(p, n, m), budget)
    for c in combinations(range(1, n + 1), m):
        yield from subspaces_with_pivots(p, n, c)


def _reduce_into(echelon: dict[int, list[int]], v: list[int], p: int) -> bool:
    """Reduce v against the echelon rows (keyed by pivot); add it if independent."""
    v = list(v)
    for col, row in echelon.items():
        if v[col]:
            f = v[col]
            v = [(x - f * y) % p for x, y in zip(v, row)]
    lead = next((j for j, x in enumerate(v) if x), None)
    if lead is None:
        return False
    inv = pow(v[lead], p - 2, p)
    v = [x * inv % p for x in v]
    for col, row in echelon.items():
        if row[lead]:
            f = row[lead]
            echelon[col] = [(x - f * y) % p for x, y in zip(row, v)]
    echelon[lead] = v
    return True


def delta_profile(w: Subspace, diag: Sequence[int]) -> tuple[Partition, list[Partition], int]:
    """
    Profile of W under Delta = diag(...): the increments of
    dim(W + Delta W + ... + Delta^(j-1) W), computed until two consecutive
    dimensions agree.  Returns (profile, nonempty prefixes, r(W)).
    """
    p, n = w.p, w.n
    if len(diag) != n:
        raise ValueError(f"diagonal has {len(diag)} entries, expected {n}")
    diag = [x % p for x in diag]
    if len(set(diag)) != n:
        raise ValueError("diagonal entries must be distinct in F_p (this needs p >= n)")
    echelon: dict[int, list[int]] = {}
    increments = []
    layer = [list(b) for b in w.basis]
    while layer:
        gained = sum(1 for v in layer if _reduce_into(echelon, v, p))
        if gained == 0:
            break
        increments.append(gained)
        layer = [[x * d % p for x, d in zip(v, diag)] for v in layer]
    profile = Partition(increments)
    prefixes = [Partition(increments[:k]) for k in range(1, len(increments) + 1)]
    return profile, prefixes, sum(increments)


@dataclass
class CensusReport:
    p: int
    n: int
    diag: tuple[int, ...]
    total: int = 0
    dims: Counter = field(default_factory=Counter)
    profiles: Counter = field(default_factory=Counter)
    pivot_profiles: Counter = field(default_factory=Counter)
    partial_profiles: Counter = field(default_factory=Counter)
    pivot_partial_profiles: Counter = field(default_factory=Counter)
    r_locus: Counter = field(default_factory=Counter)
    pivots: Counter = field(default_factory=Counter)
    checks: int = 0
    mismatches: list = field(default_factory=list)

    def add(self, w: Subspace, diag: Sequence[int]) -> None:
        profile, prefixes, r = delta_profile(w, diag)
        self.total += 1
        self.dims[w.dim] += 1
        self.profiles[profile] += 1
        self.pivot_profiles[w.pivots, profile] += 1
        for mu in prefixes:
            self.partial_profiles[mu] += 1
            self.pivot_partial_profiles[w.pivots, mu] += 1
        self.r_locus[w.dim, r] += 1
        self.pivots[w.pivots] += 1

    def merge(self, other: CensusReport) -> None:
        self.total += other.total
        for name in ("dims", "profiles", "pivot_profiles", "partial_profiles",
                     "pivot_partial_profiles", "r_locus", "pivots"):
            getattr(self, name).update(getattr(other, name))

    def to_json_obj(self) -> dict:
        def pkey(mu):
            return format_partition(mu)

        def ckey(c):
            return format_partition(c)

        return {
            "p": self.p,
            "n": self.n,
            "diag": list(self.diag),
            "total": self.total,
            "dims": {str(m): self.dims[m] for m in sorted(self.dims)},
            "profiles": {pkey(mu): self.profiles[mu] for mu in _sorted_partitions(self.profiles)},
            "partial_profiles": {pkey(mu): self.partial_profiles[mu]
                                 for mu in _sorted_partitions(self.partial_profiles)},
            "pivots": {ckey(c): self.pivots[c] for c in sorted(self.pivots, key=lambda c: (len(c), c))},
            "r_locus": {f"{m},{r}": self.r_locus[m, r] for m, r in sorted(self.r_locus)},
            "checks": self.checks,
            "mismatches": self.mismatches,
        }

    def csv_rows(self) -> list[tuple[str, str, int, int]]:
        """(kind, key, observed, expected) for the profile table."""
        out = []
        for mu in partitions_up_to(self.n):
            exp = sigma(self.n, mu)(self.p)
            out.append(("profile", format_partition(mu), self.profiles.get(mu, 0), exp))
        return out


def _sorted_partitions(counter) -> list[Partition]:
    return sorted(counter, key=lambda mu: (sum(mu), [-x for x in mu]))


def _census_pivots(args) -> CensusReport:
    p, n, diag, c = args
    part = CensusReport(p, n, diag)
    for w in subspaces_with_pivots(p, n, c):
        part.add(w, diag)
    return part


def census(p: int, n: int, diag: Sequence[int] | None = None, compare: bool = True,
           budget: int | None = None, cache: BLambdaCache | None = None,
           workers: int = 1) -> CensusReport:
    """
    Tabulate every subspace of F_p^n and (optionally) check all closed forms.
    With workers > 1 the pivot sets are spread over processes and the
    partial tallies are summed.
    """
    _require_prime(p)
    if p < n:
        raise ValueError(f"need p >= n for {n} distinct diagonal entries, got p={p}")
    diag = tuple(range(n)) if diag is None else tuple(x % p for x in diag)
    _check_budget(galois_number(p, n), budget)
    report = CensusReport(p, n, diag)
    jobs = [(p, n, diag, c) for m in range(n + 1) for c in combinations(range(1, n + 1), m)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_census_pivots, jobs))
    else:
        parts = map(_census_pivots, jobs)
    for part in parts:
        report.merge(part)
    if compare:
        compare_census(report, cache)
    return report


def compare_census(report: CensusReport, cache: BLambdaCache | None = None) -> None:
    p, n = report.p, report.n

    def check(kind, key, observed, expected_poly):
        expected = expected_poly(p)
        report.checks += 1
        if observed != expected:
            report.mismatches.append({"kind": kind, "key": key,
                                      "observed": observed, "expected": expected})
            log.warning("census mismatch %s %s: observed %d expected %d",
                        kind, key, observed, expected)

    for m in range(n + 1):
        check("dimension", str(m), report.dims.get(m, 0), q_binomial(n, m))
        for c in combinations(range(1, n + 1), m):
            check("pivots", format_partition(c), report.pivots.get(c, 0), pivot_count(n, c))
    for mu in partitions_up_to(n):
        key = format_partition(mu)
        check("profile", key, report.profiles.get(mu, 0), sigma(n, mu, cache))
        m = mu[0] if mu else 0
        for c in combinations(range(1, n + 1), m):
            ckey = f"{format_partition(c)}:{key}"
            check("pivots+profile", ckey, report.pivot_profiles.get((c, mu), 0),
                  sigma_pivots(n, c, mu))
            if mu:
                check("pivots+partial", ckey, report.pivot_partial_profiles.get((c, mu), 0),
                      pi_pivots(n, c, mu))
        if mu:
            check("partial", key, report.partial_profiles.get(mu, 0), pi(n, mu))
    for r in range(n + 1):
        for m in range(r + 1):
            check("r-locus", f"{m},{r}", report.r_locus.get((m, r), 0), r_locus_count(n, m, r))
    for m in range(1, n + 1):
        if n % m == 0:
            d = n // m
            check("splitting", f"{m},{d}", report.profiles.get(Partition((m,) * d), 0),
                  splitting_count(m, d, cache))
        for l in range(n):
            mu = Partition((m,) * (l + 1))
            check("anti-invariant", f"{m},{l}", report.partial_profiles.get(mu, 0),
                  anti_invariant_count(n, m, l))
