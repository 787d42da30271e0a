"""
The polynomials b_lambda(q) = sum of c_q(T) over standard tableaux T of
shape lambda, computed three ways, plus two-row and Touchard-Riordan
closed forms and the generalized Catalan triangle.
"""
from __future__ import annotations

import os
from math import comb
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .partitions import (Partition, conjugate, format_partition, parse_partition,
                         partitions_up_to, removable_cells)
from .poly import ONE, ONE_MINUS_Q, ZERO, Polynomial, poly_sum, q_int
from .setpart import interlacing_number, partitions_of_shape
from .tableaux import c_weight, generate_tableaux, standard_tableaux

METHODS = ("recursion", "tableau_sum", "setpartition_sum")

CACHE_ENV = "INTERLACING_CACHE"


class BLambdaCache:
    """
    Memo table for the removable-cell recursion, keyed by partition.

    On disk: one ``parts:coeffs`` line per entry, ascending coefficients,
    with ``-`` standing for the empty partition.
    """

    def __init__(self, table: dict[Partition, Polynomial] | None = None):
        self.table: dict[Partition, Polynomial] = {Partition(): ONE}
        if table:
            self.table.update(table)

    def __contains__(self, lam):
        return Partition(lam) in self.table

    def __len__(self):
        return len(self.table)

    def get(self, lam) -> Polynomial | None:
        return self.table.get(Partition(lam))

    def to_text(self) -> str:
        lines = []
        for lam in sorted(self.table, key=lambda p: (p.size, [-x for x in p])):
            key = format_partition(lam) or "-"
            coeffs = ",".join(str(c) for c in self.table[lam].coeffs)
            lines.append(f"{key}:{coeffs}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> BLambdaCache:
        table = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            key, sep, coeffs = line.partition(":")
            if not sep:
                raise ValueError(f"cache line {lineno}: missing ':'")
            lam = parse_partition(key)
            table[lam] = Polynomial(int(c) for c in coeffs.split(",") if c)
        return cls(table)

    def dump(self, path) -> None:
        Path(path).write_text(self.to_text(), encoding="utf-8")

    @classmethod
    def load(cls, path) -> BLambdaCache:
        return cls.from_text(Path(path).read_text(encoding="utf-8"))

    @classmethod
    def load_or_new(cls, path=None) -> BLambdaCache:
        path = path or os.environ.get(CACHE_ENV)
        if path and Path(path).exists():
            return cls.load(path)
        return cls()


def recursion_terms(lam: Sequence[int]) -> list[tuple[Polynomial, Partition]]:
    """
    The pairs ([mu_{j-1} - (i-1)]_q, lambda minus cell (i, j)) over the
    removable cells; the factor is 1 when the cell is in the first column.
    """
    lam = Partition(lam)
    mu = conjugate(lam)
    terms = []
    for i, j in removable_cells(lam):
        factor = ONE if j == 1 else q_int(mu[j - 2] - (i - 1))
        terms.append((factor, lam.remove_cell(i)))
    return terms


def _b_recursive(lam: Partition, cache: BLambdaCache) -> Polynomial:
    hit = cache.table.get(lam)
    if hit is not None:
        return hit
    value = poly_sum(factor * _b_recursive(smaller, cache)
                     for factor, smaller in recursion_terms(lam))
    cache.table[lam] = value
    return value


def b_lambda(lam: Sequence[int], method: str = "recursion",
             cache: BLambdaCache | None = None) -> Polynomial:
    """
    b_lambda(q).

    >>> b_lambda((3, 3, 1))
    Polynomial('q^4 + 5*q^3 + 15*q^2 + 28*q + 21')
    """
    lam = Partition(lam)
    if method == "recursion":
        if cache is None:
            cache = _default_cache
        return _b_recursive(lam, cache)
    if method == "tableau_sum":
        return poly_sum(c_weight(t)[1] for t in standard_tableaux(lam))
    if method == "setpartition_sum":
        counts: dict[int, int] = {}
        for a in partitions_of_shape(range(1, lam.size + 1), lam):
            v = interlacing_number(a)
            counts[v] = counts.get(v, 0) + 1
        if not counts:
            return ZERO
        return Polynomial(counts.get(k, 0) for k in range(max(counts) + 1))
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


_default_cache = BLambdaCache()


def b_lambda_n(lam: Sequence[int], n: int) -> Polynomial:
    """Sum of c_q(T) over tableaux of shape lambda with support inside [n]."""
    return poly_sum(c_weight(t)[1] for t in generate_tableaux(lam, n=n))


def warm_cache(n_max: int, cache: BLambdaCache) -> BLambdaCache:
    for lam in partitions_up_to(n_max):
        _b_recursive(lam, cache)
    return cache


def f_two_row(r: int, s: int) -> int:
    """Number of SYT of shape (r, s), by the ballot formula."""
    if s < 0 or r < s:
        return 0
    return (r + 1 - s) * comb(r + s + 1, s) // (r + s + 1)


def b_two_row(r: int, s: int) -> Polynomial:
    """Closed form for b_(r,s) as a sum of two-row tableau counts."""
    if s < 0 or r < s:
        raise ValueError(f"b_two_row needs r >= s >= 0, got ({r}, {s})")
    if r == s:
        if s == 0:
            return ONE
        return Polynomial(f_two_row(r + i, s - 1 - i) for i in range(s))
    return Polynomial(f_two_row(r + i, s - i) for i in range(s + 1))


def touchard_riordan_rhs(m: int) -> Polynomial:
    """sum_i (-1)^i [C(2m, m-i) - C(2m, m-i-1)] q^(i(i+1)/2)."""
    if m < 0:
        raise ValueError("m must be nonnegative")

    def c(k):
        return comb(2 * m, k) if k >= 0 else 0

    coeffs = [0] * (m * (m + 1) // 2 + 1)
    for i in range(m + 1):
        coeffs[i * (i + 1) // 2] += (-1) ** i * (c(m - i) - c(m - i - 1))
    return Polynomial(coeffs)


def touchard_lhs(m: int, cache: BLambdaCache | None = None) -> Polynomial:
    """b_(2^m) * (1 - q)^m."""
    return b_lambda((2,) * m, cache=cache) * ONE_MINUS_Q ** m


def catalan_triangle(b_seq: Callable[[int], Polynomial], lambda_seq: Callable[[int], Polynomial],
                     n_max: int) -> list[list[Polynomial]]:
    """
    a[n][k] for 0 <= k <= n <= n_max, from
    a[n][k] = a[n-1][k-1] + b_k a[n-1][k] + lambda_{k+1} a[n-1][k+1].
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    rows = [[ONE]]
    for n in range(1, n_max + 1):
        prev = rows[-1]

        def at(k):
            return prev[k] if 0 <= k < len(prev) else ZERO

        row = []
        for k in range(n + 1):
            entry = at(k - 1) + b_seq(k) * at(k) + lambda_seq(k + 1) * at(k + 1)
            row.append(entry)
        rows.append(row)
    return rows


def q_hermite_triangle(n_max: int) -> list[list[Polynomial]]:
    return catalan_triangle(lambda k: ZERO, lambda k: q_int(k), n_max)


def hermite_shape(n: int, k: int) -> Partition:
    """(2^((n-k)/2), 1^k) for n + k even."""
    if (n - k) % 2 or k > n:
        raise ValueError(f"need n >= k with n + k even, got ({n}, {k})")
    return Partition((2,) * ((n - k) // 2) + (1,) * k)


def specializations(lam: Sequence[int], cache: BLambdaCache | None = None) -> dict[str, int]:
    b = b_lambda(lam, cache=cache)
    return {"q=1": b(1), "q=0": b(0), "q=-1": b(-1)}


def all_b(partitions: Iterable[Sequence[int]], method: str = "recursion",
          cache: BLambdaCache | None = None) -> dict[Partition, Polynomial]:
    return {Partition(lam): b_lambda(lam, method, cache) for lam in partitions}
