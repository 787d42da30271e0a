"""q-Stirling numbers of the second kind and Carlitz's identity."""
from __future__ import annotations

from math import comb

from .blambda import BLambdaCache, b_lambda
from .partitions import enumerate_partitions, rowwise_offset
from .poly import ONE, Q_MINUS_ONE, ZERO, Polynomial, poly_sum, q_binomial, q_int
from .setpart import all_set_partitions, canonical_noninterlacing, interlacing_number, tableau_of
from .tableaux import c_count, c_weight, standard_tableaux

METHODS = ("recurrence", "blambda_sum", "tableau_sum", "setpartition_sum", "noninterlacing_sum")


def s_q_table(n_max: int) -> list[list[Polynomial]]:
    """Rows S_q(n, 0..n) for n <= n_max from the [m]_q recurrence."""
    table = [[ONE]]
    for n in range(1, n_max + 1):
        prev = table[-1]
        row = [ZERO]
        for m in range(1, n + 1):
            above_left = prev[m - 1]
            above = prev[m] if m < len(prev) else ZERO
            row.append(above_left + q_int(m) * above)
        table.append(row)
    return table


def noninterlacing_partitions(n: int, m: int):
    """Partitions of [n] into m blocks with interlacing number 0, one per SYT."""
    for lam in enumerate_partitions(n, exact_length=m):
        for t in standard_tableaux(lam):
            yield canonical_noninterlacing(t)


def s_q(n: int, m: int, method: str = "recurrence", cache: BLambdaCache | None = None) -> Polynomial:
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    if n == 0 or m == 0:
        return ONE if n == m else ZERO
    if m > n:
        return ZERO
    if method == "recurrence":
        return s_q_table(n)[n][m]
    if method == "blambda_sum":
        return poly_sum(b_lambda(lam, cache=cache).shift(rowwise_offset(lam))
                        for lam in enumerate_partitions(n, exact_length=m))
    if method == "tableau_sum":
        return poly_sum(c_weight(t)[1].shift(rowwise_offset(lam))
                        for lam in enumerate_partitions(n, exact_length=m)
                        for t in standard_tableaux(lam))
    if method == "setpartition_sum":
        counts: dict[int, int] = {}
        for a in all_set_partitions(range(1, n + 1)):
            if len(a) != m:
                continue
            e = interlacing_number(a) + rowwise_offset(a.shape)
            counts[e] = counts.get(e, 0) + 1
        return Polynomial(counts.get(k, 0) for k in range(max(counts) + 1))
    if method == "noninterlacing_sum":
        return poly_sum(c_weight(tableau_of(a))[1].shift(rowwise_offset(a.shape))
                        for a in noninterlacing_partitions(n, m))
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def carlitz_rhs(n: int, m: int) -> Polynomial:
    """sum_{r=m}^{n} (q-1)^(r-m) C(n, r) S_q(r, m)."""
    if m < 0 or m > n:
        raise ValueError(f"carlitz_rhs needs 0 <= m <= n, got ({n}, {m})")
    table = s_q_table(n)
    return poly_sum(Q_MINUS_ONE ** (r - m) * comb(n, r) * table[r][m] for r in range(m, n + 1))


def carlitz_holds(n: int, m: int) -> bool:
    return carlitz_rhs(n, m) == q_binomial(n, m)


def classical(n: int) -> tuple[list[int], int]:
    """
    Stirling numbers S(n, 0..n) and the Bell number B_n, as sums of c(T)
    over standard tableaux grouped by number of rows.
    """
    row = [0] * (n + 1)
    if n == 0:
        return [1], 1
    for m in range(1, n + 1):
        row[m] = sum(c_count(t) for lam in enumerate_partitions(n, exact_length=m)
                     for t in standard_tableaux(lam))
    return row, sum(row)
