"""
Closed-form counts of subspaces of F_q^n by profile under a diagonal
operator with n distinct eigenvalues.  Every count is a Polynomial in q;
evaluate at a prime to get the number for that field.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .blambda import BLambdaCache, b_lambda
from .partitions import Partition, conjugate, enumerate_partitions
from .poly import ONE, Q_MINUS_ONE, ZERO, Polynomial, poly_sum
from .qstirling import s_q_table
from .tableaux import Tableau, beta, c_weight, gamma_n, generate_tableaux

METHODS = ("tableau_sum", "recursion")


def prefactor(mu: Sequence[int]) -> Polynomial:
    """(q-1)^(sum_{j>=2} mu_j) * q^(sum_{j>=2} C(mu_j, 2))."""
    tail = list(mu[1:])
    return (Q_MINUS_ONE ** sum(tail)).shift(sum(comb(x, 2) for x in tail))


def pivot_count(n: int, pivots: Sequence[int]) -> Polynomial:
    """q^beta(C, [n] - C): subspaces with the given pivot columns."""
    _check_pivots(n, pivots)
    rest = [x for x in range(1, n + 1) if x not in set(pivots)]
    return Polynomial.monomial(beta(pivots, rest))


def sigma(n: int, mu: Sequence[int], cache: BLambdaCache | None = None) -> Polynomial:
    mu = Partition(mu)
    if mu.size > n:
        return ZERO
    if len(mu) <= 1:
        return Polynomial.constant(comb(n, mu.size))
    return comb(n, mu.size) * prefactor(mu) * b_lambda(conjugate(mu), cache=cache)


@lru_cache(maxsize=None)
def _weights_by_first_column(n: int, shape: Partition, partial: bool) -> dict[tuple[int, ...], Polynomial]:
    """Sum of c_q(T) (times q^gamma_n(T) when partial) over Tab_{in [n]}(shape), by first column."""
    sums: dict[tuple[int, ...], list[Polynomial]] = {}
    if shape.size > n:
        return {}
    for t in generate_tableaux(shape, n=n):
        w = c_weight(t)[1]
        if partial:
            w = w.shift(gamma_n(t, n))
        sums.setdefault(t.first_column(), []).append(w)
    return {c: poly_sum(ws) for c, ws in sums.items()}


def _check_pivots(n: int, pivots: Sequence[int]) -> None:
    if list(pivots) != sorted(set(pivots)) or any(not 1 <= x <= n for x in pivots):
        raise ValueError(f"pivots {tuple(pivots)} must be strictly increasing within [1..{n}]")


def _check_query(n: int, pivots: Sequence[int], mu: Partition) -> None:
    _check_pivots(n, pivots)
    m = mu[0] if mu else 0
    if len(pivots) != m:
        raise ValueError(f"|C| = {len(pivots)} but mu_1 = {m}")


def two_column_tableau(n: int, c: Sequence[int], d: Sequence[int]) -> Tableau | None:
    """
    T(C, D): first column C, second column phi_C(D) where phi_C is the
    order-preserving bijection [n - |C|] -> [n] - C.  None when the rows
    fail to increase.
    """
    cset = set(c)
    complement = [x for x in range(1, n + 1) if x not in cset]
    second = [complement[x - 1] for x in d]
    if any(a >= b for a, b in zip(c, second)):
        return None
    rows = tuple((a, second[i]) if i < len(second) else (a,) for i, a in enumerate(c))
    return Tableau(rows)


def _pivots_recursive(n: int, c: tuple[int, ...], mu: Partition, partial: bool) -> Polynomial:
    if not mu:
        return ONE
    if len(mu) == 1:
        if partial:
            return pivot_count(n, c)
        return ONE
    m1, m2 = mu[0], mu[1]
    rest = Partition(mu[1:])
    terms = []
    for d in combinations(range(1, n - m1 + 1), m2):
        t = two_column_tableau(n, c, d)
        if t is None:
            continue
        terms.append(c_weight(t)[1] * _pivots_recursive(n - m1, d, rest, partial))
    return Polynomial.monomial(comb(m2, 2)) * Q_MINUS_ONE ** m2 * poly_sum(terms)


def sigma_pivots(n: int, pivots: Sequence[int], mu: Sequence[int],
                 method: str = "tableau_sum") -> Polynomial:
    """Subspaces with the given pivots and profile mu."""
    mu = Partition(mu)
    pivots = tuple(pivots)
    _check_query(n, pivots, mu)
    if method == "tableau_sum":
        if not mu:
            return ONE
        weights = _weights_by_first_column(n, conjugate(mu), False)
        return prefactor(mu) * weights.get(pivots, ZERO)
    if method == "recursion":
        return _pivots_recursive(n, pivots, mu, False)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def pi_pivots(n: int, pivots: Sequence[int], mu: Sequence[int],
              method: str = "tableau_sum") -> Polynomial:
    """Subspaces with the given pivots and partial profile mu."""
    mu = Partition(mu)
    pivots = tuple(pivots)
    _check_query(n, pivots, mu)
    if method == "tableau_sum":
        if not mu:
            return ONE
        weights = _weights_by_first_column(n, conjugate(mu), True)
        return prefactor(mu) * weights.get(pivots, ZERO)
    if method == "recursion":
        return _pivots_recursive(n, pivots, mu, True)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def pi(n: int, mu: Sequence[int]) -> Polynomial:
    """Subspaces with partial profile mu; the empty profile gives 1."""
    mu = Partition(mu)
    if not mu:
        return ONE
    weights = _weights_by_first_column(n, conjugate(mu), True)
    return prefactor(mu) * poly_sum(weights.values())


def splitting_count(m: int, d: int, cache: BLambdaCache | None = None) -> Polynomial:
    """Subspaces of dimension m with profile (m^d) in dimension n = md."""
    if m < 1 or d < 1:
        raise ValueError("m and d must be positive")
    return (Q_MINUS_ONE ** (m * (d - 1))).shift(comb(m, 2) * (d - 1)) * \
        b_lambda((d,) * m, cache=cache)


def anti_invariant_count(n: int, m: int, l: int) -> Polynomial:
    """l-fold anti-invariant subspaces of dimension m: sum over tableaux of shape ((l+1)^m)."""
    if n < 0 or m < 0 or l < 0:
        raise ValueError("n, m, l must be nonnegative")
    if m == 0:
        return ONE
    shape = Partition((l + 1,) * m)
    if shape.size > n:
        return ZERO
    total = poly_sum(c_weight(t)[1].shift(gamma_n(t, n)) for t in generate_tableaux(shape, n=n))
    return (Q_MINUS_ONE ** (l * m)).shift(l * comb(m, 2)) * total


def r_locus_count(n: int, m: int, r: int) -> Polynomial:
    """Subspaces W of dimension m whose Delta-closure has dimension r."""
    if not n >= r >= m >= 0:
        raise ValueError(f"need n >= r >= m >= 0, got n={n}, r={r}, m={m}")
    return Q_MINUS_ONE ** (r - m) * comb(n, r) * s_q_table(r)[r][m]


def r_locus_by_profiles(n: int, m: int, r: int, cache: BLambdaCache | None = None) -> Polynomial:
    """The same count as a sum of sigma over profiles mu of r with mu_1 = m."""
    if m == 0:
        return ONE if r == 0 else ZERO
    return poly_sum(sigma(n, mu, cache) for mu in enumerate_partitions(r, first_part=m))
