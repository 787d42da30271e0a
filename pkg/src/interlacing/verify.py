"""
Identity-checking suites.  Each suite recomputes a family of identities by
independent routes and records every disagreement.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Callable

from .bijections import involution_count
from .blambda import (BLambdaCache, b_lambda, b_two_row, catalan_triangle, hermite_shape,
                      touchard_lhs, touchard_riordan_rhs)
from .gfq import census
from .partitions import enumerate_partitions, format_partition, partitions_up_to
from .poly import Polynomial, q_binomial, q_int, ZERO
from .qstirling import METHODS as S_METHODS, carlitz_rhs, classical, s_q, s_q_table
from .setpart import (all_set_partitions, canonical_noninterlacing, fibre_generate,
                      interlacing_number, tableau_of)
from .shifted import count_shifted, distinct_parts_hypothesis
from .tableaux import c_count, c_weight, count_syt, standard_tableaux

ORACLE_CONFIGS = ((2, 2), (3, 2), (3, 3), (5, 4), (5, 5))


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    def expect(self, ok: bool, what: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(what)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} FAILED"
        return f"{self.name}: {self.checks} checks, {status}"


def set_partition_count(lam) -> int:
    """Set partitions of [|lam|] with block sizes lam (multinomial formula)."""
    mult = Counter(lam)
    return factorial(sum(lam)) // (prod(factorial(x) for x in lam) * prod(factorial(k) for k in mult.values()))


def bell_numbers(n_max: int) -> list[int]:
    """Bell triangle."""
    bells = [1]
    row = [1]
    for _ in range(n_max):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        bells.append(row[0])
    return bells


def suite_fibres(max_n: int = 8, cache=None) -> SuiteResult:
    res = SuiteResult("fibres")
    for n in range(1, max_n + 1):
        for lam in enumerate_partitions(n):
            for t in standard_tableaux(lam):
                fibre = list(fibre_generate(t))
                c, cq = c_weight(t)
                res.expect(len(fibre) == c, f"|fibre({t})| = {len(fibre)} != c = {c}")
                res.expect(len(set(fibre)) == len(fibre), f"fibre({t}) has repeats")
                res.expect(all(tableau_of(a) == t for a in fibre), f"fibre({t}) round trip")
                vs = Counter(interlacing_number(a) for a in fibre)
                gen = Polynomial(vs.get(k, 0) for k in range(max(vs) + 1))
                res.expect(gen == cq, f"interlacing polynomial of fibre({t}) != c_q")
    return res


def suite_interlacing(max_n: int = 8, cache=None) -> SuiteResult:
    res = SuiteResult("interlacing")
    bells = bell_numbers(max(max_n, 10))
    for n in range(0, max(max_n, 10) + 1):
        total = sum(c_count(t) for lam in enumerate_partitions(n) for t in standard_tableaux(lam))
        res.expect(total == bells[n], f"sum of c(T) over SYT of size {n} != Bell {bells[n]}")
    for n in range(0, max_n + 1):
        zero = [a for a in all_set_partitions(range(1, n + 1)) if interlacing_number(a) == 0]
        res.expect(len(zero) == involution_count(n),
                   f"{len(zero)} noninterlacing partitions of [{n}] != {involution_count(n)}")
        fsum = sum(count_syt(lam) for lam in enumerate_partitions(n))
        res.expect(fsum == involution_count(n), f"sum of f_lambda for n={n}")
        if n == 0:
            continue
        for lam in enumerate_partitions(n):
            for t in standard_tableaux(lam):
                flat = [a for a in fibre_generate(t) if interlacing_number(a) == 0]
                canon = canonical_noninterlacing(t)
                res.expect(flat == [canon], f"canonical noninterlacing element of fibre({t})")
    return res


def suite_blambda_methods(max_n: int = 8, cache=None, recursion_n: int = 12) -> SuiteResult:
    res = SuiteResult("blambda-methods")
    for lam in partitions_up_to(max_n):
        rec = b_lambda(lam, "recursion", cache)
        tab = b_lambda(lam, "tableau_sum")
        res.expect(rec == tab, f"recursion != tableau_sum at {format_partition(lam)}")
        if lam.size <= 8:
            sp = b_lambda(lam, "setpartition_sum")
            res.expect(rec == sp, f"recursion != setpartition_sum at {format_partition(lam)}")
    # the recursion alone, against the q=1 and q=0 oracles
    for lam in partitions_up_to(recursion_n):
        rec = b_lambda(lam, "recursion", cache)
        res.expect(rec(1) == set_partition_count(lam), f"b({format_partition(lam)})(1)")
        res.expect(rec(0) == count_syt(lam), f"b({format_partition(lam)})(0)")
    return res


def suite_specializations(max_n: int = 8, cache=None) -> SuiteResult:
    res = SuiteResult("specializations")
    for lam in partitions_up_to(max_n):
        key = format_partition(lam)
        b = b_lambda(lam, cache=cache)
        res.expect(b(1) == set_partition_count(lam), f"b({key})(1) != multinomial count")
        f = count_syt(lam)
        res.expect(b(0) == f, f"b({key})(0) != f_lambda")
        res.expect(all(c >= 0 for c in b.coeffs), f"b({key}) has a negative coefficient")
        odd = sum(1 for t in standard_tableaux(lam) if c_count(t) % 2)
        res.expect(b(-1) == odd, f"b({key})(-1) = {b(-1)} != #odd c = {odd}")
        if lam:
            res.expect(b(-1) >= 1, f"b({key})(-1) not positive")
        if distinct_parts_hypothesis(lam):
            res.expect(b(-1) == count_shifted(lam), f"b({key})(-1) != shifted count")
    return res


def suite_qstirling(max_n: int = 9, cache=None, enumerative_n: int = 8) -> SuiteResult:
    res = SuiteResult("qstirling")
    table = s_q_table(max_n)
    for n in range(max_n + 1):
        row, bell = classical(n) if n <= enumerative_n else (None, None)
        for m in range(n + 1):
            ref = table[n][m]
            for method in S_METHODS[1:]:
                if method in ("setpartition_sum", "noninterlacing_sum") and n > enumerative_n:
                    continue
                got = s_q(n, m, method, cache)
                res.expect(got == ref, f"S_q({n},{m}) {method} disagrees with the recurrence")
            if row is not None:
                res.expect(ref(1) == row[m], f"S_q({n},{m})(1) != S({n},{m})")
        if bell is not None:
            res.expect(bell == bell_numbers(n)[n], f"Bell({n})")
    return res


def suite_carlitz(max_n: int = 8, cache=None) -> SuiteResult:
    res = SuiteResult("carlitz")
    for n in range(max_n + 1):
        for m in range(n + 1):
            res.expect(carlitz_rhs(n, m) == q_binomial(n, m), f"Carlitz identity at ({n},{m})")
    return res


def suite_two_row(max_n: int = 14, cache=None) -> SuiteResult:
    res = SuiteResult("two-row")
    for total in range(max_n + 1):
        for s in range(total // 2 + 1):
            r = total - s
            res.expect(b_two_row(r, s) == b_lambda((r, s), cache=cache),
                       f"two-row closed form at ({r},{s})")
    return res


def suite_touchard(max_n: int = 8, cache=None) -> SuiteResult:
    res = SuiteResult("touchard")
    for m in range(max_n + 1):
        res.expect(touchard_lhs(m, cache) == touchard_riordan_rhs(m), f"Touchard-Riordan at m={m}")
    return res


def suite_catalan_triangle(max_n: int = 14, cache=None) -> SuiteResult:
    res = SuiteResult("catalan-triangle")
    rows = catalan_triangle(lambda k: ZERO, q_int, max_n)
    for n, row in enumerate(rows):
        for k, entry in enumerate(row):
            if (n - k) % 2:
                res.expect(entry == ZERO, f"a({n},{k}) should vanish")
            else:
                res.expect(entry == b_lambda(hermite_shape(n, k), cache=cache),
                           f"a({n},{k}) != b of the hook-free shape")
    return res


def suite_shifted(max_n: int = 9, cache=None) -> SuiteResult:
    res = SuiteResult("shifted")
    for lam in partitions_up_to(max_n):
        if not lam or not distinct_parts_hypothesis(lam):
            continue
        res.expect(count_shifted(lam) == b_lambda(lam, cache=cache)(-1),
                   f"shifted count != b(-1) at {format_partition(lam)}")
    return res


def suite_oracle_all(max_n: int | None = None, cache=None) -> SuiteResult:
    res = SuiteResult("oracle-all")
    for p, n in ORACLE_CONFIGS:
        if max_n is not None and n > max_n:
            continue
        report = census(p, n, cache=cache)
        res.checks += report.checks
        for mm in report.mismatches:
            res.failures.append(f"census({p},{n}) {mm['kind']} {mm['key']}: "
                                f"observed {mm['observed']} expected {mm['expected']}")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "fibres": suite_fibres,
    "interlacing": suite_interlacing,
    "blambda-methods": suite_blambda_methods,
    "specializations": suite_specializations,
    "qstirling": suite_qstirling,
    "carlitz": suite_carlitz,
    "two-row": suite_two_row,
    "touchard": suite_touchard,
    "catalan-triangle": suite_catalan_triangle,
    "shifted": suite_shifted,
    "oracle-all": suite_oracle_all,
}


def run_suite(name: str, max_n: int | None = None, cache: BLambdaCache | None = None) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    fn = SUITES[name]
    if max_n is None:
        return fn(cache=cache)
    return fn(max_n, cache=cache)
