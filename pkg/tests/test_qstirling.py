import pytest

from interlacing.blambda import b_lambda
from interlacing.partitions import rowwise_offset
from interlacing.poly import ONE, ZERO, Polynomial, q_binomial
from interlacing.qstirling import (METHODS, carlitz_holds, carlitz_rhs, classical,
                                   noninterlacing_partitions, s_q, s_q_table)
from interlacing.setpart import all_set_partitions, interlacing_number
from interlacing.verify import bell_numbers


def stirling2(n, m):
    if n == m:
        return 1
    if m == 0 or m > n:
        return 0
    return stirling2(n - 1, m - 1) + m * stirling2(n - 1, m)


@pytest.mark.parametrize("method", METHODS)
def test_examples(method):
    for n in range(5):
        assert s_q(n, n, method) == ONE
    assert s_q(3, 2, method) == Polynomial((2, 1))
    assert s_q(4, 2, method) == Polynomial((3, 3, 1))
    assert s_q(4, 0, method) == ZERO
    assert s_q(2, 3, method) == ZERO


def test_five_methods_agree():
    table = s_q_table(9)
    for n in range(10):
        for m in range(n + 1):
            for method in METHODS:
                if method in ("setpartition_sum", "noninterlacing_sum") and n > 8:
                    continue
                assert s_q(n, m, method) == table[n][m], (n, m, method)


def test_classical_values():
    for n in range(10):
        for m in range(n + 1):
            assert s_q_table(9)[n][m](1) == stirling2(n, m)
    assert classical(0) == ([1], 1)
    row, bell = classical(3)
    assert row == [0, 1, 3, 1] and bell == 5
    assert classical(5)[1] == 52 == bell_numbers(5)[5]


def test_carlitz_examples():
    assert carlitz_rhs(5, 5) == ONE
    assert carlitz_rhs(4, 2) == Polynomial((1, 1, 2, 1, 1))
    assert carlitz_rhs(6, 0) == ONE
    with pytest.raises(ValueError):
        carlitz_rhs(2, 3)


def test_carlitz_identity():
    for n in range(9):
        for m in range(n + 1):
            assert carlitz_rhs(n, m) == q_binomial(n, m)
            assert carlitz_holds(n, m)


def test_noninterlacing_sum_iterates_exactly_the_v_zero_partitions():
    for n in range(1, 8):
        for m in range(1, n + 1):
            got = list(noninterlacing_partitions(n, m))
            brute = {a for a in all_set_partitions(range(1, n + 1))
                     if len(a) == m and interlacing_number(a) == 0}
            assert len(got) == len(set(got)) and set(got) == brute


def test_blambda_sum_weights():
    n, m = 6, 3
    terms = [b_lambda(lam).shift(rowwise_offset(lam)) for lam in [(4, 1, 1), (3, 2, 1), (2, 2, 2)]]
    assert sum(terms, ZERO) == s_q(n, m)
