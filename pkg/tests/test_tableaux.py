from collections import Counter
from itertools import combinations
from math import comb

import pytest

from interlacing.partitions import enumerate_partitions, partitions_up_to
from interlacing.poly import ONE, Polynomial
from interlacing.tableaux import (Tableau, beta, c_count, c_matrix, c_weight, count_syt, format_tableau,
                                  from_columns, gamma_n, generate_tableaux, parse_tableau, standard_tableaux)

T = parse_tableau("129/36/58")


def hook_length_count(lam):
    from math import factorial
    mu = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, part in enumerate(lam):
        for j in range(part):
            hooks *= (part - j - 1) + (mu[j] - i - 1) + 1
    return factorial(sum(lam)) // hooks


def test_parse_and_format():
    assert T.rows == ((1, 2, 9), (3, 6), (5, 8))
    assert T.shape == (3, 2, 2)
    assert T.support == frozenset({1, 2, 3, 5, 6, 8, 9})
    assert format_tableau(T) == "129/36/58"
    assert format_tableau(parse_tableau("1,2,10/3")) == "1,2,10/3"
    assert parse_tableau("1,2,10/3") == Tableau(((1, 2, 10), (3,)))
    assert from_columns([(1, 3, 5), (2, 6, 8), (9,)]) == T


def test_rejects_non_multilinear():
    for bad in ("21/3", "12/13", "13/2,4", "1,2/0"):
        with pytest.raises(ValueError):
            parse_tableau(bad)


def test_generate_examples():
    assert [format_tableau(t) for t in generate_tableaux((2, 1), support=range(1, 4))] == ["12/3", "13/2"]
    assert list(generate_tableaux((1, 1, 1, 1), n=4)) == [Tableau(((1,), (2,), (3,), (4,)))]
    assert sum(1 for _ in generate_tableaux((2,), n=4)) == 6


def test_generation_sorted_and_distinct():
    for lam in partitions_up_to(6):
        ts = list(generate_tableaux(lam, n=7))
        keys = [sum(t.rows, ()) for t in ts]
        assert keys == sorted(keys)
        assert len(set(ts)) == len(ts)
        assert all(t.shape == lam for t in ts)


def test_syt_counts_match_hook_lengths():
    for lam in partitions_up_to(9):
        assert count_syt(lam) == hook_length_count(lam)


def test_c_matrix_examples():
    assert c_matrix(T) == {(1, 2): 1, (1, 3): 3, (2, 2): 2, (3, 2): 1}
    assert c_matrix(parse_tableau("1/4/7")) == {}
    assert c_matrix(parse_tableau("13/2")) == {(1, 2): 2}


def test_c_weight_examples():
    assert c_weight(T) == (6, Polynomial((1, 2, 2, 1)))
    assert c_weight(parse_tableau("2/5/6")) == (1, ONE)
    for lam in partitions_up_to(8):
        rows, k = [], 1
        for part in lam:
            rows.append(tuple(range(k, k + part)))
            k += part
        assert c_count(Tableau(tuple(rows))) == 1


def test_beta_examples():
    assert beta((1, 3), (2, 4)) == 3
    assert beta((), (1, 2, 3)) == 0
    assert beta(range(1, 4), range(4, 9)) == 15


def test_gamma_examples():
    t = parse_tableau("12")
    assert gamma_n(t, 2) == 0
    assert gamma_n(t, 4) == 2
    assert gamma_n(T, 9) == beta((9,), (4, 7))
    with pytest.raises(ValueError):
        gamma_n(T, 8)


def test_relabeling_invariance():
    for lam in partitions_up_to(6):
        base = Counter(c_weight(t)[1] for t in standard_tableaux(lam))
        for n in range(lam.size, 9):
            got = Counter(c_weight(t)[1] for t in generate_tableaux(lam, n=n))
            assert got == Counter({w: k * comb(n, lam.size) for w, k in base.items()})


def test_beta_closed_form():
    for n in range(8):
        for m in range(n + 1):
            for c in combinations(range(1, n + 1), m):
                rest = [x for x in range(1, n + 1) if x not in c]
                assert beta(c, rest) == sum(n - m - ci + i for i, ci in enumerate(c, start=1))


def test_c_weight_at_one_is_count():
    for n in range(7):
        for lam in enumerate_partitions(n):
            for t in standard_tableaux(lam):
                c, cq = c_weight(t)
                assert cq(1) == c
