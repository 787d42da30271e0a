from collections import Counter, defaultdict
from itertools import combinations

import pytest

from interlacing.bijections import (NE, SE, cut_points, involution_count, is_prefix_dyck,
                                    path_to_tableau, tableau_to_path, theta, theta_inverse)
from interlacing.blambda import b_lambda, b_two_row
from interlacing.partitions import Partition, enumerate_partitions
from interlacing.poly import Polynomial
from interlacing.setpart import (SetPartition, interlacing_number, parse_set_partition, tableau_of)
from interlacing.tableaux import count_syt, parse_tableau, standard_tableaux

CUT_PARTITION = parse_set_partition("1,2,6,8,9,11,12,14|3,4,5,7,10,13")
CUT_TABLEAU = parse_tableau("1,2,5,6,7,9,10,11,12,14/3,4,8,13")


def two_block_partitions(r, s):
    n = r + s
    for big in combinations(range(1, n + 1), r):
        small = tuple(x for x in range(1, n + 1) if x not in big)
        yield SetPartition((big, small))


def test_worked_example():
    assert interlacing_number(CUT_PARTITION) == 2
    assert cut_points(CUT_PARTITION) == [3, 5]
    assert theta(CUT_PARTITION) == CUT_TABLEAU
    assert theta_inverse(CUT_TABLEAU, 2) == CUT_PARTITION


def test_noninterlacing_is_fixed():
    for a in two_block_partitions(4, 2):
        if interlacing_number(a) == 0:
            assert theta(a) == tableau_of(a)
            assert theta_inverse(theta(a), 0) == a


def test_round_trip_shape_four_three():
    parts = list(two_block_partitions(4, 3))
    assert len(parts) == 35
    for a in parts:
        assert theta_inverse(theta(a), interlacing_number(a)) == a


def test_bijection_exhaustive():
    for total in range(2, 13):
        for s in range(1, (total + 1) // 2):
            r = total - s
            if r <= s:
                continue
            image = defaultdict(set)
            strata = Counter()
            for a in two_block_partitions(r, s):
                i = interlacing_number(a)
                t = theta(a)
                assert t.shape == Partition((r + i, s - i))
                assert theta_inverse(t, i) == a
                assert t not in image[i]
                image[i].add(t)
                strata[i] += 1
            for i, ts in image.items():
                assert ts == set(standard_tableaux((r + i, s - i)))
            assert sum(len(ts) for ts in image.values()) == sum(count_syt((r + i, s - i)) for i in range(s + 1))
            gen = Polynomial(strata.get(k, 0) for k in range(max(strata) + 1))
            assert gen == b_two_row(r, s) == b_lambda((r, s))


def test_theta_rejects():
    with pytest.raises(ValueError):
        theta(parse_set_partition("12|34"))
    with pytest.raises(ValueError):
        theta(parse_set_partition("1|2|3"))
    with pytest.raises(ValueError):
        theta_inverse(parse_tableau("123/45"), 1)


def test_paths():
    t = parse_tableau("124/35")
    assert tableau_to_path(t) == [NE, NE, SE, NE, SE]
    assert path_to_tableau(tableau_to_path(t)) == t
    assert not is_prefix_dyck([NE, SE, SE])


def test_involution_counts():
    assert [involution_count(n) for n in range(7)] == [1, 1, 2, 4, 10, 26, 76]
    for n in range(9):
        assert sum(count_syt(lam) for lam in enumerate_partitions(n)) == involution_count(n)
