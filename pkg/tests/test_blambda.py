from math import comb

import pytest

from interlacing.blambda import (BLambdaCache, b_lambda, b_lambda_n, b_two_row, catalan_triangle,
                                 f_two_row, hermite_shape, q_hermite_triangle, recursion_terms,
                                 specializations, touchard_lhs, touchard_riordan_rhs, warm_cache)
from interlacing.partitions import Partition, partitions_up_to
from interlacing.poly import ONE, ONE_MINUS_Q, ZERO, Polynomial, q_int
from interlacing.tableaux import c_count, count_syt, standard_tableaux
from interlacing.verify import set_partition_count

B331 = Polynomial((21, 28, 15, 5, 1))


@pytest.mark.parametrize("method", ["recursion", "tableau_sum", "setpartition_sum"])
def test_examples(method):
    assert b_lambda((3, 3, 1), method) == B331
    assert b_lambda((1, 1, 1, 1), method) == ONE
    assert b_lambda((2, 1), method) == Polynomial((2, 1))
    assert b_lambda((), method) == ONE


def test_recursion_terms_of_worked_example():
    terms = recursion_terms((4, 3, 3, 1))
    assert terms == [(q_int(3), (3, 3, 3, 1)), (ONE, (4, 3, 2, 1)), (ONE, (4, 3, 3))]


def test_unknown_method():
    with pytest.raises(ValueError):
        b_lambda((2,), "magic")


def test_method_agreement():
    for lam in partitions_up_to(9):
        rec = b_lambda(lam)
        assert rec == b_lambda(lam, "tableau_sum")
        if lam.size <= 8:
            assert rec == b_lambda(lam, "setpartition_sum")


def test_specializations():
    for lam in partitions_up_to(8):
        b = b_lambda(lam)
        assert b(1) == set_partition_count(lam)
        assert b(0) == count_syt(lam)
        assert all(c >= 0 for c in b.coeffs)
        assert b(-1) == sum(1 for t in standard_tableaux(lam) if c_count(t) % 2)
    assert specializations((3, 3, 1)) == {"q=1": 70, "q=0": 21, "q=-1": 4}


def test_support_inside_n_scales_by_binomial():
    for lam in partitions_up_to(5):
        for n in range(lam.size, 8):
            assert b_lambda_n(lam, n) == comb(n, lam.size) * b_lambda(lam)


def test_two_row_examples():
    assert b_two_row(2, 1) == Polynomial((2, 1))
    assert b_two_row(5, 0) == ONE
    assert b_two_row(2, 2) == Polynomial((2, 1))
    assert f_two_row(4, 4) == 14
    with pytest.raises(ValueError):
        b_two_row(1, 2)


def test_two_row_matches_recursion():
    for total in range(15):
        for s in range(total // 2 + 1):
            assert b_two_row(total - s, s) == b_lambda((total - s, s))
            assert f_two_row(total - s, s) == count_syt((total - s, s))


def test_touchard_examples():
    assert touchard_riordan_rhs(0) == ONE
    assert touchard_riordan_rhs(1) == Polynomial((1, -1))
    assert touchard_riordan_rhs(2) == Polynomial((2, -3, 0, 1))


def test_touchard_identity():
    for m in range(9):
        assert b_lambda((2,) * m) * ONE_MINUS_Q ** m == touchard_riordan_rhs(m)
        assert touchard_lhs(m) == touchard_riordan_rhs(m)


def test_catalan_triangle_examples():
    rows = q_hermite_triangle(4)
    assert rows[0][0] == ONE
    assert rows[2][0] == ONE == b_lambda((2,))
    assert rows[4][0] == Polynomial((2, 1)) == b_lambda((2, 2))


def test_catalan_triangle_classical_instance():
    # b_k = 0, lambda_k = 1 gives the Catalan ballot numbers
    rows = catalan_triangle(lambda k: ZERO, lambda k: ONE, 10)
    assert [rows[2 * m][0](0) for m in range(6)] == [1, 1, 2, 5, 14, 42]


def test_q_hermite_entries():
    rows = q_hermite_triangle(14)
    for n, row in enumerate(rows):
        for k, entry in enumerate(row):
            if (n - k) % 2:
                assert entry == ZERO
            else:
                assert entry == b_lambda(hermite_shape(n, k))
    with pytest.raises(ValueError):
        hermite_shape(3, 0)


def test_cache_round_trip(tmp_path):
    cache = warm_cache(7, BLambdaCache())
    path = tmp_path / "b.txt"
    cache.dump(path)
    again = BLambdaCache.load(path)
    assert again.table == cache.table
    assert again.to_text() == cache.to_text()
    text = cache.to_text()
    assert text.splitlines()[0] == "-:1"
    assert "3,3,1:21,28,15,5,1" in text.splitlines()


def test_cache_env_var(tmp_path, monkeypatch):
    path = tmp_path / "env.txt"
    path.write_text("-:1\n2,1:2,1\n")
    monkeypatch.setenv("INTERLACING_CACHE", str(path))
    cache = BLambdaCache.load_or_new()
    assert cache.get((2, 1)) == Polynomial((2, 1))


def test_cache_is_used_and_filled():
    cache = BLambdaCache()
    b_lambda((3, 2, 1), cache=cache)
    assert Partition((2, 2, 1)) in cache and (3, 2) in cache
    assert b_lambda((3, 2, 1), cache=cache) == b_lambda((3, 2, 1), "tableau_sum")


def test_recursion_reaches_larger_shapes():
    cache = BLambdaCache()
    for lam in partitions_up_to(12):
        b = b_lambda(lam, cache=cache)
        assert b(1) == set_partition_count(lam)
        assert b(0) == count_syt(lam)
