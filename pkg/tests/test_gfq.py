import pytest
from hypothesis import given, settings, strategies as st

from interlacing.gfq import (BudgetExceeded, FpMatrix, Subspace, census, delta_profile,
                             enumerate_subspaces, galois_number, is_prime, rref)
from interlacing.partitions import Partition
from interlacing.poly import q_binomial
from interlacing.profiles import sigma, splitting_count

CONFIGS = [(2, 2), (3, 2), (3, 3), (5, 4), (5, 5)]


def test_rref_examples():
    ident = FpMatrix(5, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert rref(ident) == (ident, 3)
    zero = FpMatrix(3, ((0, 0), (0, 0)))
    assert rref(zero) == (zero, 0)
    reduced, rank = rref(FpMatrix(2, ((1, 1), (0, 1))))
    assert reduced.rows == ((1, 0), (0, 1)) and rank == 2
    with pytest.raises(ValueError):
        rref(FpMatrix(4, ((1, 0),)))


def test_entries_are_reduced():
    assert FpMatrix(3, ((4, -1),)).rows == ((1, 2),)


@settings(max_examples=60)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 4), st.integers(1, 5), st.data())
def test_rref_properties(p, rows, cols, data):
    entries = data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols),
                                 min_size=rows, max_size=rows))
    reduced, rank = rref(FpMatrix(p, tuple(map(tuple, entries)), cols))
    nonzero = [r for r in reduced.rows if any(r)]
    assert len(nonzero) == rank
    assert all(not any(r) for r in reduced.rows[rank:])
    leads = [next(j for j, x in enumerate(r) if x) for r in nonzero]
    assert leads == sorted(set(leads))
    for i, j in enumerate(leads):
        assert nonzero[i][j] == 1
        assert all(reduced.rows[k][j] == 0 for k in range(len(reduced.rows)) if k != i)
    assert rref(reduced) == (reduced, rank)


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_subspaces(2, 2, 1)) == 3
    assert sum(1 for _ in enumerate_subspaces(3, 3, 2)) == 13
    assert sum(1 for _ in enumerate_subspaces(5, 3, 3)) == 1


def test_enumeration_is_exhaustive_and_distinct():
    for p, n in CONFIGS[:4]:
        for m in range(n + 1):
            spaces = list(enumerate_subspaces(p, n, m))
            assert len(spaces) == q_binomial(n, m)(p)
            assert len({w.basis for w in spaces}) == len(spaces)
            for w in spaces:
                assert Subspace.span(p, n, w.basis) == w


def test_budget_refusal():
    with pytest.raises(BudgetExceeded) as err:
        list(enumerate_subspaces(5, 5, 2, budget=100))
    assert err.value.required == 20306
    assert "20306" in str(err.value)
    with pytest.raises(BudgetExceeded):
        census(5, 5, budget=1000)


def test_delta_profile_examples():
    w = Subspace.span(2, 2, [(1, 0)])
    assert delta_profile(w, (0, 1))[0] == (1,) and delta_profile(w, (0, 1))[2] == 1
    w = Subspace.span(2, 2, [(1, 1)])
    profile, prefixes, r = delta_profile(w, (0, 1))
    assert profile == (1, 1) and prefixes == [(1,), (1, 1)] and r == 2
    full = Subspace.span(5, 4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
    assert delta_profile(full, (0, 1, 2, 3)) == ((4,), [(4,)], 4)
    zero = Subspace.span(3, 3, [])
    assert delta_profile(zero, (0, 1, 2)) == ((), [], 0)


def test_delta_profile_rejects_bad_diagonals():
    w = Subspace.span(3, 3, [(1, 1, 1)])
    with pytest.raises(ValueError):
        delta_profile(w, (0, 1, 1))
    with pytest.raises(ValueError):
        delta_profile(w, (0, 1, 3))
    with pytest.raises(ValueError):
        census(2, 3)


def test_census_examples():
    rep = census(2, 2)
    assert dict(rep.profiles) == {Partition(()): 1, Partition((1,)): 2, Partition((1, 1)): 1, Partition((2,)): 1}
    assert rep.mismatches == []
    assert census(3, 3).profiles[Partition((1,))] == 3
    rep = census(5, 4)
    assert rep.dims[2] == 806
    assert rep.profiles[Partition((2, 2))] == 560 == splitting_count(2, 2)(5)


@pytest.mark.parametrize("p,n", CONFIGS)
def test_census_matches_every_closed_form(p, n):
    rep = census(p, n)
    assert rep.mismatches == []
    assert rep.total == galois_number(p, n) == sum(q_binomial(n, m)(p) for m in range(n + 1))
    assert all(list(mu) == sorted(mu, reverse=True) for mu in rep.profiles)
    for mu, count in rep.profiles.items():
        assert count == sigma(n, mu)(p)


def test_diagonal_choice_does_not_matter():
    a = census(5, 3).to_json_obj()
    b = census(5, 3, diag=(4, 2, 1)).to_json_obj()
    a.pop("diag"), b.pop("diag")
    assert a == b


def test_parallel_census_matches_serial():
    assert census(5, 4, workers=2).to_json_obj() == census(5, 4).to_json_obj()


def test_json_schema():
    obj = census(2, 2).to_json_obj()
    assert obj["p"] == 2 and obj["n"] == 2
    assert obj["profiles"] == {"": 1, "1": 2, "2": 1, "1,1": 1}
    assert obj["mismatches"] == []


def test_is_prime():
    assert [x for x in range(20) if is_prime(x)] == [2, 3, 5, 7, 11, 13, 17, 19]
