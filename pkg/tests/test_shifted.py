from interlacing.blambda import b_lambda
from interlacing.partitions import partitions_up_to
from interlacing.shifted import (conjugate_steps_ok, count_shifted, distinct_parts_hypothesis,
                                 format_shifted, shifted_cells, shifted_tableaux)
from interlacing.tableaux import c_count, standard_tableaux


def test_count_examples():
    assert count_shifted((3, 3, 1)) == 4
    assert count_shifted((1,)) == 1
    assert count_shifted((2, 1)) == 1
    assert count_shifted(()) == 1


def test_worked_example_tableaux():
    def grid(rows):
        return {(i, i + j): x for i, row in enumerate(rows, start=1) for j, x in enumerate(row)}

    expected = [grid(r) for r in (
        [(1, 2, 3), (4, 5, 6), (7,)],
        [(1, 2, 4), (3, 5, 6), (7,)],
        [(1, 2, 3), (4, 5, 7), (6,)],
        [(1, 2, 4), (3, 5, 7), (6,)],
    )]
    got = list(shifted_tableaux((3, 3, 1)))
    assert len(got) == 4
    assert sorted(map(sorted, (g.items() for g in got))) == sorted(map(sorted, (e.items() for e in expected)))
    assert format_shifted((3, 3, 1), expected[0]).splitlines()[1].strip() == "4 5 6"


def test_generator_agrees_with_counter():
    for lam in partitions_up_to(8):
        assert sum(1 for _ in shifted_tableaux(lam)) == count_shifted(lam)


def test_cells():
    assert shifted_cells((3, 2)) == [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3)]


def test_hypothesis_examples():
    assert distinct_parts_hypothesis((3, 3, 1))
    assert not distinct_parts_hypothesis((4, 2, 2))
    assert distinct_parts_hypothesis((3, 3, 3, 3))
    assert conjugate_steps_ok((3, 3, 1))


def test_minus_one_counts_shifted_tableaux():
    for lam in partitions_up_to(9):
        b = b_lambda(lam)
        odd = sum(1 for t in standard_tableaux(lam) if c_count(t) % 2)
        assert b(-1) == odd
        if lam:
            assert b(-1) >= 1
        if distinct_parts_hypothesis(lam):
            assert count_shifted(lam) == b(-1)


def test_hypothesis_is_needed():
    # (4,2,2) has a repeated small part and the two counts part ways
    assert count_shifted((4, 2, 2)) != b_lambda((4, 2, 2))(-1)
