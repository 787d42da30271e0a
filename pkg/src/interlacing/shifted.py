"""
Standard shifted tableaux.  Row i (1-based) of a shifted shape occupies
absolute columns i .. lambda_i + i - 1; rows, columns and diagonals increase.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .partitions import Partition, conjugate


def shifted_cells(shape: Sequence[int]) -> list[tuple[int, int]]:
    return [(i, j) for i, part in enumerate(shape, start=1) for j in range(i, part + i)]


def _predecessors(shape: Sequence[int]) -> dict[tuple[int, int], list[tuple[int, int]]]:
    cells = set(shifted_cells(shape))
    preds = {}
    for (i, j) in cells:
        preds[i, j] = [c for c in ((i, j - 1), (i - 1, j), (i - 1, j - 1)) if c in cells]
    return preds


@lru_cache(maxsize=None)
def _count(shape: Partition) -> int:
    preds = _predecessors(shape)
    # row i is filled as a prefix of its cells; state = number filled per row
    starts = list(range(1, len(shape) + 1))

    @lru_cache(maxsize=None)
    def extensions(filled: tuple[int, ...]) -> int:
        if all(f == part for f, part in zip(filled, shape)):
            return 1
        total = 0
        for r, f in enumerate(filled):
            if f == shape[r]:
                continue
            cell = (r + 1, starts[r] + f)
            if all(_is_filled(p, filled, starts) for p in preds[cell]):
                nxt = filled[:r] + (f + 1,) + filled[r + 1:]
                total += extensions(nxt)
        return total

    return extensions(tuple(0 for _ in shape))


def _is_filled(cell, filled, starts) -> bool:
    i, j = cell
    return j < starts[i - 1] + filled[i - 1]


def count_shifted(shape: Sequence[int]) -> int:
    """Number of standard shifted tableaux of the given shape."""
    return _count(Partition(shape))


def shifted_tableaux(shape: Sequence[int]) -> Iterator[dict[tuple[int, int], int]]:
    """Each standard shifted tableau as a map cell -> entry (debug/display use)."""
    shape = Partition(shape)
    cells = shifted_cells(shape)
    preds = _predecessors(shape)
    n = shape.size
    grid: dict[tuple[int, int], int] = {}

    def rec(k):
        if k > n:
            yield dict(grid)
            return
        for cell in cells:
            if cell in grid:
                continue
            if all(p in grid for p in preds[cell]):
                grid[cell] = k
                yield from rec(k + 1)
                del grid[cell]

    yield from rec(1)


def format_shifted(shape: Sequence[int], grid: dict[tuple[int, int], int]) -> str:
    lines = []
    for i, part in enumerate(shape, start=1):
        lines.append("  " * (i - 1) + " ".join(f"{grid[i, j]:>1}" for j in range(i, part + i)))
    return "\n".join(lines)


def distinct_parts_hypothesis(shape: Sequence[int]) -> bool:
    """True when the parts below the largest value are distinct."""
    shape = Partition(shape)
    if not shape:
        return True
    rest = [x for x in shape if x < shape[0]]
    return len(set(rest)) == len(rest)


def conjugate_steps_ok(shape: Sequence[int]) -> bool:
    """Successive parts of the conjugate differ by at most one."""
    mu = conjugate(shape)
    return all(a - b <= 1 for a, b in zip(mu, mu[1:]))
