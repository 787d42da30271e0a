"""Integer partitions: conjugation, removable cells, constrained enumeration."""
from __future__ import annotations

from typing import Iterator, Sequence


class Partition(tuple):
    """
    A weakly decreasing tuple of positive integers.

    >>> Partition((3, 2, 2)).conjugate()
    Partition((3, 3, 1))
    """

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(a < 0 for a in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        # trailing zeros, as in (r + i, s - i) with i = s, are dropped
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if 0 in parts:
            raise ValueError(f"partition parts must be positive: {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        """All cells (row, column), 1-based, row by row."""
        for i, part in enumerate(self, start=1):
            for j in range(1, part + 1):
                yield (i, j)

    def remove_cell(self, row: int) -> Partition:
        """Remove the last cell of ``row`` (1-based); it must be removable."""
        parts = list(self)
        parts[row - 1] -= 1
        if row < len(parts) and parts[row - 1] < parts[row]:
            raise ValueError(f"cell at end of row {row} of {self} is not removable")
        if parts[-1] == 0:
            parts.pop()
        return Partition(parts)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def removable_cells(lam: Sequence[int]) -> list[tuple[int, int]]:
    """Corners of the Young diagram, top row first, 1-based."""
    cells = []
    for i, part in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < part:
            cells.append((i + 1, part))
    return cells


def parse_partition(text: str) -> Partition:
    """Parse ``"3,3,1"``; the empty string (or ``"-"``) is the empty partition."""
    text = text.strip()
    if text in ("", "-", "()"):
        return Partition()
    try:
        parts = sorted((int(x) for x in text.replace(" ", "").split(",")), reverse=True)
    except ValueError:
        raise ValueError(f"malformed partition {text!r}: expected comma-separated positive integers")
    return Partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(x) for x in lam)


def enumerate_partitions(n: int, exact_length: int | None = None,
                         first_part: int | None = None) -> Iterator[Partition]:
    """
    Yield partitions of n in reverse-lexicographic order, optionally
    restricted to a given number of parts or a given largest part.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if exact_length is not None and first_part is not None:
        raise ValueError("give at most one constraint")

    def rec(remaining, max_part, prefix):
        if remaining == 0:
            if exact_length is None or len(prefix) == exact_length:
                yield Partition(prefix)
            return
        if exact_length is not None:
            slots = exact_length - len(prefix)
            # each remaining slot needs at least 1, and at most max_part
            if slots <= 0 or remaining > slots * max_part:
                return
        for part in range(min(remaining, max_part), 0, -1):
            if exact_length is not None and remaining - part < exact_length - len(prefix) - 1:
                continue
            prefix.append(part)
            yield from rec(remaining - part, part, prefix)
            prefix.pop()

    if first_part is not None:
        if n == 0:
            return
        if first_part < 1 or first_part > n:
            return
        yield from rec(n - first_part, first_part, [first_part])
        return
    yield from rec(n, n, [])


def partitions_up_to(n_max: int) -> Iterator[Partition]:
    """All partitions of 0, 1, ..., n_max."""
    for n in range(n_max + 1):
        yield from enumerate_partitions(n)


def rectangle(rows: int, width: int) -> Partition:
    """The partition (width^rows)."""
    return Partition((width,) * rows)


def rowwise_offset(lam: Sequence[int]) -> int:
    """sum_i (i-1)(lam_i - 1), the exponent shift used for q-Stirling numbers."""
    return sum(i * (part - 1) for i, part in enumerate(lam))
