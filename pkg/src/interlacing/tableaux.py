"""
Multilinear tableaux: rows and columns strictly increasing, entries distinct
positive integers.  A standard Young tableau is the special case whose support
is {1, ..., n}.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Iterable, Iterator, Sequence

from .partitions import Partition
from .poly import ONE, Polynomial, mul, q_int


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        lengths = [len(r) for r in rows]
        if any(x == 0 for x in lengths):
            raise ValueError("tableau rows must be nonempty")
        Partition(lengths)  # raises if the shape is not a partition
        entries = [x for r in rows for x in r]
        if any(x <= 0 for x in entries):
            raise ValueError("tableau entries must be positive integers")
        if len(set(entries)) != len(entries):
            raise ValueError(f"tableau entries must be distinct: {format_tableau(self)}")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"rows must increase: {format_tableau(self)}")
        for upper, lower in zip(rows, rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise ValueError(f"columns must increase: {format_tableau(self)}")

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(x for r in self.rows for x in r)

    def __getitem__(self, cell: tuple[int, int]) -> int:
        """Entry at (row, column), 1-based."""
        i, j = cell
        return self.rows[i - 1][j - 1]

    def columns(self) -> list[tuple[int, ...]]:
        if not self.rows:
            return []
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(len(self.rows[0]))]

    def first_column(self) -> tuple[int, ...]:
        return tuple(r[0] for r in self.rows)

    def last_column(self) -> tuple[int, ...]:
        cols = self.columns()
        return cols[-1] if cols else ()

    def drop_first_column(self) -> Tableau:
        return Tableau(tuple(r[1:] for r in self.rows if len(r) > 1))

    def is_standard(self) -> bool:
        return self.support == frozenset(range(1, self.size + 1))

    def __str__(self):
        return format_tableau(self)

    def to_json_obj(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}


def from_columns(columns: Sequence[Sequence[int]]) -> Tableau:
    """Build a tableau from top-justified columns (raises if not multilinear)."""
    if not columns:
        return Tableau(())
    height = len(columns[0])
    rows = [[col[i] for col in columns if len(col) > i] for i in range(height)]
    return Tableau(tuple(tuple(r) for r in rows))


def parse_tableau(text: str) -> Tableau:
    """
    Parse ``"1,2,9/3,6/5,8"``.  Without any comma each character is one
    entry, so ``"129/36/58"`` means the same tableau.
    """
    text = text.strip().replace(" ", "")
    if not text:
        return Tableau(())
    rows = text.split("/")
    try:
        if "," in text:
            parsed = [tuple(int(x) for x in row.split(",") if x) for row in rows]
        else:
            parsed = [tuple(int(ch) for ch in row) for row in rows]
    except ValueError:
        raise ValueError(f"malformed tableau {text!r}: rows separated by '/', entries by ','")
    return Tableau(tuple(parsed))


def format_tableau(t: Tableau) -> str:
    entries = [x for r in t.rows for x in r]
    sep = "" if all(x < 10 for x in entries) else ","
    return "/".join(sep.join(str(x) for x in r) for r in t.rows)


def generate_tableaux(shape: Sequence[int], support: Iterable[int] | None = None,
                      n: int | None = None) -> Iterator[Tableau]:
    """
    Yield multilinear tableaux of the given shape.

    Exactly one of ``support`` (exact support S) or ``n`` (any support
    contained in {1..n}) must be given.  Tableaux come out in lexicographic
    order of their row-by-row entry sequence.
    """
    shape = Partition(shape)
    if (support is None) == (n is None):
        raise ValueError("give exactly one of support= or n=")
    if support is not None:
        pool = sorted(set(support))
        exact = True
        if len(pool) != shape.size:
            raise ValueError(f"support has {len(pool)} elements but shape {tuple(shape)} has {shape.size} cells")
    else:
        if n < shape.size:
            raise ValueError(f"n={n} is smaller than |shape|={shape.size}")
        pool = list(range(1, n + 1))
        exact = False

    cells = list(shape.cells())
    if not cells:
        yield Tableau(())
        return
    # cells strictly below-left of (i,j) may still take smaller values
    small_slots = {}
    big_needed = {}
    for (i, j) in cells:
        small_slots[i, j] = sum(min(part, j - 1) for part in shape[i:])
        big_needed[i, j] = sum(max(0, part - j + 1) for part in shape[i - 1:]) - 1

    grid: dict[tuple[int, int], int] = {}
    used = [False] * len(pool)

    def rec(k):
        if k == len(cells):
            yield Tableau(tuple(tuple(grid[i, j] for j in range(1, part + 1))
                                for i, part in enumerate(shape, start=1)))
            return
        i, j = cells[k]
        lb = max(grid.get((i, j - 1), 0), grid.get((i - 1, j), 0))
        n_unused_below = 0
        n_unused_total = used.count(False)
        for idx, x in enumerate(pool):
            if used[idx]:
                continue
            if x <= lb:
                n_unused_below += 1
                continue
            # n_unused_below counts unused values < x
            if exact and n_unused_below > small_slots[i, j]:
                return
            if n_unused_total - n_unused_below - 1 < big_needed[i, j]:
                return
            used[idx] = True
            grid[i, j] = x
            yield from rec(k + 1)
            used[idx] = False
            del grid[i, j]
            n_unused_below += 1

    yield from rec(0)


def standard_tableaux(shape: Sequence[int]) -> Iterator[Tableau]:
    shape = Partition(shape)
    return generate_tableaux(shape, support=range(1, shape.size + 1))


@lru_cache(maxsize=None)
def _count_syt(shape: Partition) -> int:
    return sum(1 for _ in standard_tableaux(shape))


def count_syt(shape: Sequence[int]) -> int:
    """f_lambda, by generation."""
    return _count_syt(Partition(shape))


def c_matrix(t: Tableau) -> dict[tuple[int, int], int]:
    """c_ij(T) = #{i' >= i : T[i', j-1] < T[i, j]} for every cell with j >= 2."""
    out = {}
    rows = t.rows
    for i, row in enumerate(rows):
        for j in range(1, len(row)):
            x = row[j]
            out[i + 1, j + 1] = sum(1 for r in rows[i:] if len(r) >= j and r[j - 1] < x)
    return out


def c_weight(t: Tableau) -> tuple[int, Polynomial]:
    """(c(T), c_q(T)): the product of the c_ij and of the q-integers [c_ij]_q."""
    values = c_matrix(t).values()
    weight = ONE
    for v in values:
        weight = mul(weight, q_int(v))
    return prod(values), weight


def c_count(t: Tableau) -> int:
    return prod(c_matrix(t).values())


def beta(c1: Iterable[int], c2: Iterable[int]) -> int:
    """Number of pairs (c, c') in c1 x c2 with c < c'."""
    c2 = sorted(c2)
    total = 0
    for c in c1:
        total += sum(1 for d in c2 if c < d)
    return total


def gamma_n(t: Tableau, n: int) -> int:
    """beta(last column of T, [n] - supp(T))."""
    supp = t.support
    if any(x > n for x in supp):
        raise ValueError(f"support of {format_tableau(t)} is not contained in [1..{n}]")
    complement = [x for x in range(1, n + 1) if x not in supp]
    return beta(t.last_column(), complement)
