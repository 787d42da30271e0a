"""
Set partitions in standard notation, the tableau map T(A), arcs and the
interlacing number, and generation of the fibre {A : T(A) = T}.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .partitions import Partition
from .tableaux import Tableau, from_columns, generate_tableaux

INFINITY = math.inf


@dataclass(frozen=True)
class SetPartition:
    """Blocks sorted internally and ordered by least element."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = [tuple(sorted(int(x) for x in b)) for b in self.blocks]
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        flat = [x for b in blocks for x in b]
        if len(set(flat)) != len(flat):
            raise ValueError(f"blocks must be disjoint: {blocks}")
        if any(x <= 0 for x in flat):
            raise ValueError("elements must be positive integers")
        blocks.sort(key=lambda b: b[0])
        object.__setattr__(self, "blocks", tuple(blocks))

    @property
    def shape(self) -> Partition:
        return Partition(sorted((len(b) for b in self.blocks), reverse=True))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(x for b in self.blocks for x in b)

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        return format_set_partition(self)


def parse_set_partition(text: str) -> SetPartition:
    """Parse ``"1,2|3,8,9|5,6"`` or the digit shorthand ``"12|389|56"``."""
    text = text.strip().replace(" ", "")
    if not text:
        return SetPartition(())
    parts = text.split("|")
    try:
        if "," in text:
            blocks = [tuple(int(x) for x in p.split(",") if x) for p in parts]
        else:
            blocks = [tuple(int(ch) for ch in p) for p in parts]
    except ValueError:
        raise ValueError(f"malformed set partition {text!r}: blocks separated by '|', elements by ','")
    return SetPartition(tuple(blocks))


def format_set_partition(a: SetPartition) -> str:
    sep = "" if all(x < 10 for x in a.support) else ","
    return "|".join(sep.join(str(x) for x in b) for b in a.blocks)


def tableau_of(a: SetPartition) -> Tableau:
    """T(A): column j holds the j-th smallest elements of the blocks, sorted."""
    if not a.blocks:
        return Tableau(())
    width = max(len(b) for b in a.blocks)
    columns = [sorted(b[j] for b in a.blocks if len(b) > j) for j in range(width)]
    return from_columns(columns)


def arcs(block: Sequence[int]) -> list[tuple[int, float]]:
    """Consecutive pairs of the block, the last one running to infinity."""
    return [(block[k], block[k + 1] if k + 1 < len(block) else INFINITY)
            for k in range(len(block))]


def crosses(arc1, arc2) -> bool:
    (a, b), (c, d) = arc1, arc2
    return a < c < b < d or c < a < d < b


def interlacing_number(a: SetPartition) -> int:
    """Number of crossing pairs of same-index arcs from distinct blocks."""
    block_arcs = [arcs(b) for b in a.blocks]
    total = 0
    for x in range(len(block_arcs)):
        for y in range(x + 1, len(block_arcs)):
            for arc1, arc2 in zip(block_arcs[x], block_arcs[y]):
                if crosses(arc1, arc2):
                    total += 1
    return total


def _least_element_maps(c: Sequence[int], ct: Sequence[int]) -> Iterator[list[int]]:
    """
    Injective maps alpha: ct -> c with alpha(x) < x, assigned to ct in
    increasing order and scanning targets in increasing order.
    """
    chosen: list[int] = []
    used: set[int] = set()

    def rec(k):
        if k == len(ct):
            yield list(chosen)
            return
        for target in c:
            if target >= ct[k]:
                break
            if target in used:
                continue
            used.add(target)
            chosen.append(target)
            yield from rec(k + 1)
            chosen.pop()
            used.discard(target)

    yield from rec(0)


def _glue(c: Sequence[int], ct: Sequence[int], alpha: Sequence[int],
          inner: SetPartition) -> SetPartition:
    attach = dict(zip(ct, alpha))
    tails = {attach[b[0]]: b for b in inner.blocks}
    return SetPartition(tuple((x,) + tails.get(x, ()) for x in c))


def fibre_generate(t: Tableau) -> Iterator[SetPartition]:
    """
    Every set partition A with T(A) = t, each exactly once.

    Recurses on the first column: A is determined by the partition of the
    remaining columns together with the map sending each block's second
    smallest element to its least element.
    """
    cols = t.columns()
    if len(cols) <= 1:
        yield SetPartition(tuple((x,) for x in (cols[0] if cols else ())))
        return
    c, ct = cols[0], cols[1]
    inner = list(fibre_generate(t.drop_first_column()))
    for alpha in _least_element_maps(c, ct):
        for a_inner in inner:
            yield _glue(c, ct, alpha, a_inner)


def canonical_noninterlacing(t: Tableau) -> SetPartition:
    """
    The unique A in the fibre of t with interlacing number 0.

    At every column step each second element is sent to the rightmost
    still-available least element; any other choice leaves an unused node
    under the arc and produces a crossing.
    """
    cols = t.columns()
    if len(cols) <= 1:
        return SetPartition(tuple((x,) for x in (cols[0] if cols else ())))
    c, ct = cols[0], cols[1]
    used: set[int] = set()
    alpha = []
    for x in ct:
        target = max(y for y in c if y < x and y not in used)
        used.add(target)
        alpha.append(target)
    return _glue(c, ct, alpha, canonical_noninterlacing(t.drop_first_column()))


def enumerate_by_shape(support: Iterable[int], shape: Sequence[int]) -> Iterator[SetPartition]:
    """All partitions of ``support`` with the given shape: tableaux, then fibres."""
    support = sorted(support)
    shape = Partition(shape)
    if len(support) != shape.size:
        raise ValueError(f"|S|={len(support)} does not match |shape|={shape.size}")
    for t in generate_tableaux(shape, support=support):
        yield from fibre_generate(t)


def partitions_of_shape(support: Iterable[int], shape: Sequence[int]) -> Iterator[SetPartition]:
    """
    Same set as :func:`enumerate_by_shape`, generated directly (no tableaux):
    the least unplaced element opens a block of each available size.
    """
    support = tuple(sorted(support))
    shape = Partition(shape)
    if len(support) != shape.size:
        raise ValueError(f"|S|={len(support)} does not match |shape|={shape.size}")
    sizes = list(shape)

    def rec(rest, sizes, acc):
        if not rest:
            yield SetPartition(tuple(acc))
            return
        first, others = rest[0], rest[1:]
        for k in sorted(set(sizes), reverse=True):
            remaining = list(sizes)
            remaining.remove(k)
            for extra in combinations(others, k - 1):
                chosen = set(extra)
                acc.append((first,) + extra)
                yield from rec(tuple(x for x in others if x not in chosen), remaining, acc)
                acc.pop()

    yield from rec(support, sizes, [])


def all_set_partitions(support: Iterable[int]) -> Iterator[SetPartition]:
    """Every partition of ``support`` (each element joins a block or opens one)."""
    support = sorted(support)

    def rec(k, blocks):
        if k == len(support):
            yield SetPartition(tuple(tuple(b) for b in blocks))
            return
        x = support[k]
        for b in blocks:
            b.append(x)
            yield from rec(k + 1, blocks)
            b.pop()
        blocks.append([x])
        yield from rec(k + 1, blocks)
        blocks.pop()

    yield from rec(0, [])
