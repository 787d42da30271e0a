"""
Two-block set partitions of shape (r, s), r > s, with interlacing number i
are in bijection with standard tableaux of shape (r + i, s - i).  The map
cuts the chord diagram at each interlacing, turns every piece into a
(prefix) Dyck path through its noninterlacing tableau, lifts the last step of
every closed piece, and concatenates.
"""
from __future__ import annotations

from typing import Sequence

from .setpart import SetPartition, arcs, canonical_noninterlacing, crosses, tableau_of
from .tableaux import Tableau

NE = "NE"
SE = "SE"


def tableau_to_path(t: Tableau) -> list[str]:
    """Step k is NE when k sits in the first row, SE when in the second."""
    if len(t.rows) > 2:
        raise ValueError("only tableaux with at most two rows have a path")
    top = set(t.rows[0]) if t.rows else set()
    return [NE if k in top else SE for k in range(1, t.size + 1)]


def path_to_tableau(steps: Sequence[str]) -> Tableau:
    if not is_prefix_dyck(steps):
        raise ValueError("path dips below the axis")
    top = tuple(k for k, s in enumerate(steps, start=1) if s == NE)
    bottom = tuple(k for k, s in enumerate(steps, start=1) if s == SE)
    return Tableau(tuple(r for r in (top, bottom) if r))


def is_prefix_dyck(steps: Sequence[str]) -> bool:
    h = 0
    for s in steps:
        if s not in (NE, SE):
            raise ValueError(f"unknown step {s!r}")
        h += 1 if s == NE else -1
        if h < 0:
            return False
    return True


def path_height(steps: Sequence[str]) -> int:
    return sum(1 if s == NE else -1 for s in steps)


def _two_blocks(a: SetPartition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    shape = a.shape
    if len(a.blocks) != 2 or shape[0] == shape[1]:
        raise ValueError(f"theta needs two blocks of sizes r > s, got shape {tuple(shape)}")
    n = shape.size
    if a.support != frozenset(range(1, n + 1)):
        raise ValueError("theta needs a partition of [n]")
    return a.blocks[0], a.blocks[1]


def cut_points(a: SetPartition) -> list[int]:
    """Indices j whose j-th arcs cross; the diagram splits after 2j."""
    x, y = a.blocks
    return [j for j, (u, v) in enumerate(zip(arcs(x), arcs(y)), start=1) if crosses(u, v)]


def _local(block_elems, lo):
    return tuple(e - lo + 1 for e in block_elems)


def theta(a: SetPartition) -> Tableau:
    x, y = _two_blocks(a)
    n = a.shape.size
    cuts = [2 * j for j in cut_points(a)]
    bounds = [0] + cuts + [n]
    path: list[str] = []
    for k in range(len(bounds) - 1):
        lo, hi = bounds[k] + 1, bounds[k + 1]
        blocks = [_local([e for e in b if lo <= e <= hi], lo) for b in (x, y)]
        piece = SetPartition(tuple(b for b in blocks if b))
        steps = tableau_to_path(tableau_of(piece))
        if k < len(cuts):
            # closed pieces end with a descent back to their base level
            assert steps[-1] == SE and path_height(steps) == 0
            steps[-1] = NE
        path.extend(steps)
    return path_to_tableau(path)


def theta_inverse(t: Tableau, i: int) -> SetPartition:
    """Undo :func:`theta` given the interlacing number ``i`` of the preimage."""
    if len(t.rows) > 2 or not t.is_standard():
        raise ValueError("theta_inverse needs a standard tableau with at most two rows")
    if i < 0:
        raise ValueError("i must be nonnegative")
    steps = tableau_to_path(t)
    top = len(t.rows[0]) if t.rows else 0
    bottom = len(t.rows[1]) if len(t.rows) > 1 else 0
    if top - bottom <= 2 * i:
        raise ValueError(
            f"shape ({top}, {bottom}) cannot come from i={i}: need row difference > 2i")

    # position (0-based) of the right-most NE step from level 2j-1 to 2j
    heights = [0]
    for s in steps:
        heights.append(heights[-1] + (1 if s == NE else -1))
    cut_after = []
    for j in range(1, i + 1):
        pos = max(k for k, s in enumerate(steps) if s == NE and heights[k] == 2 * j - 1)
        cut_after.append(pos)

    bounds = [0] + [p + 1 for p in cut_after] + [len(steps)]
    pieces = []
    for k in range(len(bounds) - 1):
        piece = list(steps[bounds[k]:bounds[k + 1]])
        if k < len(cut_after):
            piece[-1] = SE
        local = canonical_noninterlacing(path_to_tableau(piece))
        offset = bounds[k]
        pieces.append([tuple(e + offset for e in b) for b in local.blocks])

    current = [list(b) for b in pieces[0]]
    while len(current) < 2:
        current.append([])
    for nxt in pieces[1:]:
        ordered = sorted(nxt, key=lambda b: b[0])
        while len(ordered) < 2:
            ordered.append(())
        smaller, larger = ordered[0], ordered[1]
        largest = max(e for b in current for e in b)
        carrier = 0 if largest in current[0] else 1
        current[carrier].extend(larger)
        current[1 - carrier].extend(smaller)
    return SetPartition(tuple(tuple(b) for b in current if b))


def involution_count(n: int) -> int:
    """I(n) = I(n-1) + (n-1) I(n-2), I(0) = I(1) = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 1, 1
    for k in range(2, n + 1):
        a, b = b, b + (k - 1) * a
    return b if n >= 1 else a
