"""The two structural maps tying sequences to partitions.

The first map halves weight: a sequence with parameters (a, b) double-covers
a staggered board whose doubly covered region is the diagram of a partition.
The board's blocks alternate between rows and single columns:

    block 2j-1 = row j, columns 1 .. a+j        (capacity a+j)
    block 2i   = column a+i+1, rows 1 .. i      (capacity i)

Pass i of the filling first doubles the cells the previous pass left singly
covered, then single-covers the leading cells of block i; so with c_i the
cells pass i places in block i, c_1 = d_1 and c_i = d_i - c_{i-1}.  The
closed form below reads the partition straight off the c_i; the literal
cell-by-cell filling is kept as an independent oracle.

The second map splits a strict partition into a balanced staircase prefix of
its shifted-diagram columns plus a leftover sequence, and is injective.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .abseq import ABSequence, InvalidABSequence, enumerate_sequences
from .partitions import (
    ColumnSequence,
    Partition,
    StrictPartition,
    bg_rank,
    columns,
    durfee_rectangle,
    enumerate_partitions,
    enumerate_strict_partitions,
    from_columns,
)

__all__ = [
    "InvalidSequence",
    "NotInDurfeeClass",
    "NotInSplitImage",
    "InternalInvariantViolation",
    "StaircaseSplit",
    "partition_from_sequence",
    "partition_from_sequence_by_filling",
    "sequence_from_partition",
    "in_durfee_class",
    "split_strict",
    "unsplit_strict",
    "is_valid_split",
    "count_strict_by_parts_rank",
    "count_strict_by_parts_rank_formula",
]


class InvalidSequence(ValueError):
    """Sequence unusable for the board filling (empty or wrong offset)."""


class NotInDurfeeClass(ValueError):
    """Partition outside every class with the requested offset."""


class NotInSplitImage(ValueError):
    """Pair that no strict partition splits into."""


class InternalInvariantViolation(RuntimeError):
    """A structural guarantee failed; signals a bug, not bad input."""


def _pass_cells(d: ABSequence) -> list[int]:
    """Cells placed in block i by pass i: c_1 = d_1, c_i = d_i - c_{i-1}."""
    cells = []
    prev = 0
    for entry in d.entries:
        prev = entry - prev
        cells.append(prev)
    return cells


def partition_from_sequence(a: int, d: ABSequence) -> Partition:
    """Map a sequence with offset ``a`` to the partition it double-covers.

    Row j of the result is the row block's cells plus one cell for every
    column block reaching down to row j.  The weight is exactly half the
    sequence weight.
    """
    if d.is_empty:
        raise InvalidSequence("the empty sequence covers no board")
    if d.a != a:
        raise InvalidSequence(f"sequence has offset {d.a}, expected {a}")
    cells = _pass_cells(d)
    col_heights = cells[1::2]
    parts = []
    for j in range(1, (len(cells) + 1) // 2 + 1):
        parts.append(cells[2 * j - 2] + sum(1 for h in col_heights if h >= j))
    while parts and parts[-1] == 0:
        parts.pop()
    return Partition(tuple(parts))


def _block_cells(a: int, i: int) -> list[tuple[int, int]]:
    """Cells of block i in fill order (row, column), both 1-based."""
    if i % 2:
        j = (i + 1) // 2
        return [(j, col) for col in range(1, a + j + 1)]
    half = i // 2
    return [(row, a + half + 1) for row in range(1, half + 1)]


def partition_from_sequence_by_filling(a: int, d: ABSequence) -> Partition:
    """Slow oracle: replay the literal filling and read the covered cells.

    Each pass doubles the previous block's singly covered cells (left to
    right along rows, top down along columns), then single-covers the front
    of its own block.  Raises if a pass cannot complete, any cell ends up
    singly covered, or the doubled region is not a left-justified diagram.
    """
    if d.is_empty:
        raise InvalidSequence("the empty sequence covers no board")
    if d.a != a:
        raise InvalidSequence(f"sequence has offset {d.a}, expected {a}")
    cover: dict[tuple[int, int], int] = {}
    prev_single: list[tuple[int, int]] = []
    for i, entry in enumerate(d.entries, start=1):
        if entry < len(prev_single):
            raise InternalInvariantViolation(
                f"pass {i} cannot double the {len(prev_single)} cells left singly covered"
            )
        for cell in prev_single:
            cover[cell] = 2
        budget = entry - len(prev_single)
        block = _block_cells(a, i)
        if budget > len(block):
            raise InternalInvariantViolation(f"pass {i} overflows block {i}")
        prev_single = block[:budget]
        for cell in prev_single:
            if cell in cover:
                raise InternalInvariantViolation(f"cell {cell} covered twice by one pass")
            cover[cell] = 1
    if prev_single:
        raise InternalInvariantViolation("singly covered cells remain after the last pass")

    rows: dict[int, set[int]] = {}
    for (r, c), count in cover.items():
        if count == 2:
            rows.setdefault(r, set()).add(c)
    parts = []
    for r in range(1, max(rows) + 1 if rows else 1):
        cs = rows.get(r, set())
        if cs != set(range(1, len(cs) + 1)):
            raise InternalInvariantViolation(f"row {r} of the covered region is not left-justified")
        parts.append(len(cs))
    while parts and parts[-1] == 0:
        parts.pop()
    try:
        return Partition(tuple(parts))
    except ValueError as exc:
        raise InternalInvariantViolation("covered region is not a partition diagram") from exc


def sequence_from_partition(a: int, p: Partition) -> ABSequence:
    """Inverse of :func:`partition_from_sequence`.

    Lays the diagram of ``p`` over the board (top-left corners aligned),
    counts the cells confined to each block, and rebuilds the entries as
    d_1 = c_1, d_i = c_{i-1} + c_i up to one block past the last nonempty
    one.  Requires the largest part to exceed ``a``.
    """
    if a < 0:
        raise ValueError("a must be nonnegative")
    if not p.parts or p.parts[0] <= a:
        raise NotInDurfeeClass(f"largest part must exceed {a}")
    num_rows = len(p.parts)
    width = p.parts[0]
    max_block = max(2 * num_rows - 1, 2 * (width - a - 1))
    confined = []
    for i in range(1, max_block + 1):
        if i % 2:
            j = (i + 1) // 2
            confined.append(min(p.part(j), a + j))
        else:
            half = i // 2
            col = a + half + 1
            confined.append(sum(1 for row in range(1, half + 1) if p.part(row) >= col))
    confined.append(0)
    last = max(i for i, c in enumerate(confined, start=1) if c > 0)
    entries = [confined[0]]
    entries.extend(confined[i - 1] + confined[i] for i in range(1, last + 1))
    try:
        seq = ABSequence(tuple(entries))
    except InvalidABSequence as exc:
        raise NotInDurfeeClass(f"{p} does not lie over any offset-{a} board filling") from exc
    if seq.a != a:
        raise NotInDurfeeClass(f"rebuilt sequence has offset {seq.a}, expected {a}")
    return seq


def in_durfee_class(p: Partition, a: int, b: int) -> bool:
    """Membership in the image class indexed by (a, b).

    The class fixes the a-Durfee rectangle at ceil(b/2) rows and adds a
    parity side condition on the row at that depth: for even b the row must
    strictly exceed a + b/2, for odd b it must equal a + (b+1)/2.
    """
    if a < 0:
        raise ValueError("a must be nonnegative")
    if b < 1:
        raise ValueError("b must be positive")
    depth = (b + 1) // 2
    if durfee_rectangle(p, a).rows != depth:
        return False
    if b % 2 == 0:
        return p.part(depth) > a + depth
    return p.part(depth) == a + depth


@dataclass(frozen=True)
class StaircaseSplit:
    """A triangular number plus a sequence remnant.

    ``height`` is the staircase height k with triangular = k(k+1)/2; it is
    derived from ``triangular`` and construction rejects non-triangular
    values.
    """

    triangular: int
    seq: ABSequence
    height: int = field(init=False)

    def __post_init__(self) -> None:
        if self.triangular < 0:
            raise ValueError("triangular part must be nonnegative")
        k = (math.isqrt(8 * self.triangular + 1) - 1) // 2
        if k * (k + 1) // 2 != self.triangular:
            raise ValueError(f"{self.triangular} is not a triangular number")
        object.__setattr__(self, "height", k)

    def __str__(self) -> str:
        return f"({self.triangular},{self.seq})"


def split_strict(s: StrictPartition) -> StaircaseSplit:
    """Split a strict partition into a balanced staircase and a remnant.

    Reading the shifted-diagram columns, the running alternating sums start
    0, -1, 1, -2, 2, ... for the first m columns, so the full sum A is
    first attained at k = 2A (A >= 0) or k = -2A - 1 (A < 0); the columns
    past k then form a valid sequence, and the staircase 1..k carries
    k(k+1)/2 cells.  Weight is preserved: |s| = triangular + remnant weight.
    """
    profile = columns(s)
    total = sum(h if j % 2 else -h for j, h in enumerate(profile.cols))
    k = 2 * total if total >= 0 else -2 * total - 1
    if k > len(s.parts):
        raise InternalInvariantViolation(f"split point {k} exceeds the {len(s.parts)} rows of {s}")
    try:
        seq = ABSequence(profile.cols[k:])
    except InvalidABSequence as exc:
        raise InternalInvariantViolation(f"columns of {s} past {k} are not a valid sequence") from exc
    return StaircaseSplit(k * (k + 1) // 2, seq)


def is_valid_split(img: StaircaseSplit) -> bool:
    """Whether some strict partition splits into this pair.

    True when the remnant is empty, opens exactly one step above the
    staircase (offset equal to the height), or opens at or below it with a
    length-1 staircase run.
    """
    if img.seq.is_empty:
        return True
    if img.seq.a == img.height:
        return True
    return img.seq.a <= img.height - 1 and img.seq.b == 1


def unsplit_strict(img: StaircaseSplit) -> StrictPartition:
    """Rebuild the strict partition from a valid split.

    Prepends columns of heights 1, 2, ..., height to the remnant's entries
    and reads the shifted diagram back off the combined profile.
    """
    if not is_valid_split(img):
        raise NotInSplitImage(f"{img} is not the split of any strict partition")
    cols = tuple(range(1, img.height + 1)) + img.seq.entries
    return from_columns(ColumnSequence(cols))


def count_strict_by_parts_rank(k: int, m: int, n: int) -> int:
    """Strict partitions of ``n`` with exactly ``m`` parts and BG-rank ``k``,
    by exhaustive enumeration."""
    return sum(1 for s in enumerate_strict_partitions(n, num_parts=m) if bg_rank(s) == k)


def count_strict_by_parts_rank_formula(k: int, m: int, n: int) -> int:
    """Closed-form counterpart of :func:`count_strict_by_parts_rank`.

    A strict partition with BG-rank k splits off a staircase of height
    2k-1 (k > 0) or -2k (k <= 0), weight k(2k-1).  When m exceeds that
    height the leftovers form a sequence family cell; when m equals it they
    pair up, giving partitions of half the leftover weight with bounded
    largest part.  Out-of-range (k, m, n) combinations count zero.
    """
    if m < 0:
        return 0
    height = 2 * k - 1 if k > 0 else -2 * k
    if m < height:
        return 0
    if n < m * (m + 1) // 2:
        return 0
    leftover = n - k * (2 * k - 1)
    if leftover < 0 or leftover % 2:
        return 0
    half = leftover // 2
    if m == height:
        if height == 0:
            return 1 if half == 0 else 0
        return len(enumerate_partitions(half, max_part=height))
    return len(enumerate_sequences(height, m - height, half))
