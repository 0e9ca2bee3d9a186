"""Partitions, Young diagram cells, and ribbons.

Cells use matrix coordinates: ``row`` grows southward, ``col`` grows
eastward, both 1-based.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, NamedTuple


class ShapeError(ValueError):
    """Raised for malformed partitions or cell sets."""


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p < 1:
                raise ShapeError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ShapeError(f"partition parts must weakly decrease: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def n(self) -> int:
        return sum(self)

    def cells(self) -> list["Cell"]:
        """Cells of the Young diagram in row-major order."""
        return [Cell(r, c) for r, length in enumerate(self, 1) for c in range(1, length + 1)]

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


class Cell(NamedTuple):
    row: int
    col: int


def parse_partition(text: str) -> Partition:
    """Parse ``"4,3,3,3,1"``; ``"-"`` (or an empty string) is the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return Partition()
    try:
        return Partition(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ShapeError(f"cannot parse partition {text!r}: {exc}") from None


def format_partition(p: Iterable[int]) -> str:
    p = tuple(p)
    return ",".join(map(str, p)) if p else "-"


def conjugate(p: Iterable[int]) -> Partition:
    p = tuple(p)
    if not p:
        return Partition()
    return Partition(sum(1 for part in p if part >= i) for i in range(1, p[0] + 1))


def hook_mu(n: int, d: int) -> Partition:
    """The hook ``(n - d, 1^d)``."""
    if n < 1 or not 0 <= d <= n - 1:
        raise ShapeError(f"hook (n-d, 1^d) needs 0 <= d <= n-1, got n={n}, d={d}")
    return Partition((n - d,) + (1,) * d)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order: ``(n)`` first, ``(1^n)`` last."""
    if n < 0:
        raise ShapeError(f"cannot partition a negative integer: {n}")
    return [Partition(p) for p in _partitions(n, n)]


def is_skew(cells: Iterable[tuple[int, int]]) -> bool:
    """True iff ``cells`` equals ``outer/inner`` for some partitions ``inner <= outer``.

    A finite cell set is a skew diagram exactly when it is convex for the
    product order on (row, col).
    """
    cells = {Cell(*c) for c in cells}
    if any(r < 1 or c < 1 for r, c in cells):
        return False
    rows: dict[int, list[int]] = {}
    for r, c in cells:
        rows.setdefault(r, []).append(c)
    for r, cols in rows.items():
        if max(cols) - min(cols) + 1 != len(cols):
            return False
    # row r spans [lo_r, hi_r]; convexity means both ends weakly decrease
    # going south, ignoring empty rows only when nothing spans across them
    present = sorted(rows)
    for r1, r2 in zip(present, present[1:]):
        lo1, hi1 = min(rows[r1]), max(rows[r1])
        lo2, hi2 = min(rows[r2]), max(rows[r2])
        if lo2 > lo1 or hi2 > hi1:
            return False
        if r2 != r1 + 1 and lo1 <= hi2:
            # a column meets both rows, so the gap rows would have to be filled
            return False
    return True


def is_ribbon(cells: Iterable[tuple[int, int]]) -> bool:
    """True iff ``cells`` is a skew diagram with no 2x2 square."""
    cells = {Cell(*c) for c in cells}
    if not is_skew(cells):
        return False
    return not any(
        (r + 1, c) in cells and (r, c + 1) in cells and (r + 1, c + 1) in cells
        for r, c in cells
    )


def ribbon_components(cells: Iterable[tuple[int, int]]) -> list[frozenset[Cell]]:
    """Edge-connected components of a ribbon, ordered southwest to northeast."""
    cells = {Cell(*c) for c in cells}
    if not is_ribbon(cells):
        raise ShapeError("ribbon_components needs a ribbon")
    seen: set[Cell] = set()
    components = []
    for start in sorted(cells):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        seen.add(start)
        while queue:
            r, c = queue.popleft()
            for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                nb = Cell(*nb)
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    comp.add(nb)
                    queue.append(nb)
        components.append(frozenset(comp))
    # components of a skew diagram occupy disjoint column ranges
    components.sort(key=lambda comp: min(c for _, c in comp))
    return components


def ribbon_path(component: Iterable[tuple[int, int]]) -> list[Cell]:
    """Cells of a connected ribbon from its southwest end to its northeast end.

    Each step of the path goes one box north or one box east.
    """
    comp = {Cell(*c) for c in component}
    # southwest end: lowest row, then leftmost in it
    current = max(comp, key=lambda cell: (cell.row, -cell.col))
    path = [current]
    while len(path) < len(comp):
        r, c = current
        east, north = Cell(r, c + 1), Cell(r - 1, c)
        if east in comp:
            current = east
        elif north in comp:
            current = north
        else:
            raise ShapeError("component is not a connected ribbon")
        path.append(current)
    return path
