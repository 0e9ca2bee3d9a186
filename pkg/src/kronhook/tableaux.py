"""Colored tableaux: validation, statistics, enumeration, corner toggle."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .orders import Letter, OrderError, TotalOrder, natural_order, parse_letter
from .shapes import Cell, Partition


class TableauError(ValueError):
    """Base class for invalid colored tableaux."""


class ShapeMismatchError(TableauError):
    """Filled cells do not match the shape."""


class LetterRangeError(TableauError):
    """An entry is not a letter of the order's alphabet."""


class OrderViolationError(TableauError):
    """A row or column fails to weakly increase."""


class RepeatedUnbarredError(TableauError):
    """The same unbarred letter appears twice in one column."""


class RepeatedBarredError(TableauError):
    """The same barred letter appears twice in one row."""


@dataclass(frozen=True)
class ColoredTableau:
    shape: Partition
    rows: tuple[tuple[Letter, ...], ...]
    order: TotalOrder

    @property
    def entries(self) -> dict[Cell, Letter]:
        return {
            Cell(r, c): x
            for r, row in enumerate(self.rows, 1)
            for c, x in enumerate(row, 1)
        }

    def __getitem__(self, cell: tuple[int, int]) -> Letter:
        r, c = cell
        if r < 1 or c < 1:
            raise KeyError(cell)
        try:
            return self.rows[r - 1][c - 1]
        except IndexError:
            raise KeyError(cell) from None

    def column(self, c: int) -> list[Letter]:
        """Entries of column ``c`` from top to bottom."""
        return [row[c - 1] for row in self.rows if len(row) >= c]

    def with_entries(self, changes: Mapping[Cell, Letter], order: TotalOrder | None = None) -> "ColoredTableau":
        """Copy with some cells replaced, validated under ``order`` (default: same order)."""
        rows = [list(row) for row in self.rows]
        for (r, c), x in changes.items():
            rows[r - 1][c - 1] = x
        return validate(self.shape, rows, order or self.order)

    @property
    def southwest(self) -> Cell:
        return Cell(len(self.shape), 1)

    def __str__(self) -> str:
        return format_tableau(self)


@dataclass(frozen=True)
class ContentProfile:
    total: tuple[int, ...]
    unbarred: tuple[int, ...]
    color: int


def _coerce_rows(shape: Partition, entries) -> list[list]:
    if isinstance(entries, Mapping):
        cells = {Cell(*c) for c in entries}
        expected = set(shape.cells())
        if cells != expected:
            raise ShapeMismatchError(
                f"filled cells do not match shape {shape}: "
                f"missing {sorted(expected - cells)}, extra {sorted(cells - expected)}"
            )
        return [[entries[Cell(r, c)] for c in range(1, length + 1)] for r, length in enumerate(shape, 1)]
    rows = [list(row) for row in entries]
    if tuple(len(row) for row in rows) != tuple(shape):
        raise ShapeMismatchError(f"row lengths {[len(r) for r in rows]} do not match shape {shape}")
    return rows


def _as_letter(x) -> Letter:
    if isinstance(x, str):
        return parse_letter(x)
    return Letter(*x)


def validate(shape: Iterable[int], entries, order: TotalOrder) -> ColoredTableau:
    """Check a filling against ``order`` and return it as a tableau.

    ``entries`` is a mapping from cells to letters or a list of rows.
    """
    shape = Partition(shape)
    rows = _coerce_rows(shape, entries)
    try:
        rows = [[_as_letter(x) for x in row] for row in rows]
    except OrderError as exc:
        raise LetterRangeError(str(exc)) from None
    for row in rows:
        for x in row:
            if not 1 <= x.value <= order.n:
                raise LetterRangeError(f"letter {x} is outside an order on n={order.n}")
    rank = order.rank
    for r, row in enumerate(rows, 1):
        for c, x in enumerate(row, 1):
            if c > 1 and rank(row[c - 2]) > rank(x):
                raise OrderViolationError(f"row {r} decreases at column {c}: {row[c - 2]} > {x}")
            if r > 1 and rank(rows[r - 2][c - 1]) > rank(x):
                raise OrderViolationError(f"column {c} decreases at row {r}: {rows[r - 2][c - 1]} > {x}")
    for c in range(1, (shape[0] if shape else 0) + 1):
        col = [row[c - 1] for row in rows if len(row) >= c]
        unbarred = [x for x in col if not x.barred]
        if len(set(unbarred)) != len(unbarred):
            raise RepeatedUnbarredError(f"column {c} repeats an unbarred letter")
    for r, row in enumerate(rows, 1):
        barred = [x for x in row if x.barred]
        if len(set(barred)) != len(barred):
            raise RepeatedBarredError(f"row {r} repeats a barred letter")
    return ColoredTableau(shape, tuple(tuple(row) for row in rows), order)


def content_profile(t: ColoredTableau) -> ContentProfile:
    letters = [x for row in t.rows for x in row]
    m = max((x.value for x in letters), default=0)
    total = [0] * m
    unbarred = [0] * m
    color = 0
    for x in letters:
        total[x.value - 1] += 1
        if x.barred:
            color += 1
        else:
            unbarred[x.value - 1] += 1
    return ContentProfile(tuple(total), tuple(unbarred), color)


def toggle_southwest(t: ColoredTableau) -> ColoredTableau:
    """Flip the bar on the southwest corner of a natural-order tableau.

    Under the natural order i' and i are adjacent, so the flip keeps the
    filling valid.
    """
    if not t.shape:
        raise TableauError("the empty tableau has no southwest corner")
    if t.order != natural_order(t.order.n):
        raise TableauError("toggle_southwest needs a tableau under the natural order")
    cell = t.southwest
    return t.with_entries({cell: t[cell].toggled()})


# --- enumeration -----------------------------------------------------------

def iter_fillings(
    shape: Iterable[int],
    order: TotalOrder,
    content: Sequence[int] | None = None,
    color: int | None = None,
    ballot: bool = False,
    max_value: int | None = None,
) -> Iterator[tuple[Letter, ...]]:
    """Yield valid fillings as flat row-major letter tuples.

    ``content`` fixes the total content (occurrences of i or i'); when it is
    None, values range over ``1..max_value`` (default ``order.n``).
    ``color`` fixes the number of barred entries when given.  With
    ``ballot`` only fillings whose total reading word is a ballot sequence
    are produced, and the search is cut as soon as a completed row makes the
    unbarred reading word fail.
    """
    shape = Partition(shape)
    cells = shape.cells()
    size = len(cells)
    if content is not None:
        content = list(content)
        if sum(content) != size:
            return
        m = len(content)
        if m > order.n and any(content[order.n:]):
            return
        m = min(m, order.n)
    else:
        m = order.n if max_value is None else min(max_value, order.n)
    if color is not None and not 0 <= color <= size:
        return

    seq = order.sequence
    # candidate ranks, restricted to values 1..m
    usable = [k for k, x in enumerate(seq) if x.value <= m]
    values = [x.value for x in seq]
    barred = [x.barred for x in seq]
    row_len = list(shape)
    n_rows = len(row_len)
    grid = [[-1] * length for length in row_len]
    remaining = [0] + (content if content is not None else [size] * m)
    bars_left = [color if color is not None else size]
    plain_left = [size - color if color is not None else size]
    counts = [0] * (m + 2)  # ballot counts of the reading word so far

    def row_ballot(r: int) -> list[int] | None:
        # append row r of the unbarred word, right to left; None if ballot fails
        touched = []
        for k in reversed(grid[r]):
            if barred[k]:
                continue
            v = values[k]
            counts[v] += 1
            touched.append(v)
            if v > 1 and counts[v] > counts[v - 1]:
                for t in touched:
                    counts[t] -= 1
                return None
        return touched

    def barred_word_ballot() -> bool:
        if not row_len:
            return True
        touched = []
        ok = True
        for c in range(row_len[0]):
            for r in range(n_rows - 1, -1, -1):
                if c >= row_len[r]:
                    continue
                k = grid[r][c]
                if not barred[k]:
                    continue
                v = values[k]
                counts[v] += 1
                touched.append(v)
                if v > 1 and counts[v] > counts[v - 1]:
                    ok = False
                    break
            if not ok:
                break
        for t in touched:
            counts[t] -= 1
        return ok

    def place(idx: int):
        if idx == size:
            if ballot and not barred_word_ballot():
                return
            yield tuple(seq[k] for row in grid for k in row)
            return
        r, c = cells[idx]
        r -= 1
        c -= 1
        left = grid[r][c - 1] if c else -1
        above = grid[r - 1][c] if r else -1
        lo = max(left, above, 0)
        for k in usable:
            if k < lo:
                continue
            v = values[k]
            if not remaining[v]:
                continue
            if barred[k]:
                if k == left or not bars_left[0]:
                    continue
            elif k == above or not plain_left[0]:
                continue
            grid[r][c] = k
            remaining[v] -= 1
            if barred[k]:
                bars_left[0] -= 1
            else:
                plain_left[0] -= 1
            touched = []
            if ballot and c == row_len[r] - 1:
                touched = row_ballot(r)
            if touched is not None:
                yield from place(idx + 1)
                for t in touched:
                    counts[t] -= 1
            remaining[v] += 1
            if barred[k]:
                bars_left[0] += 1
            else:
                plain_left[0] += 1
        grid[r][c] = -1

    yield from place(0)


def _rows_from_flat(shape: Partition, flat: Sequence[Letter]) -> tuple[tuple[Letter, ...], ...]:
    rows, i = [], 0
    for length in shape:
        rows.append(tuple(flat[i:i + length]))
        i += length
    return tuple(rows)


def enumerate_tableaux(
    shape: Iterable[int],
    total_content: Sequence[int] | None,
    color: int | None,
    order: TotalOrder,
    filter: Callable[[ColoredTableau], bool] | None = None,
    *,
    ballot: bool = False,
) -> Iterator[ColoredTableau]:
    """All colored tableaux of ``shape`` with the given total content and color.

    Tableaux come out in row-major lexicographic order (ranks under
    ``order``).  ``None`` for content or color leaves that statistic free.
    ``ballot=True`` restricts to tableaux whose total reading word is a
    ballot sequence, pruning the search as it goes.
    """
    shape = Partition(shape)
    for flat in iter_fillings(shape, order, total_content, color, ballot):
        t = ColoredTableau(shape, _rows_from_flat(shape, flat), order)
        if filter is None or filter(t):
            yield t


def all_tableaux(shape: Iterable[int], order: TotalOrder, max_value: int | None = None) -> Iterator[ColoredTableau]:
    """Every colored tableau of ``shape`` using values up to ``max_value``."""
    shape = Partition(shape)
    for flat in iter_fillings(shape, order, max_value=max_value):
        yield ColoredTableau(shape, _rows_from_flat(shape, flat), order)


# --- text and JSON forms ---------------------------------------------------

def format_tableau(t: ColoredTableau) -> str:
    """One row per line, entries separated by spaces; the empty tableau is ``-``."""
    if not t.rows:
        return "-"
    return "\n".join(" ".join(str(x) for x in row) for row in t.rows)


def parse_tableau(text: str, order: TotalOrder) -> ColoredTableau:
    lines = [line.split() for line in text.strip().splitlines() if line.strip()]
    if lines == [["-"]]:
        lines = []
    return validate([len(row) for row in lines], lines, order)


def tableau_to_json(t: ColoredTableau) -> dict:
    return {
        "shape": list(t.shape),
        "rows": [[str(x) for x in row] for row in t.rows],
        "order": [str(x) for x in t.order],
    }


def tableau_from_json(data: Mapping) -> ColoredTableau:
    order = TotalOrder(tuple(parse_letter(x) for x in data["order"]))
    return validate(data["shape"], data["rows"], order)
