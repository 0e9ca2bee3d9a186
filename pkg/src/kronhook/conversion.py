"""Conversion of colored tableaux between total orders.

A single switch transposes an adjacent pair a, b' of the order.  The cells
holding a or b' form a ribbon, and each connected component is refilled
with the same number of a's and b''s in the one way the new order allows.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .orders import (
    Letter,
    OrderError,
    SwitchStep,
    TotalOrder,
    adjacent_switch_path,
    all_orders,
)
from .shapes import Cell, ribbon_components, ribbon_path
from .tableaux import ColoredTableau, validate

__all__ = [
    "ConversionError",
    "SwitchStep",
    "refill_component",
    "move_refill",
    "switch",
    "convert",
    "convert_trace",
    "ConversionAtlas",
]


class ConversionError(ValueError):
    """Raised when a switch does not apply or a refill is impossible."""


def refill_component(
    component: Iterable[tuple[int, int]],
    unbarred_count: int,
    a: Letter,
    b: Letter,
    unbarred_first: bool,
) -> dict[Cell, Letter]:
    """The unique filling of a connected ribbon by ``a`` and barred ``b``.

    ``unbarred_first`` says whether a < b' in the order being filled for.
    Every cell but one end of the ribbon is forced; that end takes whichever
    letter makes the number of a's equal ``unbarred_count``.
    """
    path = ribbon_path(component)
    filling: dict[Cell, Letter] = {}
    if unbarred_first:
        # a box with a neighbour to the east holds a, one with a neighbour
        # to the north holds b'; the northeast end is free
        for here, nxt in zip(path, path[1:]):
            filling[here] = a if nxt.row == here.row else b
        free = path[-1]
    else:
        # a box with a neighbour to the west holds a, one with a neighbour
        # to the south holds b'; the southwest end is free
        for prev, here in zip(path, path[1:]):
            filling[here] = a if prev.row == here.row else b
        free = path[0]
    forced = sum(1 for x in filling.values() if x == a)
    if unbarred_count == forced + 1:
        filling[free] = a
    elif unbarred_count == forced:
        filling[free] = b
    else:
        raise ConversionError(
            f"a ribbon of {len(path)} boxes cannot hold {unbarred_count} copies of {a}"
        )
    return filling


def move_refill(filling: dict[Cell, Letter], a: Letter) -> dict[Cell, Letter]:
    """Switch one component from a < b' to b' < a by moving the a's.

    If the northeast box holds a, each a drops to the bottom of its column;
    otherwise each a slides to the right end of its row.
    """
    path = ribbon_path(filling)
    b = next((x for x in filling.values() if x != a), None)
    if b is None:
        return dict(filling)
    out = {}
    by_line: dict[int, list[Cell]] = {}
    drop = filling[path[-1]] == a
    for cell in filling:
        by_line.setdefault(cell.col if drop else cell.row, []).append(cell)
    for cells in by_line.values():
        # bottom of a column / right end of a row comes last
        cells.sort(key=lambda cell: cell.row if drop else cell.col)
        k = sum(1 for cell in cells if filling[cell] == a)
        for i, cell in enumerate(cells):
            out[cell] = a if i >= len(cells) - k else b
    return out


def switch(t: ColoredTableau, step: SwitchStep, check: bool = True) -> ColoredTableau:
    """Apply one switch, returning the tableau under the transposed order.

    With ``check`` the result is re-validated and compared against the
    move-the-a's description of the same switch.
    """
    try:
        target = step.apply(t.order)
    except OrderError as exc:
        raise ConversionError(str(exc)) from None
    a, b = step.unbarred, step.barred
    entries = t.entries
    cells = [cell for cell, x in entries.items() if x == a or x == b]
    if not cells:
        return ColoredTableau(t.shape, t.rows, target)
    rows = [list(row) for row in t.rows]
    for comp in ribbon_components(cells):
        source = {cell: entries[cell] for cell in comp}
        count = sum(1 for x in source.values() if x == a)
        new = refill_component(comp, count, a, b, unbarred_first=not step.unbarred_first)
        if check:
            moved = move_refill(source, a) if step.unbarred_first else move_refill(new, a)
            expected = new if step.unbarred_first else source
            if moved != expected:
                raise ConversionError(f"refill of {sorted(comp)} disagrees with the move rule")
        for (r, c), x in new.items():
            rows[r - 1][c - 1] = x
    if check:
        return validate(t.shape, rows, target)
    return ColoredTableau(t.shape, tuple(tuple(row) for row in rows), target)


def convert(
    t: ColoredTableau,
    target: TotalOrder,
    path: Sequence[SwitchStep] | None = None,
    check: bool = True,
) -> ColoredTableau:
    """Convert ``t`` to ``target`` along ``path`` (default: leftmost-first bubbling)."""
    return convert_trace(t, target, path, check)[-1]


def convert_trace(
    t: ColoredTableau,
    target: TotalOrder,
    path: Sequence[SwitchStep] | None = None,
    check: bool = True,
) -> list[ColoredTableau]:
    """Every intermediate tableau of a conversion, starting with ``t``."""
    if t.order.n != target.n:
        raise ConversionError("orders live on alphabets of different sizes")
    if path is None:
        path = adjacent_switch_path(t.order, target)
    trace = [t]
    for step in path:
        trace.append(switch(trace[-1], step, check))
    if trace[-1].order != target:
        raise ConversionError(f"path ends at {trace[-1].order}, not {target}")
    return trace


class ConversionAtlas:
    """A family of tableaux carried through every order on the alphabet.

    Starting from tableaux under one order, every switch between
    neighbouring orders is computed once for every tableau; the results are
    stored as index maps so that whole conversion paths compose cheaply.
    Building the atlas raises if some switch fails to be a bijection on
    the family.
    """

    def __init__(self, tableaux: Sequence[ColoredTableau], check: bool = True):
        if not tableaux:
            raise ValueError("an atlas needs at least one tableau")
        base = tableaux[0].order
        if any(t.order != base for t in tableaux):
            raise ValueError("atlas tableaux must share one order")
        self.orders = all_orders(base.n)
        self.order_index = {o: i for i, o in enumerate(self.orders)}
        self.states: dict[int, list[ColoredTableau]] = {self.order_index[base]: list(tableaux)}
        self._ids: dict[int, dict] = {self.order_index[base]: {t.rows: i for i, t in enumerate(tableaux)}}
        if len(self._ids[self.order_index[base]]) != len(tableaux):
            raise ValueError("atlas tableaux must be distinct")
        self.edges: dict[tuple[int, SwitchStep], np.ndarray] = {}
        frontier = [self.order_index[base]]
        while frontier:
            nxt = []
            for i in frontier:
                for step in _neighbour_steps(self.orders[i]):
                    j = self.order_index[step.apply(self.orders[i])]
                    images = [switch(t, step, check) for t in self.states[i]]
                    if j not in self.states:
                        self.states[j] = images
                        self._ids[j] = {t.rows: k for k, t in enumerate(images)}
                        if len(self._ids[j]) != len(images):
                            raise ConversionError(f"switch {step} is not injective")
                        nxt.append(j)
                    ids = self._ids[j]
                    try:
                        self.edges[i, step] = np.array([ids[t.rows] for t in images], dtype=np.int64)
                    except KeyError:
                        raise ConversionError(f"switch {step} leaves the family") from None
            frontier = nxt

    def follow(self, source: TotalOrder, path: Sequence[SwitchStep]) -> np.ndarray:
        """Map from tableau ids under ``source`` to ids at the end of ``path``."""
        i = self.order_index[source]
        mapping = np.arange(len(self.states[i]))
        for step in path:
            mapping = self.edges[i, step][mapping]
            i = self.order_index[step.apply(self.orders[i])]
        return mapping

    def tableaux(self, order: TotalOrder) -> list[ColoredTableau]:
        return self.states[self.order_index[order]]

    def index(self, t: ColoredTableau) -> int:
        return self._ids[self.order_index[t.order]][t.rows]


def _neighbour_steps(order: TotalOrder) -> list[SwitchStep]:
    seq = order.sequence
    steps = []
    for x, y in zip(seq, seq[1:]):
        if x.barred != y.barred:
            steps.append(SwitchStep(y, x, False) if x.barred else SwitchStep(x, y, True))
    return steps
