"""Reading words of colored tableaux and ballot predicates.

Words are tuples of positive integers.  The barred word is stored with its
bars removed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .orders import TotalOrder, is_barred_tight, is_unbarred_tight
from .tableaux import ColoredTableau, content_profile

Word = tuple[int, ...]


def unbarred_word(t: ColoredTableau) -> Word:
    """Unbarred entries read right to left along rows, top row first."""
    return tuple(x.value for row in t.rows for x in reversed(row) if not x.barred)


def barred_word(t: ColoredTableau) -> Word:
    """Barred entries read bottom to top along columns, left column first."""
    width = t.shape[0] if t.shape else 0
    return tuple(
        x.value
        for c in range(1, width + 1)
        for x in reversed(t.column(c))
        if x.barred
    )


def total_word(t: ColoredTableau) -> Word:
    return unbarred_word(t) + barred_word(t)


def is_ballot(w: Iterable[int]) -> bool:
    """Every prefix has at least as many i's as (i+1)'s."""
    counts: dict[int, int] = {}
    for x in w:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def is_alpha_ballot(w: Iterable[int], alpha: Sequence[int]) -> bool:
    """Every prefix has #(i+1) - #i <= alpha_i - alpha_(i+1) for all i.

    The empty prefix counts, so an ``alpha`` that is not weakly decreasing
    admits no words at all.  ``alpha`` is zero-padded as needed.
    """
    w = tuple(w)
    alpha = list(alpha)
    if any(x < y for x, y in zip(alpha, alpha[1:])):
        return False
    top = max(w, default=0)
    alpha += [0] * (top + 1 - len(alpha))
    counts = [0] * (top + 2)
    for x in w:
        # adding x can only break the constraint between x - 1 and x
        counts[x] += 1
        if x > 1 and counts[x] - counts[x - 1] > alpha[x - 2] - alpha[x - 1]:
            return False
    return True


def format_word(w: Sequence[int]) -> str:
    """Digit string when every letter is a single digit, else comma-separated."""
    if all(x <= 9 for x in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))


@dataclass(frozen=True)
class InvarianceRow:
    order: TotalOrder
    tableau: ColoredTableau
    u_ballot: bool
    v_alpha_ballot: bool
    w_ballot: bool
    unbarred_tight: bool
    barred_tight: bool


def word_flags(t: ColoredTableau) -> tuple[bool, bool, bool]:
    """(u ballot, v alpha-ballot for the unbarred content, w ballot)."""
    alpha = content_profile(t).unbarred
    return (
        is_ballot(unbarred_word(t)),
        is_alpha_ballot(barred_word(t), alpha),
        is_ballot(total_word(t)),
    )


def ballot_invariance_report(t: ColoredTableau, orders: Iterable[TotalOrder]) -> list[InvarianceRow]:
    """Convert ``t`` to each order and tabulate its ballot and tightness flags."""
    from .conversion import convert

    rows = []
    for order in orders:
        image = convert(t, order)
        u_ok, v_ok, w_ok = word_flags(image)
        rows.append(InvarianceRow(
            order, image, u_ok, v_ok, w_ok,
            is_unbarred_tight(order), is_barred_tight(order),
        ))
    return rows


def invariance_violations(rows: Sequence[InvarianceRow]) -> list[str]:
    """Tight-order pairs in a report whose ballot flags disagree."""
    problems = []
    checks = (
        ("u", lambda r: r.unbarred_tight, lambda r: r.u_ballot),
        ("v", lambda r: r.barred_tight, lambda r: r.v_alpha_ballot),
        ("w", lambda r: r.unbarred_tight and r.barred_tight, lambda r: r.w_ballot),
    )
    for name, tight, flag in checks:
        values = {flag(r) for r in rows if tight(r)}
        if len(values) > 1:
            problems.append(f"{name} ballot flag differs across tight orders")
    return problems
