"""The doubled alphabet {1..n, 1'..n'} and its compatible total orders.

A barred letter is written with a trailing apostrophe, so ``2'`` is the
barred 2.  A total order is compatible when the unbarred letters appear as
1, 2, ..., n and the barred letters as 1', 2', ..., n'; it is therefore
determined by its interleaving mask.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, NamedTuple, Sequence

MAX_ENUMERABLE_N = 8


class OrderError(ValueError):
    """Raised for malformed letters and orders."""


class Letter(NamedTuple):
    value: int
    barred: bool = False

    def __str__(self) -> str:
        return f"{self.value}'" if self.barred else str(self.value)

    def toggled(self) -> "Letter":
        return Letter(self.value, not self.barred)


def parse_letter(text: str) -> Letter:
    text = text.strip()
    barred = text.endswith("'")
    digits = text[:-1] if barred else text
    if not digits.isdigit() or int(digits) < 1:
        raise OrderError(f"bad letter {text!r}")
    return Letter(int(digits), barred)


@dataclass(frozen=True)
class TotalOrder:
    sequence: tuple[Letter, ...]
    _rank: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        seq = tuple(Letter(*x) for x in self.sequence)
        object.__setattr__(self, "sequence", seq)
        if len(seq) % 2:
            raise OrderError("an order lists both barred and unbarred letters")
        n = len(seq) // 2
        unbarred = [x.value for x in seq if not x.barred]
        barred = [x.value for x in seq if x.barred]
        if unbarred != list(range(1, n + 1)) or barred != list(range(1, n + 1)):
            raise OrderError(
                "order must list 1..n and 1'..n' each in increasing order: "
                + format_order_letters(seq)
            )
        object.__setattr__(self, "_rank", {x: i for i, x in enumerate(seq)})

    @classmethod
    def from_mask(cls, mask: Sequence[bool]) -> "TotalOrder":
        """Build the order whose ``i``-th letter is barred iff ``mask[i]``."""
        counts = {False: 0, True: 0}
        seq = []
        for barred in mask:
            counts[bool(barred)] += 1
            seq.append(Letter(counts[bool(barred)], bool(barred)))
        return cls(tuple(seq))

    @property
    def n(self) -> int:
        return len(self.sequence) // 2

    @property
    def mask(self) -> tuple[bool, ...]:
        return tuple(x.barred for x in self.sequence)

    def rank(self, letter: Letter) -> int:
        try:
            return self._rank[letter]
        except KeyError:
            raise OrderError(f"letter {letter} is outside an order on n={self.n}") from None

    def lt(self, x: Letter, y: Letter) -> bool:
        return self._rank[x] < self._rank[y]

    def le(self, x: Letter, y: Letter) -> bool:
        return self._rank[x] <= self._rank[y]

    def adjacent(self, x: Letter, y: Letter) -> bool:
        return abs(self.rank(x) - self.rank(y)) == 1

    def __iter__(self):
        return iter(self.sequence)

    def __len__(self) -> int:
        return len(self.sequence)

    def __str__(self) -> str:
        return format_order_letters(self.sequence)


def format_order_letters(letters: Iterable[Letter]) -> str:
    return " ".join(str(x) for x in letters)


def natural_order(n: int) -> TotalOrder:
    """1' < 1 < 2' < 2 < ... < n' < n."""
    if n < 1:
        raise OrderError("n must be positive")
    return TotalOrder.from_mask([True, False] * n)


def small_bar_order(n: int) -> TotalOrder:
    """All barred letters, then all unbarred ones."""
    if n < 1:
        raise OrderError("n must be positive")
    return TotalOrder.from_mask([True] * n + [False] * n)


ALIASES = {"natural": natural_order, "smallbar": small_bar_order}


def parse_order(text: str, n: int | None = None) -> TotalOrder:
    """Parse an explicit letter list (``"1' 1 2' 2"``) or an alias with ``n``."""
    text = text.strip()
    if text in ALIASES:
        if n is None:
            raise OrderError(f"order alias {text!r} needs an alphabet size")
        return ALIASES[text](n)
    order = TotalOrder(tuple(parse_letter(tok) for tok in text.replace(",", " ").split()))
    if n is not None and order.n != n:
        raise OrderError(f"order {text!r} has n={order.n}, expected {n}")
    return order


def all_orders(n: int) -> list[TotalOrder]:
    """Every compatible order, ordered by the positions of the barred letters."""
    if not 1 <= n <= MAX_ENUMERABLE_N:
        raise OrderError(f"all_orders is limited to 1 <= n <= {MAX_ENUMERABLE_N}")
    out = []
    for positions in combinations(range(2 * n), n):
        chosen = set(positions)
        out.append(TotalOrder.from_mask([i in chosen for i in range(2 * n)]))
    assert len(out) == comb(2 * n, n)
    return out


def _max_gap(order: TotalOrder, barred_gaps: bool) -> int:
    # largest run of one letter type strictly between consecutive letters of the other type
    positions = [i for i, x in enumerate(order.sequence) if x.barred != barred_gaps]
    return max((b - a - 1 for a, b in zip(positions, positions[1:])), default=0)


def is_unbarred_tight(order: TotalOrder) -> bool:
    """At most one barred letter strictly between i and i+1, for every i."""
    return _max_gap(order, barred_gaps=True) <= 1


def is_barred_tight(order: TotalOrder) -> bool:
    """At most one unbarred letter strictly between i' and (i+1)', for every i."""
    return _max_gap(order, barred_gaps=False) <= 1


class SwitchStep(NamedTuple):
    """Transpose the adjacent letters ``unbarred`` and ``barred``.

    ``unbarred_first`` describes the source order: True when a < b' there.
    """

    unbarred: Letter
    barred: Letter
    unbarred_first: bool

    def apply(self, order: TotalOrder) -> TotalOrder:
        i, j = order.rank(self.unbarred), order.rank(self.barred)
        if abs(i - j) != 1 or (i < j) != self.unbarred_first:
            raise OrderError(f"{self} does not match adjacent letters of {order}")
        seq = list(order.sequence)
        seq[i], seq[j] = seq[j], seq[i]
        return TotalOrder(tuple(seq))

    def reversed(self) -> "SwitchStep":
        return SwitchStep(self.unbarred, self.barred, not self.unbarred_first)

    def __str__(self) -> str:
        a, b = str(self.unbarred), str(self.barred)
        return f"{a} < {b} -> {b} < {a}" if self.unbarred_first else f"{b} < {a} -> {a} < {b}"


def _step_at(seq: Sequence[Letter], i: int) -> SwitchStep:
    x, y = seq[i], seq[i + 1]
    if x.barred:
        return SwitchStep(y, x, unbarred_first=False)
    return SwitchStep(x, y, unbarred_first=True)


def _inversions(seq: Sequence[Letter], target_rank: dict) -> list[int]:
    return [
        i for i in range(len(seq) - 1)
        if seq[i].barred != seq[i + 1].barred and target_rank[seq[i]] > target_rank[seq[i + 1]]
    ]


def adjacent_switch_path(source: TotalOrder, target: TotalOrder) -> list[SwitchStep]:
    """Bubble ``source`` toward ``target``, always fixing the leftmost misordered pair.

    The result is a shortest path; its length is the number of
    (unbarred, barred) pairs that the two orders disagree on.
    """
    return _switch_path(source, target, choose=lambda options: options[0])


def random_switch_path(source: TotalOrder, target: TotalOrder, rng: random.Random) -> list[SwitchStep]:
    """A shortest switch path chosen uniformly step by step with ``rng``."""
    return _switch_path(source, target, choose=rng.choice)


def reverse_switch_path(source: TotalOrder, target: TotalOrder) -> list[SwitchStep]:
    """Like :func:`adjacent_switch_path` but fixing the rightmost misordered pair."""
    return _switch_path(source, target, choose=lambda options: options[-1])


def _switch_path(source, target, choose) -> list[SwitchStep]:
    if source.n != target.n:
        raise OrderError("orders live on alphabets of different sizes")
    target_rank = target._rank
    seq = list(source.sequence)
    steps = []
    while True:
        options = _inversions(seq, target_rank)
        if not options:
            break
        i = choose(options)
        steps.append(_step_at(seq, i))
        seq[i], seq[i + 1] = seq[i + 1], seq[i]
    return steps


def apply_path(order: TotalOrder, path: Iterable[SwitchStep]) -> list[TotalOrder]:
    """All orders visited by ``path``, starting with ``order`` itself."""
    visited = [order]
    for step in path:
        visited.append(step.apply(visited[-1]))
    return visited
