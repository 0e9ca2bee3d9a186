"""Independent brute-force references used by the tests."""
from __future__ import annotations

import random
from itertools import product
from math import factorial, prod

from kronhook.orders import Letter, TotalOrder
from kronhook.shapes import Partition, conjugate, partitions_of
from kronhook.tableaux import ColoredTableau, TableauError, validate


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def hook_length_dimension(lam) -> int:
    lam = Partition(lam)
    lam_c = conjugate(lam)
    hooks = prod(
        lam[r - 1] - c + lam_c[c - 1] - r + 1
        for r, c in lam.cells()
    )
    return factorial(lam.n) // hooks


def brute_force_tableaux(shape, order: TotalOrder, max_value: int):
    """Every valid filling found by trying all letter assignments."""
    shape = Partition(shape)
    letters = [x for x in order.sequence if x.value <= max_value]
    found = []
    for combo in product(letters, repeat=shape.n):
        rows, i = [], 0
        for length in shape:
            rows.append(combo[i:i + length])
            i += length
        try:
            found.append(validate(shape, rows, order))
        except TableauError:
            pass
    return found


def random_tableau(rng: random.Random, shape, order: TotalOrder, max_value: int | None = None) -> ColoredTableau:
    """A random valid filling, built cell by cell with restarts on dead ends."""
    shape = Partition(shape)
    m = order.n if max_value is None else max_value
    letters = [x for x in order.sequence if x.value <= m]
    rank = order.rank
    while True:
        rows: list[list[Letter]] = []
        stuck = False
        for length in shape:
            row: list[Letter] = []
            for c in range(length):
                left = row[c - 1] if c else None
                above = rows[-1][c] if rows else None
                options = [
                    x for x in letters
                    if (left is None or rank(x) > rank(left) or (x == left and not x.barred))
                    and (above is None or rank(x) > rank(above) or (x == above and x.barred))
                ]
                if not options:
                    stuck = True
                    break
                row.append(rng.choice(options))
            if stuck:
                break
            rows.append(row)
        if not stuck:
            return validate(shape, rows, order)


def random_partition(rng: random.Random, n: int) -> Partition:
    return rng.choice(partitions_of(n))


def flags_by_order(atlas):
    """flags[order][i] = (u ballot, v alpha-ballot, w ballot) of base tableau i carried to ``order``.

    Base tableaux are those of the atlas under the small bar order.
    """
    import numpy as np

    from kronhook.orders import adjacent_switch_path, small_bar_order
    from kronhook.words import word_flags

    base = small_bar_order(atlas.orders[0].n)
    out = {}
    for order in atlas.orders:
        mapping = atlas.follow(base, adjacent_switch_path(base, order))
        local = np.array([word_flags(t) for t in atlas.tableaux(order)], dtype=bool)
        out[order] = local[mapping]
    return out
