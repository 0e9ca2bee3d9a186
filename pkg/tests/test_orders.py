import random
from math import comb

import pytest

from kronhook.orders import (
    Letter,
    OrderError,
    SwitchStep,
    TotalOrder,
    adjacent_switch_path,
    all_orders,
    apply_path,
    is_barred_tight,
    is_unbarred_tight,
    natural_order,
    parse_letter,
    parse_order,
    random_switch_path,
    reverse_switch_path,
    small_bar_order,
)


def test_letters():
    assert parse_letter("2'") == Letter(2, True)
    assert str(Letter(3)) == "3"
    assert str(Letter(3, True)) == "3'"
    with pytest.raises(OrderError):
        parse_letter("0")
    with pytest.raises(OrderError):
        parse_letter("a'")


def test_named_orders():
    assert str(natural_order(1)) == "1' 1"
    assert str(natural_order(2)) == "1' 1 2' 2"
    assert str(natural_order(3)) == "1' 1 2' 2 3' 3"
    assert str(small_bar_order(1)) == "1' 1"
    assert str(small_bar_order(2)) == "1' 2' 1 2"
    assert str(small_bar_order(3)) == "1' 2' 3' 1 2 3"


def test_parse_order_aliases_and_lists():
    assert parse_order("natural", 3) == natural_order(3)
    assert parse_order("smallbar", 2) == small_bar_order(2)
    assert parse_order("1' 1 2' 2") == natural_order(2)
    with pytest.raises(OrderError):
        parse_order("natural")
    with pytest.raises(OrderError):
        parse_order("2 1 1' 2'")
    with pytest.raises(OrderError):
        parse_order("1 1' 2'")


def test_order_comparisons():
    o = natural_order(2)
    assert o.lt(Letter(1, True), Letter(1))
    assert o.le(Letter(2), Letter(2))
    assert o.adjacent(Letter(1), Letter(2, True))
    assert not o.adjacent(Letter(1), Letter(2))


@pytest.mark.parametrize("n, count", [(1, 2), (2, 6), (3, 20)])
def test_all_orders_small(n, count):
    orders = all_orders(n)
    assert len(orders) == count
    assert len(set(orders)) == count


def test_all_orders_census():
    for n in range(1, 7):
        assert len(set(all_orders(n))) == comb(2 * n, n)
    with pytest.raises(OrderError):
        all_orders(9)


def test_tightness_examples():
    o = parse_order("1 1' 2' 2 3' 3")
    assert not is_unbarred_tight(o)
    assert is_barred_tight(o)
    assert not is_barred_tight(parse_order("1' 1 2 2'"))
    for n in range(1, 9):
        for named in (natural_order(n), small_bar_order(n)):
            assert is_unbarred_tight(named) and is_barred_tight(named)


def _count_between(order, first, second):
    i, j = order.rank(first), order.rank(second)
    return j - i - 1


def test_tightness_matches_definition():
    for n in range(1, 6):
        for o in all_orders(n):
            # letters strictly between i and i+1 are all barred, and vice versa
            ub = all(_count_between(o, Letter(i), Letter(i + 1)) <= 1 for i in range(1, n))
            bt = all(_count_between(o, Letter(i, True), Letter(i + 1, True)) <= 1 for i in range(1, n))
            assert is_unbarred_tight(o) == ub
            assert is_barred_tight(o) == bt


def test_switch_path_examples():
    o = natural_order(3)
    assert adjacent_switch_path(o, o) == []
    path = adjacent_switch_path(natural_order(3), small_bar_order(3))
    assert [str(x) for x in apply_path(natural_order(3), path)] == [
        "1' 1 2' 2 3' 3",
        "1' 2' 1 2 3' 3",
        "1' 2' 1 3' 2 3",
        "1' 2' 3' 1 2 3",
    ]
    assert adjacent_switch_path(natural_order(2), small_bar_order(2)) == [
        SwitchStep(Letter(1), Letter(2, True), True)
    ]


def test_switch_paths_reach_target():
    rng = random.Random(7)
    for n in range(1, 5):
        orders = all_orders(n)
        for source in orders:
            for target in orders:
                inversions = sum(
                    1
                    for x in source
                    for y in source
                    if not x.barred and y.barred and source.lt(x, y) != target.lt(x, y)
                )
                for path in (
                    adjacent_switch_path(source, target),
                    reverse_switch_path(source, target),
                    random_switch_path(source, target, rng),
                ):
                    visited = apply_path(source, path)
                    assert visited[-1] == target
                    assert len(path) == inversions
                    assert all(isinstance(o, TotalOrder) for o in visited)


def test_switch_step_rejects_mismatch():
    step = SwitchStep(Letter(1), Letter(2, True), True)
    with pytest.raises(OrderError):
        step.apply(small_bar_order(2))
    back = step.apply(natural_order(2))
    assert step.reversed().apply(back) == natural_order(2)


def test_from_mask_validation():
    with pytest.raises(OrderError):
        TotalOrder((Letter(2), Letter(1), Letter(1, True), Letter(2, True)))
    assert TotalOrder.from_mask([True, False]).mask == (True, False)
