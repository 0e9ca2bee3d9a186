import pytest

from kronhook.orders import parse_order, small_bar_order
from kronhook.shapes import partitions_of
from kronhook.tableaux import all_tableaux, parse_tableau

FIG3_TEXT = [
    "1' 1 1 2'\n1' 2' 2\n1 2 3'\n2 3' 3\n3",
    "1' 2' 1 1\n1' 2' 2\n1 2 3'\n2 3' 3\n3",
    "1' 2' 1 1\n1' 2' 3'\n1 3' 2\n2 2 3\n3",
    "1' 2' 3' 1\n1' 2' 1\n3' 1 2\n2 2 3\n3",
]
FIG3_ORDERS = [
    "1' 1 2' 2 3' 3",
    "1' 2' 1 2 3' 3",
    "1' 2' 1 3' 2 3",
    "1' 2' 3' 1 2 3",
]

_acceptance_lines: list[str] = []


@pytest.fixture
def fig3():
    return [parse_tableau(text, parse_order(o)) for text, o in zip(FIG3_TEXT, FIG3_ORDERS)]


@pytest.fixture
def fig3_first(fig3):
    return fig3[0]


@pytest.fixture
def remark1():
    """(T under 1 < 1' < 2 < 2', T under 1 < 1' < 2' < 2)."""
    lt = parse_order("1 1' 2 2'")
    prec = parse_order("1 1' 2' 2")
    return parse_tableau("1 2\n1' 2'", lt), parse_tableau("1 2'\n1' 2", prec)


@pytest.fixture(scope="session")
def atlas3():
    """Every tableau with at most six boxes on the n = 3 alphabet, through all 20 orders."""
    from kronhook.conversion import ConversionAtlas

    base = small_bar_order(3)
    family = [t for k in range(7) for shape in partitions_of(k) for t in all_tableaux(shape, base)]
    return ConversionAtlas(family)


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    label = {}

    def record(text):
        label["text"] = text

    yield record
    rep = getattr(request.node, "rep_call", None)
    if "text" in label:
        status = "PASS" if rep is not None and rep.passed else "FAIL"
        _acceptance_lines.append(f"[{status}] {label['text']}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)

