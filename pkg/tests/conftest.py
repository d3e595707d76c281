import pytest

from ntdice import DiceSet, Tournament

TRIPLE = {"A": [9, 5, 1], "B": [8, 4, 3], "C": [7, 6, 2]}
FOUR_DICE = {"A": [12, 6, 1], "B": [11, 5, 4], "C": [10, 8, 2], "D": [9, 7, 3]}
FIVE_DICE = {
    "A": [15, 7, 1],
    "B": [14, 6, 5],
    "C": [13, 10, 2],
    "D": [12, 9, 3],
    "E": [11, 8, 4],
}
SEVEN_SIDED = {
    "A": [35, 27, 25, 17, 11, 10, 2],
    "B": [31, 29, 24, 16, 15, 7, 5],
    "C": [33, 26, 23, 20, 12, 9, 3],
    "D": [34, 28, 22, 19, 13, 8, 1],
    "E": [32, 30, 21, 18, 14, 6, 4],
}
CYCLE5 = [("A", "B"), ("B", "C"), ("C", "D"), ("D", "E"), ("E", "A")]
CHORDS5 = [("A", "C"), ("B", "D"), ("B", "E"), ("C", "E"), ("A", "D")]


def brute_victories(a, b):
    return sum(1 for x in a for y in b if x > y)


@pytest.fixture
def triple():
    return DiceSet.from_faces(TRIPLE)


@pytest.fixture
def five_dice():
    return DiceSet.from_faces(FIVE_DICE)


@pytest.fixture
def seven_sided():
    return DiceSet.from_faces(SEVEN_SIDED)


@pytest.fixture
def tournament5():
    return Tournament(tuple("ABCDE"), frozenset(CYCLE5 + CHORDS5))


@pytest.fixture
def three_cycle():
    return Tournament(("A", "B", "C"), frozenset([("A", "B"), ("B", "C"), ("C", "A")]))


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line for an acceptance criterion."""
    entry = {"name": request.node.name, "detail": ""}
    ACCEPTANCE_LINES.append(entry)

    def note(detail):
        entry["detail"] = detail

    yield note
    rep = getattr(request.node, "rep_call", None)
    entry["passed"] = rep is not None and rep.passed


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for entry in ACCEPTANCE_LINES:
        status = "PASS" if entry.get("passed") else "FAIL"
        terminalreporter.write_line(f"{status}  {entry['name']}  {entry['detail']}")
