import pytest

from arbor.trees import deserialize

# The three trees pictured at the start: one invalid, one of size 5, one of
# size 13 with two gray edges.
LEFT = "(G()B(B()B()))"
MIDDLE = "(B(B()B())B()B())"
RIGHT = "(B(B(B()B())B()B())B(B()B())G(B()B())G(B()B()))"


@pytest.fixture
def left_tree():
    return deserialize(LEFT)


@pytest.fixture
def middle_tree():
    return deserialize(MIDDLE)


@pytest.fixture
def right_tree():
    return deserialize(RIGHT)


# Lines printed after the run by the acceptance suite, one per criterion.
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
