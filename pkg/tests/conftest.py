import pytest

from lucasian.modnum import SpecialForm

# (h, n, sign): a spread of shapes, h = 1 included, both signs
TEST_FORMS = [
    (1, 7, -1), (1, 7, 1), (3, 11, -1), (3, 11, 1), (5, 14, -1), (1, 17, -1),
    (1, 31, -1), (101, 40, 1), (511, 64, -1), (12345, 200, 1), (3, 1000, -1),
]


@pytest.fixture(params=TEST_FORMS, ids=lambda t: f"{t[0]}*2^{t[1]}{'+' if t[2] > 0 else '-'}1")
def form(request):
    return SpecialForm(*request.param)


@pytest.fixture
def m6143():
    return SpecialForm(3, 11, -1)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
