import pytest

from supertropical.element import parse_scalar
from supertropical.matrix import Matrix, Vector, parse_stm


def M(text: str) -> Matrix:
    """Rows separated by ``;``."""
    return parse_stm(text.replace(";", "\n"))


def E(text):
    return parse_scalar(str(text))


def V(text: str) -> Vector:
    return Vector(parse_scalar(t) for t in text.split())


@pytest.fixture
def rng():
    import random

    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
