import pytest

from skeinpoly.rings import LaurentPoly


def P(text: str) -> LaurentPoly:
    """Polynomial in ``a, z`` from text."""
    return LaurentPoly.from_text(text, half=False)


def T(text: str) -> LaurentPoly:
    """Polynomial in ``t^(1/2)`` from text."""
    return LaurentPoly.from_text(text, half=True)


@pytest.fixture
def poly():
    return P


@pytest.fixture
def tpoly():
    return T


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
