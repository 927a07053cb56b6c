import pytest

from monoid_duality import corpus

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def standard_corpus():
    return corpus.standard_corpus()


@pytest.fixture(scope="session")
def trivial():
    return corpus.cyclic_group(1)


@pytest.fixture(scope="session")
def c2():
    return corpus.cyclic_group(2)


@pytest.fixture(scope="session")
def dot_mu2():
    return corpus.dot_mu(2)


@pytest.fixture(scope="session")
def i2():
    return corpus.symmetric_inverse_monoid(2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
