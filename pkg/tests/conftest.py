import sys

import pytest

from profinite.framework import Language
from profinite.words import WordFramework, contains_symbol_dfa, even_length_dfa

AB = ("a", "b")


@pytest.fixture
def words():
    """{a,b}* with recogniser 0 = even length, recogniser 1 = contains an a."""
    return WordFramework(AB, [even_length_dfa(AB), contains_symbol_dfa(AB, "a")],
                         ["even-length", "contains-a"])


@pytest.fixture
def even():
    return Language(0, {"even"})


@pytest.fixture
def has_a():
    return Language(1, {"yes"})


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
