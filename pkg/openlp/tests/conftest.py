"""
Shared fixtures: the running examples of open programs and abduction.
"""

import pytest

from openlp.abduction.framework import AbductionFramework, parse_framework
from openlp.syntax.parser import parse_open_program
from openlp.syntax.terms import OpenProgram

# p(a) holds; q holds iff some individual other than a exists
EXAMPLE_PROGRAM = "p(a). q :- not p(X)."
EXAMPLE_OPEN = EXAMPLE_PROGRAM + " #fresh b/0. #open r/1."
EXAMPLE_CLOSED_DOMAIN = EXAMPLE_PROGRAM + " #open r/1."

# q is explained only by abducing r of a new individual
DIAGNOSIS_FRAMEWORK = "p(a). q :- r(X), not p(X). #open r/1."


@pytest.fixture
def example_open() -> OpenProgram:
    return parse_open_program(EXAMPLE_OPEN)


@pytest.fixture
def example_closed_domain() -> OpenProgram:
    return parse_open_program(EXAMPLE_CLOSED_DOMAIN)


@pytest.fixture
def diagnosis() -> AbductionFramework:
    return parse_framework(DIAGNOSIS_FRAMEWORK)


@pytest.fixture
def write_program(tmp_path):
    """Write program text to a file and return its path."""

    def write(text: str, name: str = "program.lp") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write
