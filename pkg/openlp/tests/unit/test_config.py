import pytest
from pydantic import ValidationError

from openlp.core.config import Settings
from openlp.core.exceptions import (
    ArityError,
    EnumerationLimitError,
    OpenLPError,
    ParseError,
    ScopeError,
)

pytestmark = pytest.mark.unit


def test_defaults(monkeypatch):
    for name in ["OPENLP_MAX_ATOMS", "OPENLP_STRATEGY", "OPENLP_LOG_LEVEL"]:
        monkeypatch.delenv(name, raising=False)

    settings = Settings(_env_file=None)

    assert settings.MAX_ATOMS == 20
    assert settings.STRATEGY == "propagate"
    assert settings.WORKERS == 1
    assert settings.DEPTH_BOUND is None
    assert settings.LOG_LEVEL == "WARNING"


def test_environment_overrides_enumeration_cap(monkeypatch):
    monkeypatch.setenv("OPENLP_MAX_ATOMS", "12")

    assert Settings(_env_file=None).MAX_ATOMS == 12


def test_enumeration_cap_bounds(monkeypatch):
    monkeypatch.setenv("OPENLP_MAX_ATOMS", "0")

    with pytest.raises(ValidationError):
        Settings(_env_file=None)


def test_strategy_is_validated(monkeypatch):
    monkeypatch.setenv("OPENLP_STRATEGY", "Brute-Force")
    assert Settings(_env_file=None).STRATEGY == "brute-force"

    monkeypatch.setenv("OPENLP_STRATEGY", "guess")
    with pytest.raises(ValidationError):
        Settings(_env_file=None)


def test_log_level_is_normalized(monkeypatch):
    monkeypatch.setenv("OPENLP_LOG_LEVEL", "debug")

    assert Settings(_env_file=None).LOG_LEVEL == "DEBUG"


def test_error_codes_are_distinct():
    classes = [OpenLPError, ParseError, ArityError, ScopeError, EnumerationLimitError]

    assert len({cls.code for cls in classes}) == len(classes)
    assert issubclass(ArityError, ParseError)


def test_parse_error_position():
    error = ParseError("bad", details={"line": 3, "column": 7})

    assert (error.line, error.column) == (3, 7)
    assert ParseError("bad").line is None
