"""
Global error handling for CLI commands.
Maps exceptions to one-line diagnostics on stderr and exit status 2.
"""

from collections.abc import Callable
from typing import TypeVar

import click
from pydantic import ValidationError

from openlp.core.exceptions import ConfigurationError, OpenLPError, ParseError
from openlp.core.logger import get_logger

logger = get_logger(__name__)

T = TypeVar("T")

ERROR_EXIT_CODE = 2


class CommandFailed(Exception):
    """Carries the exit status of a failed command up to the click layer."""

    def __init__(self, exit_code: int = ERROR_EXIT_CODE):
        self.exit_code = exit_code
        super().__init__(exit_code)


def format_diagnostic(error: OpenLPError) -> str:
    message = error.message
    if isinstance(error, ParseError) and error.line is not None:
        message = f"{message} (line {error.line}, column {error.column})"
    return f"error[{error.code}]: {message}"


def handle_openlp_error(error: OpenLPError) -> CommandFailed:
    logger.info(
        "Command failed",
        extra={"code": error.code, "error": error.message},
    )
    click.echo(format_diagnostic(error), err=True)
    return CommandFailed()


def handle_validation_error(error: ValidationError) -> CommandFailed:
    """Invalid flags or settings are reported as configuration errors."""
    messages = "; ".join(e["msg"] for e in error.errors())
    return handle_openlp_error(ConfigurationError(messages, details={"errors": error.errors()}))


def handle_generic_error(error: Exception) -> CommandFailed:
    logger.exception("Unhandled error")
    click.echo(f"error[{OpenLPError.code}]: {error}", err=True)
    return CommandFailed()


def run_guarded(action: Callable[[], T]) -> T:
    """
    Run action, turning every error into a diagnostic.

    Raises:
        CommandFailed: With exit status 2 when action raised
    """
    try:
        return action()
    except OpenLPError as e:
        raise handle_openlp_error(e) from e
    except ValidationError as e:
        raise handle_validation_error(e) from e
    except Exception as e:
        raise handle_generic_error(e) from e
