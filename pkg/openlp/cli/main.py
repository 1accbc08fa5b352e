"""
Command-line entry point.
Exit status: 0 for yes/success, 1 for no, 2 for errors.
"""

from collections.abc import Callable
from typing import Any

import click

from openlp.cli.commands import run
from openlp.cli.error_handler import CommandFailed, run_guarded
from openlp.cli.models.requests import CommandRequest
from openlp.core.config import Settings
from openlp.core.logger import get_logger, setup_logging

logger = get_logger(__name__)

INPUTS = click.argument(
    "inputs", nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False)
)
QUERY = click.option("-q", "--query", required=True, help="Ground query, e.g. 'q and not p(a)'")


def common_options(command: Callable[..., Any]) -> Callable[..., Any]:
    """Options shared by every subcommand."""
    options = [
        click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON"),
        click.option("--depth", type=click.IntRange(min=0), help="Term nesting bound"),
        click.option("--workers", type=click.IntRange(1, 64), help="Oracle worker processes"),
        click.option(
            "--strategy",
            type=click.Choice(["propagate", "brute-force"]),
            help="Stable-model enumeration strategy",
        ),
        click.option("--timing", is_flag=True, help="Add wall time to the statistics"),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def execute(ctx: click.Context, subcommand: str, **flags: Any) -> None:
    settings: Settings = ctx.obj
    as_json = flags.pop("as_json", False)

    def action() -> Any:
        req = CommandRequest(
            subcommand=subcommand, output="json" if as_json else "text", **flags
        )
        return run(req, settings)

    try:
        report = run_guarded(action)
    except CommandFailed as failure:
        ctx.exit(failure.exit_code)
    click.echo(report.to_json() if as_json else report.to_text(), nl=as_json)
    ctx.exit(report.exit_code)


@click.group()
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG logs on stderr")
@click.version_option(package_name="openlp")
@click.pass_context
def cli(ctx: click.Context, verbose: int) -> None:
    """Stable models, open inference and abduction for normal logic programs."""
    try:
        settings = run_guarded(Settings)
    except CommandFailed as failure:
        ctx.exit(failure.exit_code)
    level = {0: None, 1: "INFO"}.get(verbose, "DEBUG")
    setup_logging(settings, level)
    ctx.obj = settings


@cli.command()
@INPUTS
@common_options
@click.pass_context
def solve(ctx: click.Context, **flags: Any) -> None:
    """Print every stable model of a program."""
    execute(ctx, "solve", **flags)


@cli.command()
@INPUTS
@QUERY
@click.option(
    "--mode", type=click.Choice(["credulous", "skeptical"]), default="credulous", show_default=True
)
@common_options
@click.pass_context
def query(ctx: click.Context, **flags: Any) -> None:
    """Decide credulous or skeptical entailment of a query."""
    execute(ctx, "query", **flags)


@cli.command("open-query")
@INPUTS
@QUERY
@click.option(
    "--mode", type=click.Choice(["crd", "skp", "cs", "sc"]), default="crd", show_default=True
)
@click.option(
    "--engine", type=click.Choice(["oracle", "pi"]), default="oracle", show_default=True
)
@common_options
@click.pass_context
def open_query(ctx: click.Context, **flags: Any) -> None:
    """Decide open inference over all completions of an open program."""
    execute(ctx, "open-query", **flags)


@cli.command()
@INPUTS
@click.option("--ground", is_flag=True, help="Ground the translation")
@click.option("--unfold", is_flag=True, help="Unfold the translation (no #fresh symbols)")
@click.option("--readable", is_flag=True, help="Show generated symbols under display names")
@common_options
@click.pass_context
def translate(ctx: click.Context, **flags: Any) -> None:
    """Print the normal program an open program translates to."""
    execute(ctx, "translate", **flags)


@cli.command()
@INPUTS
@QUERY
@click.option("--budget", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--skeptical-consequence", is_flag=True, help="Q must hold in every model")
@click.option(
    "--allow-inconsistent",
    "allow_inconsistent",
    is_flag=True,
    help="With --skeptical-consequence, accept explanations without stable models",
)
@click.option("--modulo-skolems", is_flag=True, help="One explanation per skolem renaming")
@common_options
@click.pass_context
def abduce(ctx: click.Context, allow_inconsistent: bool, **flags: Any) -> None:
    """Find explanations of a query within a skolem budget."""
    execute(ctx, "abduce", require_consistent=not allow_inconsistent, **flags)


@cli.command()
@INPUTS
@click.option("--open", "open_", is_flag=True, help="Look for a consistent completion")
@common_options
@click.pass_context
def check(ctx: click.Context, open_: bool, **flags: Any) -> None:
    """Check that a program (or some completion of an open program) is consistent."""
    execute(ctx, "check", open=open_, **flags)


if __name__ == "__main__":
    cli()
