"""
Command implementations behind the CLI.
Each command turns a validated CommandRequest into a CommandReport.
"""

import time
from collections.abc import Callable
from pathlib import Path

from openlp.abduction.framework import SkolemBudget, abducibles_open, parse_framework
from openlp.abduction.generalized import (
    collapse_isomorphic,
    explain_credulous,
    gen_skeptical_consequence,
)
from openlp.cli.models.requests import CommandRequest
from openlp.cli.models.responses import CommandReport
from openlp.core.config import Settings
from openlp.core.logger import get_logger
from openlp.semantics.open_programs import OpenInferenceOracle, OpenMode
from openlp.semantics.stable import (
    EntailMode,
    Interpretation,
    StableModelSolver,
    entails_models,
)
from openlp.syntax.herbrand import (
    default_depth_bound,
    ground_program,
    herbrand_universe,
    signature,
)
from openlp.syntax.parser import parse_open_program, parse_program, parse_query
from openlp.syntax.terms import Program
from openlp.transform.export import export_text
from openlp.transform.pi import ground_translate, open_entails_via_pi, translate
from openlp.transform.unfold import unfold

logger = get_logger(__name__)


def read_inputs(paths: list[str]) -> str:
    return "\n".join(Path(path).read_text(encoding="utf-8") for path in paths)


def _depth(req: CommandRequest, settings: Settings, program: Program) -> int:
    if req.depth is not None:
        return req.depth
    if settings.DEPTH_BOUND is not None:
        return settings.DEPTH_BOUND
    return default_depth_bound(program)


def _explicit_depth(req: CommandRequest, settings: Settings) -> int | None:
    return req.depth if req.depth is not None else settings.DEPTH_BOUND


def _solve_program(
    req: CommandRequest, settings: Settings, program: Program
) -> list[Interpretation]:
    universe = herbrand_universe(
        signature(program), _depth(req, settings, program), settings.MAX_GROUND_RULES
    )
    pg = ground_program(program, universe, settings.MAX_GROUND_RULES)
    solver = StableModelSolver(settings.MAX_ATOMS, req.strategy or settings.STRATEGY)
    return solver.models(pg)


def _oracle(req: CommandRequest, settings: Settings, text: str) -> OpenInferenceOracle:
    return OpenInferenceOracle(
        parse_open_program(text),
        max_atoms=settings.MAX_ATOMS,
        strategy=req.strategy or settings.STRATEGY,
        workers=req.workers or settings.WORKERS,
        max_completions=settings.MAX_COMPLETIONS,
    )


def cmd_solve(req: CommandRequest, settings: Settings, text: str) -> CommandReport:
    models = _solve_program(req, settings, parse_program(text))
    return CommandReport(
        command=req.subcommand,
        models=[m.as_strings() for m in models],
        stats={"models": len(models)},
    )


def cmd_query(req: CommandRequest, settings: Settings, text: str) -> CommandReport:
    program = parse_program(text)
    q = parse_query(req.query or "")
    models = _solve_program(req, settings, program)
    mode = EntailMode(req.mode)
    return CommandReport(
        command=req.subcommand,
        verdict=entails_models(models, mode, q),
        stats={"models": len(models)},
    )


def cmd_open_query(req: CommandRequest, settings: Settings, text: str) -> CommandReport:
    q = parse_query(req.query or "")
    if req.engine == "pi":
        omega = parse_open_program(text)
        verdict = open_entails_via_pi(
            omega,
            OpenMode(req.mode),
            q,
            depth_bound=_explicit_depth(req, settings),
            max_atoms=settings.MAX_ATOMS,
            strategy=req.strategy or settings.STRATEGY,
        )
        return CommandReport(command=req.subcommand, verdict=verdict)

    oracle = _oracle(req, settings, text)
    verdict = oracle.entails(OpenMode(req.mode), q)
    return CommandReport(
        command=req.subcommand,
        verdict=verdict,
        stats={"completions": len(oracle.completions())},
    )


def cmd_translate(req: CommandRequest, settings: Settings, text: str) -> CommandReport:
    pi = translate(parse_open_program(text))
    if req.unfold:
        program = unfold(pi, _explicit_depth(req, settings), settings.MAX_GROUND_RULES)
    elif req.ground:
        program = ground_translate(pi, _explicit_depth(req, settings), settings.MAX_GROUND_RULES)
    else:
        program = pi.program
    exported = export_text(program, pi.names, readable=req.readable)
    return CommandReport(
        command=req.subcommand,
        program=exported,
        stats={"rules": len(program.normalized())},
    )


def cmd_abduce(req: CommandRequest, settings: Settings, text: str) -> CommandReport:
    fr = parse_framework(text)
    budget = SkolemBudget(req.budget)
    q = parse_query(req.query or "")
    strategy = req.strategy or settings.STRATEGY
    workers = req.workers or settings.WORKERS
    if req.skeptical_consequence:
        found = gen_skeptical_consequence(
            fr, budget, q, req.require_consistent, settings.MAX_ATOMS, strategy, workers
        )
    else:
        found = explain_credulous(fr, budget, q, settings.MAX_ATOMS, strategy, workers)
    if req.modulo_skolems:
        found = collapse_isomorphic(found)
    return CommandReport(
        command=req.subcommand,
        verdict=bool(found),
        explanations=[e.as_strings() for e in found],
        minimal=[e.minimal for e in found],
        stats={
            "abducibles": len(abducibles_open(fr, budget)),
            "explanations": len(found),
        },
    )


def cmd_check(req: CommandRequest, settings: Settings, text: str) -> CommandReport:
    if req.open:
        oracle = _oracle(req, settings, text)
        return CommandReport(
            command=req.subcommand,
            verdict=oracle.has_consistent_completion(),
            stats={"completions": len(oracle.completions())},
        )
    models = _solve_program(req, settings, parse_program(text))
    return CommandReport(
        command=req.subcommand, verdict=bool(models), stats={"models": len(models)}
    )


COMMANDS: dict[str, Callable[[CommandRequest, Settings, str], CommandReport]] = {
    "solve": cmd_solve,
    "query": cmd_query,
    "open-query": cmd_open_query,
    "translate": cmd_translate,
    "abduce": cmd_abduce,
    "check": cmd_check,
}


def run(req: CommandRequest, settings: Settings | None = None) -> CommandReport:
    """
    Execute one command.

    Returns:
        The report; its exit_code is 0 for yes/success and 1 for no

    Raises:
        OpenLPError: On parse failures, scope violations or exceeded caps
    """
    settings = settings or Settings()
    started = time.perf_counter()
    logger.info(f"Running {req.subcommand} on {len(req.inputs)} file(s)")

    report = COMMANDS[req.subcommand](req, settings, read_inputs(req.inputs))

    if req.timing:
        report.stats["wall_time"] = round(time.perf_counter() - started, 6)
    return report
