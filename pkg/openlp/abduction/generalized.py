"""
Generalized stable models, credulous explanations and generalized skeptical
consequences of an abduction framework under a skolem budget.

The theory T | E of an explanation E is grounded over the constants of T plus
the skolems E actually uses, so a budget of k lets an explanation postulate
at most k new individuals.
"""

from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, permutations

from openlp.abduction.framework import (
    AbductionFramework,
    Explanation,
    SkolemBudget,
    abducibles_open,
    framework_to_open_program,
)
from openlp.core.config import settings
from openlp.core.exceptions import EnumerationLimitError
from openlp.core.logger import get_logger
from openlp.semantics.stable import Interpretation, canonical_order, eval_query, stable_models
from openlp.syntax.herbrand import signature
from openlp.syntax.queries import Query
from openlp.syntax.terms import Atom, Compound, Rule
from openlp.transform.export import rename_atom
from openlp.transform.pi import activated_constants, pi_models, restrict_model, translate

logger = get_logger(__name__)

Table = list[tuple[frozenset[Atom], list[Interpretation]]]


def _solve_explanation(
    task: tuple[AbductionFramework, frozenset[str], frozenset[Atom], int, str],
) -> list[Interpretation]:
    fr, constants, chosen, max_atoms, strategy = task
    used = {arg.functor for a in chosen for arg in a.args if isinstance(arg, Compound)}
    domain = [Compound(name) for name in sorted(constants | used)]
    facts = [Rule(a) for a in sorted(chosen, key=str)]
    return stable_models(fr.theory + facts, domain, max_atoms, strategy)


def _candidate_sets(
    fr: AbductionFramework, budget: SkolemBudget, max_sets: int
) -> list[frozenset[Atom]]:
    candidates = abducibles_open(fr, budget)
    if 2 ** len(candidates) > max_sets:
        raise EnumerationLimitError(
            f"{len(candidates)} abducible atoms give more than {max_sets} explanation candidates",
            details={"abducibles": len(candidates), "max_completions": max_sets},
        )
    return [
        frozenset(chosen)
        for size in range(len(candidates) + 1)
        for chosen in combinations(candidates, size)
    ]


def _iter_table(
    fr: AbductionFramework,
    budget: SkolemBudget,
    max_atoms: int | None,
    strategy: str | None,
    workers: int | None,
) -> Iterator[tuple[frozenset[Atom], list[Interpretation]]]:
    max_atoms = max_atoms or settings.MAX_ATOMS
    strategy = strategy or settings.STRATEGY
    workers = workers or settings.WORKERS
    sets = _candidate_sets(fr, budget, settings.MAX_COMPLETIONS)
    constants = signature(fr.theory).constants
    tasks = [(fr, constants, chosen, max_atoms, strategy) for chosen in sets]
    logger.debug(
        "Enumerating explanation candidates",
        extra={"candidates": len(sets), "budget": budget.count, "workers": workers},
    )

    if workers <= 1 or len(tasks) <= 1:
        for chosen, task in zip(sets, tasks):
            yield chosen, _solve_explanation(task)
        return

    pool = ProcessPoolExecutor(max_workers=workers)
    try:
        chunksize = max(1, len(tasks) // (workers * 4))
        yield from zip(sets, pool.map(_solve_explanation, tasks, chunksize=chunksize))
    finally:
        pool.shutdown(wait=True, cancel_futures=True)


def explanation_table(
    fr: AbductionFramework,
    budget: SkolemBudget,
    max_atoms: int | None = None,
    strategy: str | None = None,
    workers: int | None = None,
) -> Table:
    """Every candidate explanation with the stable models of T | E, by size then atoms."""
    return list(_iter_table(fr, budget, max_atoms, strategy, workers))


def gsm_enumerate(
    fr: AbductionFramework,
    budget: SkolemBudget,
    max_atoms: int | None = None,
    strategy: str | None = None,
    workers: int | None = None,
) -> list[tuple[Explanation, Interpretation]]:
    """
    All pairs (E, M) with E a set of (open) abducible atoms and M a stable
    model of T | E.

    Raises:
        ScopeError: When T has function symbols
        EnumerationLimitError: When there are too many explanation candidates
    """
    return [
        (Explanation(chosen), m)
        for chosen, models in explanation_table(fr, budget, max_atoms, strategy, workers)
        for m in models
    ]


def gsm_model_set(
    fr: AbductionFramework,
    budget: SkolemBudget,
    max_atoms: int | None = None,
    strategy: str | None = None,
) -> list[Interpretation]:
    return canonical_order(m for _, m in gsm_enumerate(fr, budget, max_atoms, strategy))


def _flag_minimal(qualifying: list[frozenset[Atom]]) -> list[Explanation]:
    return [
        Explanation(chosen, minimal=not any(other < chosen for other in qualifying))
        for chosen in qualifying
    ]


def explain_credulous(
    fr: AbductionFramework,
    budget: SkolemBudget,
    q: Query,
    max_atoms: int | None = None,
    strategy: str | None = None,
    workers: int | None = None,
) -> list[Explanation]:
    """Every E such that some stable model of T | E satisfies q; subset-minimal ones flagged."""
    table = explanation_table(fr, budget, max_atoms, strategy, workers)
    qualifying = [
        chosen for chosen, models in table if any(eval_query(m, q) for m in models)
    ]
    logger.info(f"Found {len(qualifying)} credulous explanations")
    return _flag_minimal(qualifying)


def gen_skeptical_consequence(
    fr: AbductionFramework,
    budget: SkolemBudget,
    q: Query,
    require_consistent: bool = True,
    max_atoms: int | None = None,
    strategy: str | None = None,
    workers: int | None = None,
) -> list[Explanation]:
    """
    Every E such that all stable models of T | E satisfy q. With
    require_consistent, T | E must also have a stable model; otherwise an
    inconsistent T | E qualifies vacuously.
    """
    table = explanation_table(fr, budget, max_atoms, strategy, workers)
    qualifying = [
        chosen
        for chosen, models in table
        if (models or not require_consistent) and all(eval_query(m, q) for m in models)
    ]
    logger.info(f"Found {len(qualifying)} skeptical explanations")
    return _flag_minimal(qualifying)


def gsm_via_pi(
    fr: AbductionFramework,
    budget: SkolemBudget,
    strict_activation: bool = True,
    depth_bound: int | None = None,
    max_atoms: int | None = None,
    strategy: str | None = None,
) -> list[Interpretation]:
    """
    Generalized stable models through the translation of (T, Sk', A).

    With strict_activation, a translated model counts only when every
    activated skolem occurs in one of its abducible atoms; this matches
    gsm_enumerate, which grounds T | E over the skolems of E alone. Without
    it the restricted models of every completion are returned, including
    those whose vocabulary has skolems no abducible atom mentions.
    """
    pi = translate(framework_to_open_program(fr, budget))
    found = []
    for m in pi_models(pi, depth_bound, max_atoms, strategy):
        restricted = restrict_model(m, pi)
        if strict_activation:
            mentioned = {
                arg.functor
                for a in restricted.atoms
                if a.symbol in fr.abducibles
                for arg in a.args
                if isinstance(arg, Compound)
            }
            if not activated_constants(m, pi) <= mentioned:
                continue
        found.append(restricted)
    return canonical_order(found)


def _rename_skolems(chosen: frozenset[Atom], mapping: dict[str, str]) -> tuple[str, ...]:
    return tuple(sorted(str(rename_atom(a, mapping)) for a in chosen))


def canonical_skolem_form(explanation: Explanation) -> tuple[str, ...]:
    """Smallest rendering of the explanation over all renamings of its skolems to o_sk0..."""
    skolems = sorted(explanation.skolems())
    targets = list(SkolemBudget(len(skolems)).names)
    return min(
        _rename_skolems(explanation.atoms, dict(zip(skolems, order)))
        for order in permutations(targets)
    )


def collapse_isomorphic(explanations: Iterable[Explanation]) -> list[Explanation]:
    """Keep the first explanation of each class equal up to a permutation of skolem constants."""
    seen: set[tuple[str, ...]] = set()
    kept = []
    for explanation in explanations:
        form = canonical_skolem_form(explanation)
        if form not in seen:
            seen.add(form)
            kept.append(explanation)
    return kept
