"""
Unfolding of the translation when no fresh symbols are declared.

With F empty every S atom is a fact, so U is exactly the Herbrand universe of
P and the guards can be evaluated away: what remains is the grounding of P
plus a guess pair p(t) / p_bar(t) for every ground open atom.
"""

from itertools import product

from openlp.core.config import settings
from openlp.core.exceptions import ScopeError
from openlp.core.logger import get_logger
from openlp.syntax.herbrand import default_depth_bound, ground_program, herbrand_universe, signature
from openlp.syntax.terms import Atom, Program, Rule, sort_key
from openlp.transform.pi import PiProgram

logger = get_logger(__name__)


def unfold(pi: PiProgram, depth_bound: int | None = None, max_rules: int | None = None) -> Program:
    """
    Ground program without U, S or S_bar atoms, equivalent to the translation
    on the predicates of P and O.

    Rules of P come first in source order, then the guess pairs by predicate
    and argument tuple. Exact for function-free programs; with function
    symbols the universe is cut at depth_bound.

    Raises:
        ScopeError: When the open program declares fresh symbols
    """
    omega = pi.origin
    if omega.fresh:
        logger.warning(
            "Refusing to unfold a translation with fresh symbols",
            extra={"fresh": len(omega.fresh)},
        )
        raise ScopeError("unfolding needs an open program without fresh symbols")

    if depth_bound is None:
        depth_bound = (
            settings.DEPTH_BOUND
            if settings.DEPTH_BOUND is not None
            else default_depth_bound(omega.program)
        )
    universe = herbrand_universe(signature(omega.program), depth_bound, max_rules)
    rules = list(ground_program(omega.program, universe, max_rules))

    ordered = sorted(universe, key=sort_key)
    for predicate in sorted(omega.open):
        dual = pi.names.open_dual[predicate]
        for args in product(ordered, repeat=predicate[1]):
            guessed = Atom(predicate[0], tuple(args))
            complement = Atom(dual, tuple(args))
            rules.append(Rule(guessed, (), (complement,)))
            rules.append(Rule(complement, (), (guessed,)))

    logger.debug(f"Unfolded translation into {len(rules)} ground rules")
    return Program(tuple(rules))
