"""
Signatures, Herbrand universes and bases, and grounding.
"""

from collections.abc import Iterable, Iterator
from itertools import product

from openlp.core.config import settings
from openlp.core.exceptions import EnumerationLimitError, ScopeError
from openlp.core.logger import get_logger
from openlp.syntax.terms import (
    Atom,
    Compound,
    Program,
    Rule,
    Signature,
    Term,
    Variable,
    sort_key,
    subterms,
)

logger = get_logger(__name__)


def signature(program: Program) -> Signature:
    """Exactly the predicate and function symbols occurring in the program."""
    predicates = set()
    functions = set()
    for rule in program:
        for a in rule.atoms():
            predicates.add(a.symbol)
            for arg in a.args:
                for sub in subterms(arg):
                    if isinstance(sub, Compound):
                        functions.add(sub.symbol)
    return Signature(frozenset(predicates), frozenset(functions))


def term_depth(term: Term) -> int:
    if isinstance(term, Variable) or not term.args:
        return 0
    return 1 + max(term_depth(arg) for arg in term.args)


def default_depth_bound(program: Program) -> int:
    """The deepest term nesting in the program (no extra nesting beyond the source)."""
    return max(
        (term_depth(arg) for rule in program for a in rule.atoms() for arg in a.args),
        default=0,
    )


def herbrand_universe(
    sig: Signature, depth_bound: int = 0, max_terms: int | None = None
) -> frozenset[Compound]:
    """
    All ground terms over the signature with nesting depth at most depth_bound.

    Exact (and independent of the bound) when the signature has no function
    symbols of arity >= 1; empty when there is no constant.

    Raises:
        EnumerationLimitError: When the universe outgrows max_terms
    """
    max_terms = max_terms or settings.MAX_GROUND_RULES
    level = {Compound(name) for name in sig.constants}
    if not level:
        return frozenset()

    proper = sorted(sig.proper_functions)
    for _ in range(depth_bound):
        ordered = sorted(level, key=sort_key)
        grown = set(level)
        for name, arity in proper:
            for args in product(ordered, repeat=arity):
                grown.add(Compound(name, args))
                if len(grown) > max_terms:
                    raise EnumerationLimitError(
                        f"Herbrand universe exceeds {max_terms} terms at depth {depth_bound}",
                        details={"max_terms": max_terms, "depth_bound": depth_bound},
                    )
        if grown == level:
            break
        level = grown
    return frozenset(level)


def count_instances(program: Program, domain_size: int) -> int:
    return sum(domain_size ** len(rule.variables()) for rule in program)


def _instances(rule: Rule, ordered_domain: list[Compound]) -> Iterator[Rule]:
    names = rule.variables()
    if not names:
        yield rule
        return
    for values in product(ordered_domain, repeat=len(names)):
        yield rule.substitute(dict(zip(names, values)))


def ground_program(
    program: Program, domain: Iterable[Compound], max_rules: int | None = None
) -> Program:
    """
    Instantiate every rule with every substitution of its variables into domain.

    Variables that occur only under negation are grounded too (no safety
    requirement). Ground rules are kept as they are, so grounding is
    idempotent on ground input.

    Args:
        program: Program to instantiate
        domain: Finite set of ground terms
        max_rules: Cap on the number of rule instances

    Returns:
        Ground program, rules in source order, instances in domain order

    Raises:
        EnumerationLimitError: When the instance count exceeds max_rules
    """
    max_rules = max_rules or settings.MAX_GROUND_RULES
    ordered = sorted(set(domain), key=sort_key)
    expected = count_instances(program, len(ordered))
    if expected > max_rules:
        raise EnumerationLimitError(
            f"grounding would produce {expected} rules (cap {max_rules})",
            details={"rules": expected, "max_rules": max_rules},
        )

    grounded = [instance for rule in program for instance in _instances(rule, ordered)]
    logger.debug(f"Grounded {len(program)} rules into {len(grounded)} instances")
    return Program(tuple(grounded))


def require_ground(program: Program, operation: str) -> None:
    if not program.is_ground:
        raise ScopeError(f"{operation} requires a ground program")


def herbrand_base(program: Program) -> list[Atom]:
    """
    Ground atoms over the program's predicates and the ground argument terms
    occurring in it, in canonical order.
    """
    require_ground(program, "herbrand_base")
    sig = signature(program)
    terms = sorted(
        {arg for rule in program for a in rule.atoms() for arg in a.args},
        key=sort_key,
    )
    base = [
        Atom(name, tuple(args))
        for name, arity in sorted(sig.predicates)
        for args in product(terms, repeat=arity)
    ]
    return sorted(base, key=sort_key)


def in_herbrand_base(a: Atom, sig: Signature) -> bool:
    if a.symbol not in sig.predicates or not a.is_ground:
        return False
    return all(
        sub.symbol in sig.functions
        for arg in a.args
        for sub in subterms(arg)
        if isinstance(sub, Compound)
    )
