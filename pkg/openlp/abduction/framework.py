"""
Abduction frameworks (T, A), skolem budgets and explanations.
"""

from dataclasses import dataclass, field

from openlp.core.exceptions import ParseError, ScopeError
from openlp.core.logger import get_logger
from openlp.semantics.open_programs import open_atoms
from openlp.syntax.herbrand import signature
from openlp.syntax.parser import parse_open_program
from openlp.syntax.terms import (
    RESERVED_PREFIX,
    Atom,
    Compound,
    OpenProgram,
    Program,
    Rule,
    Symbol,
    format_symbol,
    sort_key,
)

logger = get_logger(__name__)

SKOLEM_PREFIX = f"{RESERVED_PREFIX}sk"
RULE_NAME_PREFIX = f"{RESERVED_PREFIX}rule"


@dataclass(frozen=True, slots=True)
class AbductionFramework:
    """A theory T and the abducible predicates A (which may also occur in T)."""

    theory: Program = field(default_factory=Program)
    abducibles: frozenset[Symbol] = frozenset()


@dataclass(frozen=True, slots=True)
class SkolemBudget:
    """The first `count` skolem constants o_sk0, o_sk1, ..."""

    count: int = 0

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ScopeError(f"skolem budget must be non-negative, got {self.count}")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(f"{SKOLEM_PREFIX}{i}" for i in range(self.count))


@dataclass(frozen=True, slots=True)
class Explanation:
    atoms: frozenset[Atom] = frozenset()
    minimal: bool = False

    def sorted_atoms(self) -> list[Atom]:
        return sorted(self.atoms, key=sort_key)

    def key(self) -> tuple[int, tuple[str, ...]]:
        return len(self.atoms), tuple(str(a) for a in self.sorted_atoms())

    def as_strings(self) -> list[str]:
        return [str(a) for a in self.sorted_atoms()]

    def skolems(self) -> frozenset[str]:
        return frozenset(
            arg.functor
            for a in self.atoms
            for arg in a.args
            if isinstance(arg, Compound) and arg.functor.startswith(SKOLEM_PREFIX)
        )

    def __str__(self) -> str:
        return "{" + ", ".join(self.as_strings()) + "}"


def _require_function_free(fr: AbductionFramework) -> frozenset[str]:
    sig = signature(fr.theory)
    if not sig.is_function_free:
        symbols = ", ".join(format_symbol(s) for s in sorted(sig.proper_functions))
        raise ScopeError(f"abducibles are infinite for a theory with function symbols ({symbols})")
    return sig.constants


def abducibles(fr: AbductionFramework) -> list[Atom]:
    """
    Ground abducible atoms over the Herbrand domain of T, in canonical order.

    Raises:
        ScopeError: When T has proper function symbols
    """
    constants = _require_function_free(fr)
    return open_atoms(fr.abducibles, constants)


def abducibles_open(fr: AbductionFramework, budget: SkolemBudget) -> list[Atom]:
    """Ground abducible atoms over the domain of T extended with the budget's skolems."""
    constants = _require_function_free(fr)
    return open_atoms(fr.abducibles, constants | set(budget.names))


def framework_to_open_program(fr: AbductionFramework, budget: SkolemBudget) -> OpenProgram:
    """The open program (T, Sk', A) whose completions are the theories T | E."""
    return OpenProgram(
        program=fr.theory,
        fresh=frozenset((name, 0) for name in budget.names),
        open=fr.abducibles,
    )


def name_rules(fr: AbductionFramework, rules: Program) -> AbductionFramework:
    """
    Rule abduction: each rule H :- B becomes H :- B, o_rule<i> with a new
    0-ary abducible o_rule<i>, so abducing that atom abduces the rule.
    """
    named = []
    new_abducibles = set(fr.abducibles)
    for index, rule in enumerate(rules):
        name = Atom(f"{RULE_NAME_PREFIX}{index}")
        named.append(Rule(rule.head, rule.pos + (name,), rule.neg))
        new_abducibles.add(name.symbol)
    return AbductionFramework(fr.theory + named, frozenset(new_abducibles))


def parse_framework(text: str) -> AbductionFramework:
    """
    Parse a framework file: the theory's rules plus `#open p/n.` directives
    declaring abducibles.

    Raises:
        ParseError: On syntax errors, or a #fresh directive (skolems come from the budget)
    """
    omega = parse_open_program(text)
    if omega.fresh:
        symbols = ", ".join(format_symbol(s) for s in sorted(omega.fresh))
        raise ParseError(f"#fresh is not allowed in an abduction framework ({symbols})")
    logger.debug(f"Parsed framework with {len(omega.program)} rules")
    return AbductionFramework(omega.program, omega.open)
