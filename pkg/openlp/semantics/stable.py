"""
Stable model semantics for normal logic programs.
Reduct, least model, stable-model enumeration, and credulous/skeptical
entailment of ground queries.
"""

from collections import defaultdict
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from openlp.core.config import settings
from openlp.core.exceptions import EnumerationLimitError, ScopeError
from openlp.core.logger import get_logger
from openlp.syntax.herbrand import (
    ground_program,
    herbrand_base,
    in_herbrand_base,
    require_ground,
    signature,
)
from openlp.syntax.queries import And, Not, Or, Query
from openlp.syntax.terms import Atom, Compound, Program, Rule, sort_key

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class Interpretation:
    """A finite set of ground atoms."""

    atoms: frozenset[Atom] = frozenset()

    @classmethod
    def of(cls, atoms: Iterable[Atom]) -> "Interpretation":
        return cls(frozenset(atoms))

    def __contains__(self, a: object) -> bool:
        return a in self.atoms

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.sorted_atoms())

    def __len__(self) -> int:
        return len(self.atoms)

    def sorted_atoms(self) -> list[Atom]:
        return sorted(self.atoms, key=sort_key)

    def key(self) -> tuple[str, ...]:
        return tuple(str(a) for a in self.sorted_atoms())

    def as_strings(self) -> list[str]:
        return list(self.key())

    def project(self, predicates: Iterable[tuple[str, int]]) -> "Interpretation":
        keep = set(predicates)
        return Interpretation(frozenset(a for a in self.atoms if a.symbol in keep))

    def __str__(self) -> str:
        return "{" + ", ".join(self.key()) + "}"


class EntailMode(str, Enum):
    CREDULOUS = "credulous"
    SKEPTICAL = "skeptical"


def canonical_order(models: Iterable[Interpretation]) -> list[Interpretation]:
    """Sort models as sorted atom sequences; duplicates collapse."""
    return sorted(set(models), key=Interpretation.key)


def reduct(pg: Program, i: Interpretation) -> Program:
    """
    Gelfond-Lifschitz reduct of a ground program with respect to i.

    Rules with a negated atom in i are deleted; the negative bodies of the
    remaining rules are dropped.
    """
    require_ground(pg, "reduct")
    return Program(tuple(Rule(r.head, r.pos) for r in pg if not any(a in i for a in r.neg)))


def _closure(rules: Sequence[Rule]) -> set[Atom]:
    """Least fixpoint of the one-step consequence operator over positive bodies."""
    derived: set[Atom] = set()
    pending: dict[int, int] = {}
    watchers: dict[Atom, list[int]] = defaultdict(list)
    queue: list[Atom] = []

    for index, rule in enumerate(rules):
        body = set(rule.pos)
        if not body:
            queue.append(rule.head)
            continue
        pending[index] = len(body)
        for a in body:
            watchers[a].append(index)

    while queue:
        a = queue.pop()
        if a in derived:
            continue
        derived.add(a)
        for index in watchers.get(a, ()):
            pending[index] -= 1
            if pending[index] == 0:
                queue.append(rules[index].head)
    return derived


def least_model(pg: Program) -> Interpretation:
    """Unique minimal Herbrand model of a ground, negation-free program."""
    require_ground(pg, "least_model")
    if pg.has_negation:
        raise ScopeError("least_model requires a negation-free program")
    return Interpretation(frozenset(_closure(pg.rules)))


def _is_stable(rules: Sequence[Rule], atoms: frozenset[Atom]) -> bool:
    survivors = [r for r in rules if not any(a in atoms for a in r.neg)]
    return _closure(survivors) == atoms


def is_stable(pg: Program, i: Interpretation) -> bool:
    """
    True iff i equals the least model of the reduct of pg with respect to i.

    Raises:
        ScopeError: When pg is not ground or i has an atom outside pg's Herbrand base
    """
    require_ground(pg, "is_stable")
    sig = signature(pg)
    outside = sorted((a for a in i.atoms if not in_herbrand_base(a, sig)), key=sort_key)
    if outside:
        raise ScopeError(
            f"atom {outside[0]} is outside the Herbrand base of the program",
            details={"atoms": [str(a) for a in outside]},
        )
    return _is_stable(pg.rules, i.atoms)


def is_minimal_model(pg: Program, i: Interpretation) -> bool:
    """True iff i is a model of pg and no proper subset of i is."""
    require_ground(pg, "is_minimal_model")

    def satisfies(atoms: frozenset[Atom]) -> bool:
        return all(
            r.head in atoms
            or not all(a in atoms for a in r.pos)
            or any(a in atoms for a in r.neg)
            for r in pg
        )

    if not satisfies(i.atoms):
        return False
    members = i.sorted_atoms()
    for size in range(len(members)):
        for subset in combinations(members, size):
            if satisfies(frozenset(subset)):
                return False
    return True


def brute_force_models(pg: Program, max_atoms: int | None = None) -> list[Interpretation]:
    """
    Trusted oracle: test every subset of the Herbrand base.

    Raises:
        EnumerationLimitError: When the base has more than max_atoms atoms
    """
    max_atoms = max_atoms or settings.MAX_ATOMS
    base = herbrand_base(pg)
    if len(base) > max_atoms:
        raise EnumerationLimitError(
            f"Herbrand base has {len(base)} atoms (cap {max_atoms})",
            details={"atoms": len(base), "max_atoms": max_atoms},
        )

    rules = list(pg.rules)
    found = []
    for size in range(len(base) + 1):
        for subset in combinations(base, size):
            candidate = frozenset(subset)
            if _is_stable(rules, candidate):
                found.append(Interpretation(candidate))
    return canonical_order(found)


class StableModelSolver:
    """
    Enumerates the stable models of ground programs.

    Strategies:
    - brute-force: every subset of the Herbrand base
    - propagate: branch only over head atoms that occur negated, pruning with
      lower/upper bounds computed from the rules the partial guess makes
      surely or possibly applicable
    """

    def __init__(self, max_atoms: int | None = None, strategy: str | None = None):
        self.max_atoms = max_atoms or settings.MAX_ATOMS
        self.strategy = strategy or settings.STRATEGY
        if self.strategy not in {"propagate", "brute-force"}:
            raise ScopeError(f"unknown enumeration strategy '{self.strategy}'")

    def models(self, pg: Program) -> list[Interpretation]:
        require_ground(pg, "stable_models")
        if self.strategy == "brute-force":
            return brute_force_models(pg, self.max_atoms)
        return self._propagate(pg)

    def _propagate(self, pg: Program) -> list[Interpretation]:
        heads = pg.heads()
        # negated atoms that head no rule are false in every stable model
        rules = [
            Rule(r.head, r.pos, tuple(a for a in r.neg if a in heads))
            for r in pg
        ]
        choices = sorted({a for r in rules for a in r.neg}, key=sort_key)
        if len(choices) > self.max_atoms:
            raise EnumerationLimitError(
                f"{len(choices)} choice atoms exceed the cap of {self.max_atoms}",
                details={"atoms": len(choices), "max_atoms": self.max_atoms},
            )

        found: list[Interpretation] = []
        stack: list[tuple[frozenset[Atom], frozenset[Atom]]] = [(frozenset(), frozenset())]
        while stack:
            true, false = stack.pop()
            outcome = self._bounds(rules, choices, true, false)
            if outcome is None:
                continue
            true, false, lower = outcome
            open_atoms = [a for a in choices if a not in true and a not in false]
            if not open_atoms:
                found.append(Interpretation(frozenset(lower)))
                continue
            pivot = open_atoms[0]
            stack.append((true, false | {pivot}))
            stack.append((true | {pivot}, false))

        logger.debug(f"Propagating search found {len(found)} stable models")
        return canonical_order(found)

    @staticmethod
    def _bounds(
        rules: list[Rule],
        choices: list[Atom],
        true: frozenset[Atom],
        false: frozenset[Atom],
    ) -> tuple[frozenset[Atom], frozenset[Atom], set[Atom]] | None:
        while True:
            lower = _closure([r for r in rules if all(a in false for a in r.neg)])
            upper = _closure([r for r in rules if not any(a in true for a in r.neg)])
            if not true <= upper or false & lower:
                return None
            implied_true = {a for a in choices if a not in true and a in lower}
            implied_false = {
                a for a in choices if a not in true and a not in false and a not in upper
            }
            if not implied_true and not implied_false:
                return true, false, lower
            true = true | implied_true
            false = false | implied_false


def stable_models(
    program: Program,
    domain: Iterable[Compound] = (),
    max_atoms: int | None = None,
    strategy: str | None = None,
) -> list[Interpretation]:
    """
    All stable models of the program grounded over domain, canonically ordered.

    Args:
        program: Function-free or already ground program
        domain: Grounding domain for the program's variables
        max_atoms: Enumeration cap
        strategy: "propagate" (default) or "brute-force"

    Raises:
        EnumerationLimitError: When the search space exceeds max_atoms
    """
    pg = ground_program(program, domain)
    return StableModelSolver(max_atoms, strategy).models(pg)


def eval_query(i: Interpretation, q: Query) -> bool:
    """Classical satisfaction; atoms not in i are false."""
    match q:
        case Atom():
            return q in i
        case Not(operand):
            return not eval_query(i, operand)
        case And(left, right):
            return eval_query(i, left) and eval_query(i, right)
        case Or(left, right):
            return eval_query(i, left) or eval_query(i, right)
    raise ScopeError(f"not a query: {q!r}")


def entails_models(models: Iterable[Interpretation], mode: EntailMode, q: Query) -> bool:
    if mode is EntailMode.CREDULOUS:
        return any(eval_query(m, q) for m in models)
    return all(eval_query(m, q) for m in models)


def entails(
    program: Program,
    domain: Iterable[Compound],
    mode: EntailMode,
    q: Query,
    max_atoms: int | None = None,
    strategy: str | None = None,
) -> bool:
    """
    Credulous: some stable model satisfies q.
    Skeptical: every stable model satisfies q (vacuously true when there is none).
    """
    models = stable_models(program, domain, max_atoms, strategy)
    return entails_models(models, EntailMode(mode), q)


def is_consistent(
    program: Program,
    domain: Iterable[Compound] = (),
    max_atoms: int | None = None,
    strategy: str | None = None,
) -> bool:
    return bool(stable_models(program, domain, max_atoms, strategy))
