"""
Translation of an open program (P, F, O) into a single normal program.

The translated program has four rule families:
1. every rule of P, guarded by U(x) for each of its variables x
2. U(f(x1..xn)) :- U(x1), ..., U(xn), S(f^) for every function symbol f of P or F
3. S(f^) as a fact for f not in F, else the loop S(f^) :- not S_bar(f^), S_bar(f^) :- not S(f^)
4. p(x) :- not p_bar(x), U(x) and p_bar(x) :- not p(x), U(x) for every open predicate p

S and S_bar select a vocabulary, U collects its ground terms, and the last
family guesses an arbitrary set of ground open atoms.
"""

from dataclasses import dataclass

from openlp.core.config import settings
from openlp.core.exceptions import ScopeError
from openlp.core.logger import get_logger
from openlp.semantics.open_programs import OpenMode, predicates_of
from openlp.semantics.stable import (
    EntailMode,
    Interpretation,
    StableModelSolver,
    canonical_order,
    entails_models,
)
from openlp.syntax.herbrand import (
    default_depth_bound,
    ground_program,
    herbrand_universe,
    signature,
)
from openlp.syntax.queries import Query, query_atoms
from openlp.syntax.terms import (
    RESERVED_PREFIX,
    Atom,
    Compound,
    OpenProgram,
    Program,
    Rule,
    Signature,
    Term,
    Variable,
)
from openlp.transform.names import NameMap, check_reserved

logger = get_logger(__name__)


@dataclass(frozen=True)
class PiProgram:
    program: Program
    names: NameMap
    origin: OpenProgram


def _variables(arity: int) -> tuple[Variable, ...]:
    if arity == 1:
        return (Variable("X"),)
    return tuple(Variable(f"X{i}") for i in range(1, arity + 1))


def translate(omega: OpenProgram) -> PiProgram:
    """
    Translate an open program into a normal program whose stable models,
    restricted with restrict_model, are the stable models of its completions.

    Rules are ordered by family, then by source order (P) or symbol order.

    Raises:
        ReservedSymbolError: When a user symbol uses the reserved prefix
    """
    check_reserved(omega)
    names = NameMap.build(omega)

    def u(term: Term) -> Atom:
        return Atom(names.domain_pred, (term,))

    def s(function: tuple[str, int]) -> Atom:
        return Atom(names.select_pred, (names.name_constant(function),))

    def s_bar(function: tuple[str, int]) -> Atom:
        return Atom(names.deselect_pred, (names.name_constant(function),))

    rules: list[Rule] = []

    for rule in omega.program:
        guards = tuple(u(Variable(v)) for v in rule.variables())
        rules.append(Rule(rule.head, rule.pos + guards, rule.neg))

    functions = sorted(names.func_name)
    for function in functions:
        xs = _variables(function[1])
        rules.append(Rule(u(Compound(function[0], xs)), tuple(u(x) for x in xs) + (s(function),)))

    for function in functions:
        if function in omega.fresh:
            rules.append(Rule(s(function), (), (s_bar(function),)))
            rules.append(Rule(s_bar(function), (), (s(function),)))
        else:
            rules.append(Rule(s(function)))

    for predicate in sorted(omega.open):
        xs = _variables(predicate[1])
        guards = tuple(u(x) for x in xs)
        atom = Atom(predicate[0], xs)
        dual = Atom(names.open_dual[predicate], xs)
        rules.append(Rule(atom, guards, (dual,)))
        rules.append(Rule(dual, guards, (atom,)))

    logger.debug(
        "Translated open program",
        extra={"rules": len(rules), "functions": len(functions), "open": len(omega.open)},
    )
    return PiProgram(Program(tuple(rules)), names, omega)


def domain_of(m: Interpretation, pi: PiProgram) -> frozenset[Term]:
    return frozenset(
        a.args[0] for a in m.atoms if a.predicate == pi.names.domain_pred and a.arity == 1
    )


def activated_constants(m: Interpretation, pi: PiProgram) -> frozenset[str]:
    """Fresh constants whose name is selected in the model."""
    activated = set()
    for a in m.atoms:
        if a.predicate != pi.names.select_pred or a.arity != 1:
            continue
        name = a.args[0]
        function = pi.names.function_of(name.functor) if isinstance(name, Compound) else None
        if function in pi.origin.fresh and function[1] == 0:
            activated.add(function[0])
    return frozenset(activated)


def restrict_model(m: Interpretation, pi: PiProgram) -> Interpretation:
    """
    Restrict a model of the translation to the open program: keep atoms of
    predicates occurring in (P, F, O) whose arguments all belong to U.
    """
    domain = domain_of(m, pi)
    predicates = predicates_of(pi.origin)
    generated = pi.names.generated_predicates()
    return Interpretation(
        frozenset(
            a
            for a in m.atoms
            if a.symbol in predicates
            and a.predicate not in generated
            and all(arg in domain for arg in a.args)
        )
    )


def ground_translate(
    pi: PiProgram, depth_bound: int | None = None, max_rules: int | None = None
) -> Program:
    """
    Ground the translation over the terms U can hold: the Herbrand universe
    of P and F, nested at most depth_bound deep (exact when function-free).
    Generated name constants only occur in ground S atoms, so they are left
    out of the domain.

    Raises:
        EnumerationLimitError: When the grounding exceeds max_rules
    """
    if depth_bound is None:
        depth_bound = (
            settings.DEPTH_BOUND
            if settings.DEPTH_BOUND is not None
            else default_depth_bound(pi.program)
        )
    sig = signature(pi.origin.program) | Signature(functions=pi.origin.fresh)
    universe = herbrand_universe(sig, depth_bound, max_rules)
    return ground_program(pi.program, universe, max_rules)


def pi_models(
    pi: PiProgram,
    depth_bound: int | None = None,
    max_atoms: int | None = None,
    strategy: str | None = None,
) -> list[Interpretation]:
    """Stable models of the ground translation, unrestricted."""
    ground = ground_translate(pi, depth_bound)
    return StableModelSolver(max_atoms, strategy).models(ground)


def pi_model_set(
    omega: OpenProgram,
    depth_bound: int | None = None,
    max_atoms: int | None = None,
    strategy: str | None = None,
) -> list[Interpretation]:
    """Restricted stable models of the ground translation, canonically ordered."""
    pi = translate(omega)
    return canonical_order(
        restrict_model(m, pi) for m in pi_models(pi, depth_bound, max_atoms, strategy)
    )


def check_query(q: Query, pi: PiProgram) -> None:
    generated = pi.names.generated_predicates()
    for a in query_atoms(q):
        if a.predicate in generated or a.predicate.startswith(RESERVED_PREFIX):
            raise ScopeError(f"query mentions the generated predicate {a.predicate}")


def open_entails_via_pi(
    omega: OpenProgram,
    mode: OpenMode,
    q: Query,
    depth_bound: int | None = None,
    max_atoms: int | None = None,
    strategy: str | None = None,
) -> bool:
    """
    Credulous or skeptical open inference through the translation.

    Raises:
        ScopeError: For the mixed modes cs/sc, or a query over generated predicates
    """
    mode = OpenMode(mode)
    if mode not in (OpenMode.CRD, OpenMode.SKP):
        raise ScopeError(f"mode {mode.value} has no translation; use the completion oracle")
    pi = translate(omega)
    check_query(q, pi)
    models = [
        restrict_model(m, pi) for m in pi_models(pi, depth_bound, max_atoms, strategy)
    ]
    entail_mode = EntailMode.CREDULOUS if mode is OpenMode.CRD else EntailMode.SKEPTICAL
    return entails_models(models, entail_mode, q)
