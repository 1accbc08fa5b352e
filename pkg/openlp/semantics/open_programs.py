"""
Open programs: completion normal forms and the brute-force oracle for the
four open-inference modes (crd, skp, cs, sc).

A completion is represented in normal form (C, E): C is the set of activated
fresh constants, E a set of ground open facts over constants(P) | C. Each
normal form is realized as a literal completion of the open program; fresh
constants that no fact mentions are kept in the vocabulary by a tautological
padding rule.
"""

from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from contextlib import closing
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product

from openlp.core.config import settings
from openlp.core.exceptions import EnumerationLimitError, ScopeError
from openlp.core.logger import get_logger
from openlp.semantics.stable import Interpretation, canonical_order, eval_query, stable_models
from openlp.syntax.herbrand import signature
from openlp.syntax.queries import Query
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

# body predicate of the padding rule when every open predicate is 0-ary
PAD_PREDICATE = f"{RESERVED_PREFIX}pad"


class OpenMode(str, Enum):
    CRD = "crd"
    SKP = "skp"
    CS = "cs"
    SC = "sc"


@dataclass(frozen=True, slots=True)
class CompletionNF:
    activated: frozenset[str] = frozenset()
    facts: frozenset[Atom] = frozenset()

    def key(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        return tuple(sorted(self.activated)), tuple(sorted(str(a) for a in self.facts))

    def __str__(self) -> str:
        activated, facts = self.key()
        return f"({{{', '.join(activated)}}}, {{{', '.join(facts)}}})"


@dataclass(frozen=True, slots=True)
class Realization:
    """A normal form made concrete: a completion program and its grounding domain."""

    program: Program
    domain: frozenset[Compound]


def predicates_of(omega: OpenProgram) -> frozenset[Symbol]:
    """Predicate symbols occurring in the open program: those of P plus O."""
    return signature(omega.program).predicates | omega.open


def check_oracle_scope(omega: OpenProgram) -> None:
    """
    Raises:
        ScopeError: When P has proper function symbols or F a symbol of arity >= 1
    """
    sig = signature(omega.program)
    if not sig.is_function_free:
        symbols = ", ".join(format_symbol(s) for s in sorted(sig.proper_functions))
        raise ScopeError(f"the completion oracle needs a function-free program ({symbols})")
    if not omega.is_finite_constant_scope:
        proper_fresh = sorted(s for s in omega.fresh if s[1] > 0)
        symbols = ", ".join(format_symbol(s) for s in proper_fresh)
        raise ScopeError(f"the completion oracle supports fresh constants only ({symbols})")


def open_atoms(open_symbols: frozenset[Symbol], names: frozenset[str]) -> list[Atom]:
    ordered = [Compound(name) for name in sorted(names)]
    atoms = [
        Atom(pred, tuple(args))
        for pred, arity in sorted(open_symbols)
        for args in product(ordered, repeat=arity)
    ]
    return sorted(atoms, key=sort_key)


def count_completions(omega: OpenProgram) -> int:
    if not omega.open:
        return 1
    constants = signature(omega.program).constants
    fresh = sorted(omega.fresh_constants)
    return sum(
        2 ** len(open_atoms(omega.open, constants | set(chosen)))
        for size in range(len(fresh) + 1)
        for chosen in combinations(fresh, size)
    )


def completions_nf(omega: OpenProgram, max_completions: int | None = None) -> list[CompletionNF]:
    """
    All normal-form completions (C, E) of the open program.

    Ordered by |C|, then C, then |E|, then E. With O empty the only
    completion is P itself, so the result is [(∅, ∅)] even when F is not empty.

    Raises:
        ScopeError: Outside the oracle scope
        EnumerationLimitError: When there are more than max_completions normal forms
    """
    check_oracle_scope(omega)
    if not omega.open:
        return [CompletionNF()]

    max_completions = max_completions or settings.MAX_COMPLETIONS
    total = count_completions(omega)
    if total > max_completions:
        raise EnumerationLimitError(
            f"{total} normal-form completions exceed the cap of {max_completions}",
            details={"completions": total, "max_completions": max_completions},
        )

    constants = signature(omega.program).constants
    fresh = sorted(omega.fresh_constants)
    result = []
    for size in range(len(fresh) + 1):
        for chosen in combinations(fresh, size):
            atoms = open_atoms(omega.open, constants | set(chosen))
            for k in range(len(atoms) + 1):
                for facts in combinations(atoms, k):
                    result.append(CompletionNF(frozenset(chosen), frozenset(facts)))
    return result


def _padding_rule(omega: OpenProgram, name: str) -> Rule:
    # prefer an open predicate with arguments so the rule mentions the constant in its head
    pred, arity = min(omega.open, key=lambda s: (s[1] == 0, s))
    c = Compound(name)
    if arity:
        head = Atom(pred, (c,) * arity)
        return Rule(head, (head,))
    head = Atom(pred)
    return Rule(head, (head, Atom(PAD_PREDICATE, (c,))))


def realize(nf: CompletionNF, omega: OpenProgram) -> Realization:
    """
    Build the completion P | E | padding for a normal form, and its domain
    constants(P) | C.

    Raises:
        ScopeError: When nf does not belong to omega, or activates a constant while O is empty
    """
    if nf.activated and not omega.open:
        raise ScopeError("no completion can mention a fresh constant when O is empty")
    unknown = sorted(nf.activated - omega.fresh_constants)
    if unknown:
        raise ScopeError(f"activated constants {unknown} are not fresh constants")

    constants = signature(omega.program).constants
    vocabulary = constants | nf.activated
    mentioned: set[str] = set()
    for a in nf.facts:
        if a.symbol not in omega.open:
            raise ScopeError(f"fact {a} does not belong to an open predicate")
        names = {arg.functor for arg in a.args if isinstance(arg, Compound)}
        if not names <= vocabulary or not a.is_ground:
            raise ScopeError(f"fact {a} uses a constant outside the completion's vocabulary")
        mentioned |= names

    facts = [Rule(a) for a in sorted(nf.facts, key=sort_key)]
    padding = [_padding_rule(omega, name) for name in sorted(nf.activated - mentioned)]
    return Realization(
        program=omega.program + facts + padding,
        domain=frozenset(Compound(name) for name in vocabulary),
    )


def _solve_completion(
    task: tuple[CompletionNF, OpenProgram, int, str],
) -> list[Interpretation]:
    nf, omega, max_atoms, strategy = task
    realization = realize(nf, omega)
    models = stable_models(realization.program, realization.domain, max_atoms, strategy)
    predicates = predicates_of(omega)
    return canonical_order(m.project(predicates) for m in models)


class OpenInferenceOracle:
    """
    Decides open inference by enumerating normal-form completions.

    Completions are solved in normal-form order; with workers > 1 they are
    solved on a process pool but still consumed in that order, so
    short-circuiting verdicts do not depend on scheduling.
    """

    def __init__(
        self,
        omega: OpenProgram,
        max_atoms: int | None = None,
        strategy: str | None = None,
        workers: int | None = None,
        max_completions: int | None = None,
    ):
        check_oracle_scope(omega)
        self.omega = omega
        self.max_atoms = max_atoms or settings.MAX_ATOMS
        self.strategy = strategy or settings.STRATEGY
        self.workers = workers or settings.WORKERS
        self.max_completions = max_completions or settings.MAX_COMPLETIONS
        logger.debug(
            "OpenInferenceOracle initialized",
            extra={"fresh": len(omega.fresh), "open": len(omega.open), "workers": self.workers},
        )

    def completions(self) -> list[CompletionNF]:
        return completions_nf(self.omega, self.max_completions)

    def iter_completion_models(self) -> Iterator[tuple[CompletionNF, list[Interpretation]]]:
        """Yield each normal form with its stable models projected to the predicates of Ω."""
        nfs = self.completions()
        tasks = ((nf, self.omega, self.max_atoms, self.strategy) for nf in nfs)
        if self.workers <= 1 or len(nfs) <= 1:
            for nf, task in zip(nfs, tasks):
                yield nf, _solve_completion(task)
            return

        pool = ProcessPoolExecutor(max_workers=self.workers)
        try:
            chunksize = max(1, len(nfs) // (self.workers * 4))
            yield from zip(nfs, pool.map(_solve_completion, tasks, chunksize=chunksize))
        finally:
            pool.shutdown(wait=True, cancel_futures=True)

    def completion_models(self) -> list[tuple[CompletionNF, list[Interpretation]]]:
        return list(self.iter_completion_models())

    def model_set(self) -> list[Interpretation]:
        """Union of the stable models of all completions, canonically ordered."""
        with closing(self.iter_completion_models()) as table:
            return canonical_order(m for _, models in table for m in models)

    def entails(self, mode: OpenMode, q: Query) -> bool:
        mode = OpenMode(mode)
        with closing(self.iter_completion_models()) as table:
            match mode:
                case OpenMode.CRD:
                    verdict = any(any(eval_query(m, q) for m in models) for _, models in table)
                case OpenMode.SKP:
                    verdict = all(all(eval_query(m, q) for m in models) for _, models in table)
                case OpenMode.CS:
                    verdict = any(
                        bool(models) and all(eval_query(m, q) for m in models)
                        for _, models in table
                    )
                case OpenMode.SC:
                    verdict = all(
                        not models or any(eval_query(m, q) for m in models)
                        for _, models in table
                    )
        logger.debug(f"Open inference {mode.value} {q}: {verdict}")
        return verdict

    def has_consistent_completion(self) -> bool:
        with closing(self.iter_completion_models()) as table:
            return any(bool(models) for _, models in table)


def open_entails(
    omega: OpenProgram,
    mode: OpenMode,
    q: Query,
    max_atoms: int | None = None,
    strategy: str | None = None,
    workers: int | None = None,
) -> bool:
    """
    Open inference by the completion oracle.

    crd: some completion has a stable model satisfying q
    skp: every stable model of every completion satisfies q
    cs:  some consistent completion has all its stable models satisfying q
    sc:  every consistent completion has a stable model satisfying q
    """
    return OpenInferenceOracle(omega, max_atoms, strategy, workers).entails(mode, q)


def has_consistent_completion(
    omega: OpenProgram,
    max_atoms: int | None = None,
    strategy: str | None = None,
    workers: int | None = None,
) -> bool:
    return OpenInferenceOracle(omega, max_atoms, strategy, workers).has_consistent_completion()


def completion_models(
    omega: OpenProgram, max_atoms: int | None = None, strategy: str | None = None
) -> list[tuple[CompletionNF, list[Interpretation]]]:
    return OpenInferenceOracle(omega, max_atoms, strategy).completion_models()


def completion_model_set(
    omega: OpenProgram, max_atoms: int | None = None, strategy: str | None = None
) -> list[Interpretation]:
    return OpenInferenceOracle(omega, max_atoms, strategy).model_set()
