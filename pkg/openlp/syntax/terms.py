"""
Abstract syntax of normal logic programs and open programs.
All values are immutable and hashable, so they can be shared between
workers and used as set members.
"""

import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from typing import Union

from openlp.core.exceptions import ScopeError

# (name, arity) pair identifying a predicate or function symbol
Symbol = tuple[str, int]

# Prefix of every generated name; rejected in user input
RESERVED_PREFIX = "o_"
# skolem constants introduced by abduction; users may mention them in queries
SKOLEM_PATTERN = re.compile(rf"{RESERVED_PREFIX}sk\d+")


def format_symbol(symbol: Symbol) -> str:
    return f"{symbol[0]}/{symbol[1]}"


@dataclass(frozen=True, slots=True)
class Variable:
    name: str

    @property
    def is_ground(self) -> bool:
        return False

    def substitute(self, binding: Mapping[str, "Compound"]) -> "Term":
        return binding.get(self.name, self)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Compound:
    """A function term; a constant is a compound of arity 0."""

    functor: str
    args: tuple["Term", ...] = ()

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def symbol(self) -> Symbol:
        return (self.functor, self.arity)

    @property
    def is_ground(self) -> bool:
        return all(arg.is_ground for arg in self.args)

    def substitute(self, binding: Mapping[str, "Compound"]) -> "Compound":
        if not self.args:
            return self
        return Compound(self.functor, tuple(arg.substitute(binding) for arg in self.args))

    def __str__(self) -> str:
        if not self.args:
            return self.functor
        return f"{self.functor}({','.join(str(arg) for arg in self.args)})"


Term = Union[Variable, Compound]


def constant(name: str) -> Compound:
    return Compound(name)


def term_variables(term: Term) -> Iterator[str]:
    if isinstance(term, Variable):
        yield term.name
    else:
        for arg in term.args:
            yield from term_variables(arg)


def subterms(term: Term) -> Iterator[Term]:
    yield term
    if isinstance(term, Compound):
        for arg in term.args:
            yield from subterms(arg)


@dataclass(frozen=True, slots=True)
class Atom:
    predicate: str
    args: tuple[Term, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def symbol(self) -> Symbol:
        return (self.predicate, self.arity)

    @property
    def is_ground(self) -> bool:
        return all(arg.is_ground for arg in self.args)

    def variables(self) -> Iterator[str]:
        for arg in self.args:
            yield from term_variables(arg)

    def substitute(self, binding: Mapping[str, Compound]) -> "Atom":
        if not self.args:
            return self
        return Atom(self.predicate, tuple(arg.substitute(binding) for arg in self.args))

    def __str__(self) -> str:
        if not self.args:
            return self.predicate
        return f"{self.predicate}({','.join(str(arg) for arg in self.args)})"


def atom(predicate: str, *args: str | Term) -> Atom:
    """Shorthand used by tests and builders: bare strings become constants or variables."""
    terms: list[Term] = []
    for arg in args:
        if isinstance(arg, str):
            terms.append(Variable(arg) if arg[:1].isupper() or arg[:1] == "_" else Compound(arg))
        else:
            terms.append(arg)
    return Atom(predicate, tuple(terms))


@dataclass(frozen=True, slots=True)
class Rule:
    head: Atom
    pos: tuple[Atom, ...] = ()
    neg: tuple[Atom, ...] = ()

    @property
    def is_fact(self) -> bool:
        return not self.pos and not self.neg

    @property
    def is_ground(self) -> bool:
        return all(a.is_ground for a in self.atoms())

    def atoms(self) -> Iterator[Atom]:
        yield self.head
        yield from self.pos
        yield from self.neg

    def variables(self) -> list[str]:
        """Distinct variables in order of first occurrence (head, positive body, negative body)."""
        seen: dict[str, None] = {}
        for a in self.atoms():
            for name in a.variables():
                seen.setdefault(name, None)
        return list(seen)

    def substitute(self, binding: Mapping[str, Compound]) -> "Rule":
        return Rule(
            self.head.substitute(binding),
            tuple(a.substitute(binding) for a in self.pos),
            tuple(a.substitute(binding) for a in self.neg),
        )

    def __str__(self) -> str:
        if self.is_fact:
            return f"{self.head}."
        body = [str(a) for a in self.pos] + [f"not {a}" for a in self.neg]
        return f"{self.head} :- {', '.join(body)}."


@dataclass(frozen=True, slots=True)
class Program:
    rules: tuple[Rule, ...] = ()

    @classmethod
    def of(cls, rules: Iterable[Rule]) -> "Program":
        return cls(tuple(rules))

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __add__(self, other: "Program | Iterable[Rule]") -> "Program":
        extra = other.rules if isinstance(other, Program) else tuple(other)
        return Program(self.rules + extra)

    @property
    def is_ground(self) -> bool:
        return all(rule.is_ground for rule in self.rules)

    @property
    def has_negation(self) -> bool:
        return any(rule.neg for rule in self.rules)

    def normalized(self) -> "Program":
        """Collapse duplicate rules, keeping first occurrences in order."""
        return Program(tuple(dict.fromkeys(self.rules)))

    def heads(self) -> frozenset[Atom]:
        return frozenset(rule.head for rule in self.rules)

    def __str__(self) -> str:
        return "\n".join(str(rule) for rule in self.rules)


@dataclass(frozen=True, slots=True)
class Signature:
    predicates: frozenset[Symbol] = frozenset()
    functions: frozenset[Symbol] = frozenset()

    @property
    def constants(self) -> frozenset[str]:
        return frozenset(name for name, arity in self.functions if arity == 0)

    @property
    def proper_functions(self) -> frozenset[Symbol]:
        return frozenset(s for s in self.functions if s[1] > 0)

    @property
    def is_function_free(self) -> bool:
        return not self.proper_functions

    def __or__(self, other: "Signature") -> "Signature":
        return Signature(self.predicates | other.predicates, self.functions | other.functions)


@dataclass(frozen=True, slots=True)
class OpenProgram:
    """The triple (P, F, O): program, fresh function symbols, open predicates."""

    program: Program = field(default_factory=Program)
    fresh: frozenset[Symbol] = frozenset()
    open: frozenset[Symbol] = frozenset()

    def __post_init__(self) -> None:
        used = {name for a in _all_atoms(self.program) for name in _functor_names(a)}
        clash = sorted(name for name, _ in self.fresh if name in used)
        if clash:
            raise ScopeError(
                f"fresh symbol(s) {', '.join(clash)} occur in the program",
                details={"symbols": clash},
            )

    @property
    def fresh_constants(self) -> frozenset[str]:
        return frozenset(name for name, arity in self.fresh if arity == 0)

    @property
    def is_finite_constant_scope(self) -> bool:
        return all(arity == 0 for _, arity in self.fresh)


def _all_atoms(program: Program) -> Iterator[Atom]:
    for rule in program:
        yield from rule.atoms()


def _functor_names(a: Atom) -> Iterator[str]:
    for arg in a.args:
        for sub in subterms(arg):
            if isinstance(sub, Compound):
                yield sub.functor


def sort_key(item: object) -> str:
    """Canonical lexicographic key for atoms, terms and rules."""
    return str(item)
