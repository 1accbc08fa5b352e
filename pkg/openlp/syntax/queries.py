"""
Ground boolean queries over atoms.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from typing import Union

from openlp.syntax.terms import Atom


@dataclass(frozen=True, slots=True)
class Not:
    operand: "Query"

    def __str__(self) -> str:
        if isinstance(self.operand, (And, Or)):
            return f"not ({self.operand})"
        return f"not {self.operand}"


@dataclass(frozen=True, slots=True)
class And:
    left: "Query"
    right: "Query"

    def __str__(self) -> str:
        # left-associative: only a disjunction on the left, or any binary
        # operator on the right, needs parentheses
        left = f"({self.left})" if isinstance(self.left, Or) else str(self.left)
        right = f"({self.right})" if isinstance(self.right, (And, Or)) else str(self.right)
        return f"{left} and {right}"


@dataclass(frozen=True, slots=True)
class Or:
    left: "Query"
    right: "Query"

    def __str__(self) -> str:
        right = f"({self.right})" if isinstance(self.right, Or) else str(self.right)
        return f"{self.left} or {right}"


Query = Union[Atom, Not, And, Or]


def query_atoms(q: Query) -> Iterator[Atom]:
    match q:
        case Atom():
            yield q
        case Not(operand):
            yield from query_atoms(operand)
        case And(left, right) | Or(left, right):
            yield from query_atoms(left)
            yield from query_atoms(right)
