"""
Generated names for the translation of open programs.
Every generated symbol carries the reserved prefix, so it can collide
neither with user symbols (rejected at parse time) nor with other
generated symbols.
"""

import re
from dataclasses import dataclass, field

from openlp.core.exceptions import ReservedSymbolError
from openlp.syntax.herbrand import signature
from openlp.syntax.terms import RESERVED_PREFIX, SKOLEM_PATTERN, Compound, OpenProgram, Symbol

# 0-ary abducibles that name theory rules
RULE_NAME_PATTERN = re.compile(rf"{RESERVED_PREFIX}rule\d+")


def dual_name(predicate: str) -> str:
    return f"{RESERVED_PREFIX}neg_{predicate}"


def symbol_name(functor: str, arity: int) -> str:
    return f"{RESERVED_PREFIX}sym_{functor}_{arity}"


@dataclass(frozen=True)
class NameMap:
    open_dual: dict[Symbol, str] = field(default_factory=dict)
    func_name: dict[Symbol, str] = field(default_factory=dict)
    domain_pred: str = f"{RESERVED_PREFIX}u"
    select_pred: str = f"{RESERVED_PREFIX}s"
    deselect_pred: str = f"{RESERVED_PREFIX}ns"

    @classmethod
    def build(cls, omega: OpenProgram) -> "NameMap":
        functions = signature(omega.program).functions | omega.fresh
        return cls(
            open_dual={p: dual_name(p[0]) for p in sorted(omega.open)},
            func_name={f: symbol_name(*f) for f in sorted(functions)},
        )

    def generated_predicates(self) -> frozenset[str]:
        return frozenset(
            {self.domain_pred, self.select_pred, self.deselect_pred, *self.open_dual.values()}
        )

    def name_constant(self, function: Symbol) -> Compound:
        return Compound(self.func_name[function])

    def function_of(self, name: str) -> Symbol | None:
        for function, generated in self.func_name.items():
            if generated == name:
                return function
        return None

    def readable(self) -> dict[str, str]:
        """Display names: u, s, s_bar, p_bar, and each function symbol's own name."""
        mapping = {
            self.domain_pred: "u",
            self.select_pred: "s",
            self.deselect_pred: "s_bar",
        }
        mapping.update({dual: f"{p[0]}_bar" for p, dual in self.open_dual.items()})
        mapping.update({generated: f[0] for f, generated in self.func_name.items()})
        return mapping


def check_reserved(omega: OpenProgram) -> None:
    """
    Raises:
        ReservedSymbolError: When a user symbol carries the reserved prefix;
            skolem constants and rule names generated for abduction are exempt
    """
    sig = signature(omega.program)
    predicates = sig.predicates | omega.open
    names = {p for p, arity in predicates if not (arity == 0 and RULE_NAME_PATTERN.fullmatch(p))}
    names |= {f for f, _ in sig.functions}
    names |= {f for f, arity in omega.fresh if not (arity == 0 and SKOLEM_PATTERN.fullmatch(f))}
    clashes = sorted(n for n in names if n.startswith(RESERVED_PREFIX))
    if clashes:
        raise ReservedSymbolError(
            f"symbols {', '.join(clashes)} use the reserved prefix '{RESERVED_PREFIX}'",
            details={"symbols": clashes},
        )
