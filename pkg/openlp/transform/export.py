"""
Text export of (translated) programs for external ASP solvers.
"""

from collections.abc import Mapping

from openlp.syntax.printer import format_program
from openlp.syntax.terms import Atom, Compound, Program, Rule, Term
from openlp.transform.names import NameMap


def rename_term(term: Term, mapping: Mapping[str, str]) -> Term:
    if isinstance(term, Compound):
        return Compound(
            mapping.get(term.functor, term.functor),
            tuple(rename_term(arg, mapping) for arg in term.args),
        )
    return term


def rename_atom(a: Atom, mapping: Mapping[str, str]) -> Atom:
    return Atom(
        mapping.get(a.predicate, a.predicate),
        tuple(rename_term(arg, mapping) for arg in a.args),
    )


def rename_symbols(program: Program, mapping: Mapping[str, str]) -> Program:
    """Rename predicates and functors by name; names absent from mapping are kept."""
    return Program(
        tuple(
            Rule(
                rename_atom(rule.head, mapping),
                tuple(rename_atom(a, mapping) for a in rule.pos),
                tuple(rename_atom(a, mapping) for a in rule.neg),
            )
            for rule in program
        )
    )


def export_text(program: Program, names: NameMap | None = None, readable: bool = False) -> str:
    """
    One rule per line in `head :- body.` syntax, duplicates dropped, program
    order kept. Generated names are already plain identifiers; with readable
    set they are shown under their display names (which may clash with user
    symbols, so such output is not meant to be solved).
    """
    if readable and names is not None:
        program = rename_symbols(program, names.readable())
    return format_program(program.normalized())
