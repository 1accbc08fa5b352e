"""
Printer for the concrete program and query syntax.
parse_program(format_program(p)) == p for every parsed program p.
"""

from openlp.syntax.queries import Query
from openlp.syntax.terms import OpenProgram, Program, Rule, format_symbol


def format_rule(rule: Rule) -> str:
    return str(rule)


def format_program(program: Program) -> str:
    """One rule per line, positive body literals before negated ones."""
    if not program.rules:
        return ""
    return "\n".join(format_rule(rule) for rule in program) + "\n"


def format_open_program(omega: OpenProgram) -> str:
    lines = [format_rule(rule) for rule in omega.program]
    lines += [f"#fresh {format_symbol(s)}." for s in sorted(omega.fresh)]
    lines += [f"#open {format_symbol(s)}." for s in sorted(omega.open)]
    return "".join(f"{line}\n" for line in lines)


def format_query(query: Query) -> str:
    return str(query)
