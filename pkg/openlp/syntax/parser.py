"""
Parser for programs, open programs and queries.
Prolog-like concrete syntax: `:-` for the rule arrow, `not` for negation as
failure, `.` terminators, uppercase variables, `%` line comments, and the
`#open name/n` / `#fresh name/n` directives of open programs.
"""

from dataclasses import dataclass

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from openlp.core.exceptions import ArityError, OpenLPError, ParseError, ReservedSymbolError
from openlp.core.logger import get_logger
from openlp.syntax.queries import And, Not, Or, Query, query_atoms
from openlp.syntax.terms import (
    RESERVED_PREFIX,
    SKOLEM_PATTERN,
    Atom,
    Compound,
    OpenProgram,
    Program,
    Rule,
    Symbol,
    Variable,
    format_symbol,
)

logger = get_logger(__name__)


GRAMMAR = r"""
    program: (statement ".")*
    ?statement: rule | directive

    rule: atom [":-" literal ("," literal)*]
    literal: atom          -> pos_literal
           | "not" atom    -> neg_literal

    directive: "#open" NAME "/" INT   -> open_directive
             | "#fresh" NAME "/" INT  -> fresh_directive

    atom: NAME ["(" term ("," term)* ")"]
    term: NAME ["(" term ("," term)* ")"] -> compound
        | VARIABLE                         -> variable

    query: disjunction
    ?disjunction: conjunction ("or" conjunction)*
    ?conjunction: negation ("and" negation)*
    ?negation: "not" negation  -> negated
             | atom
             | "(" disjunction ")"

    NAME: /[a-z0-9][A-Za-z0-9_]*/
    VARIABLE: /[A-Z_][A-Za-z0-9_]*/
    COMMENT: /%[^\n]*/

    %import common.INT
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

_parser = Lark(GRAMMAR, start=["program", "query"], parser="lalr", propagate_positions=False)


@dataclass(frozen=True)
class _Directive:
    kind: str
    symbol: Symbol
    line: int
    column: int


class _ProgramTransformer(Transformer):
    """Builds AST values and checks that every symbol keeps one arity."""

    def __init__(self, allow_skolems: bool = False) -> None:
        super().__init__()
        self.allow_skolems = allow_skolems
        self.predicate_arity: dict[str, int] = {}
        self.function_arity: dict[str, int] = {}

    def _register(self, table: dict[str, int], kind: str, name: Token, arity: int) -> None:
        skolem = (
            self.allow_skolems
            and kind == "function"
            and arity == 0
            and SKOLEM_PATTERN.fullmatch(name) is not None
        )
        if name.startswith(RESERVED_PREFIX) and not skolem:
            raise ReservedSymbolError(
                f"symbol '{name}' uses the reserved prefix '{RESERVED_PREFIX}'",
                details={"line": name.line, "column": name.column},
            )
        known = table.setdefault(str(name), arity)
        if known != arity:
            raise ArityError(
                f"{kind} '{name}' used with arities {known} and {arity}",
                details={"line": name.line, "column": name.column},
            )

    def program(self, children: list) -> list:
        return children

    def rule(self, children: list) -> Rule:
        head, *body = children
        literals = [lit for lit in body if lit is not None]
        pos = tuple(a for sign, a in literals if sign)
        neg = tuple(a for sign, a in literals if not sign)
        return Rule(head, pos, neg)

    def pos_literal(self, children: list) -> tuple[bool, Atom]:
        return (True, children[0])

    def neg_literal(self, children: list) -> tuple[bool, Atom]:
        return (False, children[0])

    def atom(self, children: list) -> Atom:
        name, *args = children
        args = [a for a in args if a is not None]
        self._register(self.predicate_arity, "predicate", name, len(args))
        return Atom(str(name), tuple(args))

    def compound(self, children: list) -> Compound:
        name, *args = children
        args = [a for a in args if a is not None]
        self._register(self.function_arity, "function", name, len(args))
        return Compound(str(name), tuple(args))

    def variable(self, children: list) -> Variable:
        return Variable(str(children[0]))

    def open_directive(self, children: list) -> _Directive:
        return self._directive("open", children)

    def fresh_directive(self, children: list) -> _Directive:
        return self._directive("fresh", children)

    def _directive(self, kind: str, children: list) -> _Directive:
        name, arity = children
        if name.startswith(RESERVED_PREFIX):
            raise ReservedSymbolError(
                f"symbol '{name}' uses the reserved prefix '{RESERVED_PREFIX}'",
                details={"line": name.line, "column": name.column},
            )
        return _Directive(kind, (str(name), int(arity)), name.line, name.column)

    # query connectives
    def query(self, children: list) -> Query:
        return children[0]

    def negated(self, children: list) -> Not:
        return Not(children[0])

    def conjunction(self, children: list) -> Query:
        result = children[0]
        for child in children[1:]:
            result = And(result, child)
        return result

    def disjunction(self, children: list) -> Query:
        result = children[0]
        for child in children[1:]:
            result = Or(result, child)
        return result


def _run(text: str, start: str) -> tuple[object, _ProgramTransformer]:
    try:
        tree = _parser.parse(text, start=start)
    except UnexpectedEOF as e:
        raise ParseError("unexpected end of input", details={"line": None, "column": None}) from e
    except UnexpectedInput as e:
        raise ParseError(
            "syntax error",
            details={"line": e.line, "column": e.column},
        ) from e

    transformer = _ProgramTransformer(allow_skolems=start == "query")
    try:
        return transformer.transform(tree), transformer
    except VisitError as e:
        if isinstance(e.orig_exc, OpenLPError):
            raise e.orig_exc from None
        raise


def _statements(text: str) -> tuple[list[Rule], list[_Directive], _ProgramTransformer]:
    statements, transformer = _run(text, "program")
    assert isinstance(statements, list)
    rules = [s for s in statements if isinstance(s, Rule)]
    directives = [s for s in statements if isinstance(s, _Directive)]
    return rules, directives, transformer


def parse_program(text: str) -> Program:
    """
    Parse a normal logic program.

    Args:
        text: Program source

    Returns:
        Program with rules in source order

    Raises:
        ParseError: On syntax errors or directives (use parse_open_program)
        ArityError: When a symbol is used with two arities
    """
    rules, directives, _ = _statements(text)
    if directives:
        first = directives[0]
        raise ParseError(
            f"directive #{first.kind} is only allowed in open programs",
            details={"line": first.line, "column": first.column},
        )
    logger.debug(f"Parsed program with {len(rules)} rules")
    return Program(tuple(rules))


def parse_open_program(text: str) -> OpenProgram:
    """
    Parse an open program: rules plus #fresh and #open directives.

    Fresh symbols must not occur in the program; directive arities must agree
    with each other and with the program's use of the symbol.
    """
    rules, directives, transformer = _statements(text)
    declared: dict[tuple[str, str], _Directive] = {}
    fresh: set[Symbol] = set()
    open_: set[Symbol] = set()

    for d in directives:
        name, arity = d.symbol
        position = {"line": d.line, "column": d.column}
        previous = declared.setdefault((d.kind, name), d)
        if previous.symbol[1] != arity:
            raise ArityError(
                f"#{d.kind} {name} declared with arities {previous.symbol[1]} and {arity}",
                details=position,
            )
        if d.kind == "fresh":
            if name in transformer.function_arity:
                raise ParseError(
                    f"fresh symbol {format_symbol(d.symbol)} occurs in the program",
                    details=position,
                )
            fresh.add(d.symbol)
        else:
            used = transformer.predicate_arity.get(name)
            if used is not None and used != arity:
                raise ArityError(
                    f"#open {format_symbol(d.symbol)} but '{name}' is used with arity {used}",
                    details=position,
                )
            open_.add(d.symbol)

    logger.debug(
        f"Parsed open program with {len(rules)} rules, {len(fresh)} fresh, {len(open_)} open"
    )
    return OpenProgram(Program(tuple(rules)), frozenset(fresh), frozenset(open_))


def parse_query(text: str) -> Query:
    """
    Parse a ground boolean query: atoms combined with not/and/or.

    Raises:
        ParseError: On syntax errors or when an atom is not ground
    """
    query, _ = _run(text, "query")
    for a in query_atoms(query):  # type: ignore[arg-type]
        if not a.is_ground:
            raise ParseError(f"query atom {a} is not ground", details={"atom": str(a)})
    return query  # type: ignore[return-value]

