import pytest

from openlp.core.exceptions import ScopeError
from openlp.semantics.stable import stable_models
from openlp.syntax.parser import parse_open_program, parse_program
from openlp.syntax.terms import OpenProgram, Program
from openlp.transform.export import export_text, rename_symbols
from openlp.transform.pi import pi_model_set, translate
from openlp.transform.unfold import unfold

pytestmark = pytest.mark.unit

UNFOLDED_CLOSED_DOMAIN = """\
p(a).
q :- not p(a).
r(a) :- not r_bar(a).
r_bar(a) :- not r(a).
"""


def test_unfold_closed_domain_example(example_closed_domain):
    pi = translate(example_closed_domain)

    unfolded = unfold(pi)

    assert len(unfolded) == 4
    assert export_text(unfolded, pi.names, readable=True) == UNFOLDED_CLOSED_DOMAIN


def test_unfolded_program_keeps_the_models(example_closed_domain):
    unfolded = unfold(translate(example_closed_domain))

    projected = [m.project({("p", 1), ("q", 0), ("r", 1)}) for m in stable_models(unfolded)]
    assert sorted(m.key() for m in projected) == [
        m.key() for m in pi_model_set(example_closed_domain)
    ]


def test_unfold_empty_program():
    assert unfold(translate(OpenProgram())) == Program()


def test_unfold_without_open_machinery():
    assert unfold(translate(parse_open_program("p(a)."))) == parse_program("p(a).")


def test_unfold_refuses_fresh_symbols(example_open):
    with pytest.raises(ScopeError):
        unfold(translate(example_open))


def test_export_single_rule():
    assert export_text(parse_program("q :- not p(a).")) == "q :- not p(a).\n"


def test_export_empty_program():
    assert export_text(Program()) == ""


def test_export_drops_duplicates_in_program_order():
    program = parse_program("b. a. b. c :- a.")

    assert export_text(program) == "b.\na.\nc :- a.\n"


def test_export_is_parseable_when_not_readable(example_open):
    text = export_text(translate(example_open).program)

    # generated names are plain identifiers; only the prefix check stops a reparse
    assert all(line.endswith(".") for line in text.splitlines())
    assert len(text.splitlines()) == 9


def test_rename_symbols_renames_predicates_and_functors():
    program = parse_program("p(f(a)) :- not q(a).")

    renamed = rename_symbols(program, {"p": "pp", "a": "b", "f": "g"})

    assert renamed == parse_program("pp(g(b)) :- not q(b).")
