import pytest

from openlp.abduction.framework import (
    AbductionFramework,
    Explanation,
    SkolemBudget,
    abducibles,
    abducibles_open,
    framework_to_open_program,
    name_rules,
    parse_framework,
)
from openlp.abduction.generalized import (
    collapse_isomorphic,
    explain_credulous,
    gen_skeptical_consequence,
    gsm_enumerate,
    gsm_model_set,
    gsm_via_pi,
)
from openlp.core import config
from openlp.core.exceptions import EnumerationLimitError, ParseError, ScopeError
from openlp.semantics.open_programs import completion_model_set
from openlp.semantics.stable import Interpretation, eval_query, stable_models
from openlp.syntax.parser import parse_program, parse_query
from openlp.syntax.terms import Program, Rule, atom

pytestmark = pytest.mark.unit


def strings(atoms) -> list[str]:
    return sorted(str(a) for a in atoms)


def test_skolem_budget_names():
    assert SkolemBudget(0).names == ()
    assert SkolemBudget(3).names == ("o_sk0", "o_sk1", "o_sk2")
    with pytest.raises(ScopeError):
        SkolemBudget(-1)


def test_abducibles_over_theory_constants(diagnosis):
    assert abducibles(diagnosis) == [atom("r", "a")]


def test_no_abducible_predicates():
    fr = AbductionFramework(parse_program("p(a)."))

    assert abducibles(fr) == []


def test_abducibles_cross_product():
    fr = parse_framework("p(a). p(b). #open r/1.")

    assert strings(abducibles(fr)) == ["r(a)", "r(b)"]


def test_abducibles_reject_function_symbols():
    with pytest.raises(ScopeError):
        abducibles(parse_framework("p(f(a)). #open r/1."))


def test_open_abducibles(diagnosis):
    assert strings(abducibles_open(diagnosis, SkolemBudget(1))) == ["r(a)", "r(o_sk0)"]
    assert abducibles_open(diagnosis, SkolemBudget(0)) == abducibles(diagnosis)
    assert strings(abducibles_open(diagnosis, SkolemBudget(2))) == [
        "r(a)",
        "r(o_sk0)",
        "r(o_sk1)",
    ]


def test_parse_framework_rejects_fresh_directives():
    with pytest.raises(ParseError):
        parse_framework("p(a). #fresh b/0. #open r/1.")


def test_no_generalized_model_satisfies_q_without_skolems(diagnosis):
    pairs = gsm_enumerate(diagnosis, SkolemBudget(0))

    assert pairs
    assert all(atom("q") not in m for _, m in pairs)


def test_one_skolem_explains_q(diagnosis):
    pairs = gsm_enumerate(diagnosis, SkolemBudget(1))

    expected = (
        Explanation(frozenset({atom("r", "o_sk0")})),
        Interpretation.of([atom("p", "a"), atom("q"), atom("r", "o_sk0")]),
    )
    assert expected in pairs


def test_zero_ary_abducible_pairs():
    fr = AbductionFramework(Program(), frozenset({("r", 0)}))

    pairs = gsm_enumerate(fr, SkolemBudget(0))

    assert [(e.as_strings(), m.as_strings()) for e, m in pairs] == [([], []), (["r"], ["r"])]


def test_minimal_explanation_of_q(diagnosis):
    found = explain_credulous(diagnosis, SkolemBudget(1), parse_query("q"))

    assert [(e.as_strings(), e.minimal) for e in found] == [
        (["r(o_sk0)"], True),
        (["r(a)", "r(o_sk0)"], False),
    ]


def test_entailed_query_needs_no_abduction(diagnosis):
    found = explain_credulous(diagnosis, SkolemBudget(1), parse_query("p(a)"))

    assert found[0] == Explanation(frozenset(), minimal=True)
    assert all(not e.minimal for e in found[1:])


def test_no_explanation_without_skolems(diagnosis):
    assert explain_credulous(diagnosis, SkolemBudget(0), parse_query("q")) == []


def test_explanations_yield_models_satisfying_the_query(diagnosis):
    q = parse_query("q")
    for explanation in explain_credulous(diagnosis, SkolemBudget(2), q):
        theory = diagnosis.theory + [Rule(a) for a in explanation.sorted_atoms()]
        domain = {arg for a in theory.rules for arg in a.head.args}
        models = stable_models(theory, domain)
        assert any(eval_query(m, q) for m in models)


def test_skeptical_consequence_with_unique_model():
    fr = parse_framework("q :- r(a). #open r/1.")

    found = gen_skeptical_consequence(fr, SkolemBudget(0), parse_query("q"))

    assert [e.as_strings() for e in found] == [["r(a)"]]


def test_skeptical_consequence_fails_when_models_persist():
    fr = parse_framework("p :- not q. q :- not p. #open r/0.")

    assert gen_skeptical_consequence(fr, SkolemBudget(0), parse_query("p")) == []


def test_tautology_is_a_consequence_of_every_consistent_explanation():
    fr = parse_framework("p :- not p. p :- r. #open r/0. #open s/0.")

    found = gen_skeptical_consequence(fr, SkolemBudget(0), parse_query("q or not q"))

    assert [e.as_strings() for e in found] == [["r"], ["r", "s"]]


def test_inconsistent_theories_qualify_only_on_request():
    fr = parse_framework("p :- not p. p :- r. #open r/0.")
    q = parse_query("p and not p")

    assert gen_skeptical_consequence(fr, SkolemBudget(0), q) == []
    vacuous = gen_skeptical_consequence(fr, SkolemBudget(0), q, require_consistent=False)
    assert [(e.as_strings(), e.minimal) for e in vacuous] == [([], True)]


def test_gsm_via_translation_includes_the_skolem_model(diagnosis):
    models = gsm_via_pi(diagnosis, SkolemBudget(1))

    assert Interpretation.of([atom("p", "a"), atom("q"), atom("r", "o_sk0")]) in models
    assert models == gsm_model_set(diagnosis, SkolemBudget(1))


def test_gsm_via_translation_without_skolems(example_closed_domain):
    fr = AbductionFramework(example_closed_domain.program, example_closed_domain.open)

    models = gsm_via_pi(fr, SkolemBudget(0))

    assert [m.as_strings() for m in models] == [["p(a)"], ["p(a)", "r(a)"]]


def test_gsm_via_translation_without_abducibles():
    theory = parse_program("p :- not q. q :- not p.")

    assert gsm_via_pi(AbductionFramework(theory), SkolemBudget(0)) == stable_models(theory)


def test_strict_activation_ignores_unmentioned_skolems():
    fr = parse_framework("p(a). q :- not p(X). #open r/1.")
    budget = SkolemBudget(1)

    strict = gsm_via_pi(fr, budget)
    literal = gsm_via_pi(fr, budget, strict_activation=False)

    assert strict == gsm_model_set(fr, budget)
    assert literal == completion_model_set(framework_to_open_program(fr, budget))
    assert Interpretation.of([atom("p", "a"), atom("q")]) in literal
    assert Interpretation.of([atom("p", "a"), atom("q")]) not in strict


def test_budget_monotonicity(diagnosis):
    smaller = set(gsm_model_set(diagnosis, SkolemBudget(1)))
    larger = set(gsm_model_set(diagnosis, SkolemBudget(2)))

    assert smaller <= larger


def test_candidate_cap(diagnosis, monkeypatch):
    monkeypatch.setattr(config.settings, "MAX_COMPLETIONS", 4)

    gsm_enumerate(diagnosis, SkolemBudget(1))
    with pytest.raises(EnumerationLimitError):
        gsm_enumerate(diagnosis, SkolemBudget(2))


def test_collapse_isomorphic_explanations(diagnosis):
    found = explain_credulous(diagnosis, SkolemBudget(2), parse_query("q"))
    minimal = [e for e in found if e.minimal]

    assert [e.as_strings() for e in minimal] == [["r(o_sk0)"], ["r(o_sk1)"]]
    assert [e.as_strings() for e in collapse_isomorphic(minimal)] == [["r(o_sk0)"]]


def test_collapse_keeps_structurally_different_explanations():
    explanations = [
        Explanation(frozenset({atom("r", "o_sk0"), atom("t", "o_sk1")})),
        Explanation(frozenset({atom("r", "o_sk1"), atom("t", "o_sk0")})),
        Explanation(frozenset({atom("r", "o_sk0"), atom("t", "o_sk0")})),
    ]

    kept = collapse_isomorphic(explanations)

    assert kept == [explanations[0], explanations[2]]


def test_rule_abduction_by_naming():
    fr = parse_framework("p(a). #open r/1.")
    named = name_rules(fr, parse_program("q :- p(X), not r(X)."))

    assert ("o_rule0", 0) in named.abducibles
    found = explain_credulous(named, SkolemBudget(0), parse_query("q"))

    assert [e.as_strings() for e in found if e.minimal] == [["o_rule0"]]
    assert gsm_via_pi(named, SkolemBudget(0)) == gsm_model_set(named, SkolemBudget(0))
