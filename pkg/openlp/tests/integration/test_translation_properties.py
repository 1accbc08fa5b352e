import random

import pytest

from openlp.semantics.open_programs import OpenMode, completion_model_set, open_entails
from openlp.semantics.stable import (
    EntailMode,
    Interpretation,
    canonical_order,
    entails,
    stable_models,
)
from openlp.syntax.parser import parse_open_program, parse_program, parse_query
from openlp.syntax.terms import constant
from openlp.tests.conftest import EXAMPLE_OPEN
from openlp.tests.integration.generators import (
    CLOSED_PREDICATES,
    OPEN_PREDICATES,
    constants_of,
    random_open_program,
    random_query,
)
from openlp.transform.pi import open_entails_via_pi, pi_model_set, translate
from openlp.transform.unfold import unfold

pytestmark = pytest.mark.integration

MAX_ATOMS = 64


@pytest.mark.parametrize("seed", range(200))
def test_translation_models_match_completion_models(seed):
    rng = random.Random(20_000 + seed)
    omega = random_open_program(rng)

    assert pi_model_set(omega, max_atoms=MAX_ATOMS) == completion_model_set(omega, MAX_ATOMS)


@pytest.mark.parametrize("seed", range(100))
def test_translation_verdicts_match_oracle(seed):
    rng = random.Random(30_000 + seed)
    omega = random_open_program(rng)
    q = random_query(rng, CLOSED_PREDICATES + OPEN_PREDICATES, constants_of(omega.program))

    for mode in (OpenMode.CRD, OpenMode.SKP):
        assert open_entails_via_pi(omega, mode, q, max_atoms=MAX_ATOMS) == open_entails(
            omega, mode, q, MAX_ATOMS
        )


@pytest.mark.parametrize("seed", range(200))
def test_unfolded_translation_keeps_the_models(seed):
    rng = random.Random(140_000 + seed)
    omega = random_open_program(rng, with_fresh=False)
    pi = translate(omega)
    generated = pi.names.generated_predicates()

    unfolded = canonical_order(
        Interpretation.of(a for a in m.atoms if a.predicate not in generated)
        for m in stable_models(unfold(pi), max_atoms=MAX_ATOMS)
    )

    assert unfolded == pi_model_set(omega, max_atoms=MAX_ATOMS)


class TestNaiveEmbeddings:
    """
    Cyclic definitions of an open predicate over a fixed domain cannot stand
    in for the completions: whichever domain is fixed, one verdict is wrong.
    """

    BASE = "p(a). q :- not p(X)."
    ONLY_A = " r(a) :- not r_bar(a). r_bar(a) :- not r(a)."
    WITH_B = " r(b) :- not r_bar(b). r_bar(b) :- not r(b)."

    def naive(self, text: str, names: list[str]) -> dict[str, bool]:
        program = parse_program(text)
        domain = [constant(name) for name in names]
        return {
            query: entails(program, domain, EntailMode.SKEPTICAL, parse_query(query))
            for query in ["q", "not q"]
        }

    def test_open_program_entails_neither(self, example_open):
        for query in ["q", "not q"]:
            assert not open_entails(example_open, OpenMode.SKP, parse_query(query))

    def test_domain_without_b_entails_not_q(self):
        assert self.naive(self.BASE + self.ONLY_A, ["a"]) == {"q": False, "not q": True}

    def test_domain_with_b_entails_q(self):
        assert self.naive(self.BASE + self.ONLY_A + self.WITH_B, ["a", "b"]) == {
            "q": True,
            "not q": False,
        }

    def test_translation_entails_neither(self, example_open):
        for query in ["q", "not q"]:
            assert not open_entails_via_pi(example_open, OpenMode.SKP, parse_query(query))


def test_fresh_constants_without_open_predicates_diverge():
    # with O empty every completion is P itself, while the translation may still select b
    omega = parse_open_program(EXAMPLE_OPEN.replace(" #open r/1.", ""))
    q = parse_query("q")

    assert [str(m) for m in completion_model_set(omega)] == ["{p(a)}"]
    assert [str(m) for m in pi_model_set(omega)] == ["{p(a)}", "{p(a), q}"]
    assert not open_entails(omega, OpenMode.CRD, q)
    assert open_entails_via_pi(omega, OpenMode.CRD, q)
