import random

import pytest

from openlp.semantics.open_programs import OpenInferenceOracle, OpenMode, completion_model_set
from openlp.semantics.stable import EntailMode, entails_models, stable_models
from openlp.syntax.herbrand import herbrand_universe, signature
from openlp.syntax.queries import Not
from openlp.syntax.terms import OpenProgram
from openlp.tests.integration.generators import (
    CLOSED_PREDICATES,
    OPEN_PREDICATES,
    constants_of,
    random_consistent_program,
    random_open_program,
    random_query,
)
from openlp.transform.pi import pi_model_set

pytestmark = pytest.mark.integration

MAX_ATOMS = 64


class ReplayOracle(OpenInferenceOracle):
    """Solves the completions once and replays them for every verdict."""

    def __init__(self, omega: OpenProgram):
        super().__init__(omega, max_atoms=MAX_ATOMS)
        self.table = list(OpenInferenceOracle.iter_completion_models(self))

    def iter_completion_models(self):
        yield from self.table


def verdicts(oracle: OpenInferenceOracle, q) -> dict[OpenMode, bool]:
    return {mode: oracle.entails(mode, q) for mode in OpenMode}


@pytest.mark.parametrize("seed", range(500))
def test_modes_are_pairwise_dual_and_ordered(seed):
    rng = random.Random(seed)
    omega = random_open_program(rng)
    constants = constants_of(omega.program)
    q = random_query(rng, CLOSED_PREDICATES + OPEN_PREDICATES, constants)
    oracle = ReplayOracle(omega)

    positive = verdicts(oracle, q)
    negated = verdicts(oracle, Not(q))

    assert positive[OpenMode.CRD] == (not negated[OpenMode.SKP])
    assert positive[OpenMode.SC] == (not negated[OpenMode.CS])
    if oracle.has_consistent_completion():
        assert not positive[OpenMode.SKP] or positive[OpenMode.CS]
        assert not positive[OpenMode.SKP] or positive[OpenMode.SC]
        assert not positive[OpenMode.CS] or positive[OpenMode.CRD]
        assert not positive[OpenMode.SC] or positive[OpenMode.CRD]


@pytest.mark.parametrize("seed", range(100))
def test_closed_program_collapses_to_plain_entailment(seed):
    rng = random.Random(10_000 + seed)
    program = random_consistent_program(rng)
    omega = OpenProgram(program)
    plain = stable_models(program, herbrand_universe(signature(program)), MAX_ATOMS)

    assert plain
    assert completion_model_set(omega, MAX_ATOMS) == plain
    assert pi_model_set(omega, max_atoms=MAX_ATOMS) == plain

    q = random_query(rng, CLOSED_PREDICATES, constants_of(program))
    open_verdicts = verdicts(ReplayOracle(omega), q)
    credulous = entails_models(plain, EntailMode.CREDULOUS, q)
    skeptical = entails_models(plain, EntailMode.SKEPTICAL, q)
    assert open_verdicts[OpenMode.CRD] == open_verdicts[OpenMode.SC] == credulous
    assert open_verdicts[OpenMode.SKP] == open_verdicts[OpenMode.CS] == skeptical
