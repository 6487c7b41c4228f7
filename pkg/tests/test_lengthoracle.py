import pytest

from oracles import local_length_linear_algebra
from jetmult import lengthoracle
from jetmult.components import Composition, enumerate_minimal_primes, multiplicity_formula
from jetmult.lengthoracle import (
    GenericDisagreementError,
    GenericSubstitution,
    NotMinimalError,
    Trial,
    local_length_at_origin,
    off_component_variables,
    oracle_multiplicity,
    run_trial,
    substituted_generators,
)
from jetmult.polycore import LEX, JetVar, var

y1, y2, y3 = var(1, 0), var(2, 0), var(3, 0)
SEEDS = [11, 12]


def test_local_length_examples():
    ll = local_length_at_origin([y1, y2])
    assert (ll.length, ll.truncation_order) == (1, 1)
    assert local_length_at_origin([y1 * y2, 3 * y1 + 5 * y2]).length == 2
    assert local_length_at_origin([y1**2, y1 * y2, y2**2]).length == 3


def test_dimensions_nondecreasing_and_stable():
    ll = local_length_at_origin([y1**3 - y2**2, y1 * y2 * y3, y3**2 + y1 * y2])
    dims = ll.dimensions
    assert all(a <= b for a, b in zip(dims, dims[1:]))
    assert dims[-1] == dims[-2] == ll.length
    assert ll.length == local_length_linear_algebra([y1**3 - y2**2, y1 * y2 * y3, y3**2 + y1 * y2],
                                                   [JetVar(1, 0), JetVar(2, 0), JetVar(3, 0)])


def test_not_minimal():
    # the origin lies on the line y2 = 0: not an isolated point
    with pytest.raises(NotMinimalError):
        local_length_at_origin([y1 * y2, y2**2], n_max=8)


def test_origin_must_lie_on_ideal():
    with pytest.raises(ValueError):
        local_length_at_origin([y1 + 1])


def test_substitution_draw():
    variables = [JetVar(1, 1), JetVar(2, 1), JetVar(3, 0)]
    a = GenericSubstitution.draw(5, variables, bound=7)
    assert a == GenericSubstitution.draw(5, variables, bound=7)
    assert a != GenericSubstitution.draw(6, variables, bound=7)
    for v in a.values.values():
        assert v != 0 and abs(v.numerator) <= 7 and v.denominator <= 7


def test_substituted_generators_live_on_component():
    c = Composition.of(1, 2)
    sub = GenericSubstitution.draw(1, off_component_variables(2, 2, c))
    gens = substituted_generators(2, 2, c, sub)
    assert set().union(*(g.variables() for g in gens)) <= {JetVar(j, 0) for j in (1, 2, 3)}
    assert len(sub.values) == 3


def test_oracle_examples():
    assert oracle_multiplicity(2, 1, Composition.of(1, 1), SEEDS).length == 2
    res = oracle_multiplicity(1, 2, Composition.of(3), SEEDS)
    assert res.length == 1 and res.truncation_order_used == 1
    assert oracle_multiplicity(2, 2, Composition.of(1, 2), SEEDS).length == 3


def test_oracle_needs_two_seeds():
    with pytest.raises(ValueError):
        oracle_multiplicity(2, 1, Composition.of(1, 1), [1])


@pytest.mark.parametrize("r, m", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_oracle_matches_linear_algebra(r, m):
    """Same substituted ideal, length measured without any Groebner basis."""
    for P in enumerate_minimal_primes(r, m):
        c = P.composition
        sub = GenericSubstitution.draw(3, off_component_variables(r, m, c))
        gens = substituted_generators(r, m, c, sub)
        variables = [JetVar(j, 0) for j in range(1, m + 2)]
        assert local_length_at_origin(gens).length == local_length_linear_algebra(gens, variables)


def test_seed_determinism():
    c = Composition.of(1, 1, 1)
    a = oracle_multiplicity(3, 2, c, [5, 9]).to_record()
    b = oracle_multiplicity(3, 2, c, [5, 9]).to_record()
    assert a == b
    assert a["seeds"] == [5, 9] and a["B"] == 100 and a["lengths"] == [6, 6]


def test_replay_from_record():
    c = Composition.of(2, 1)
    rec = oracle_multiplicity(2, 2, c, [21, 22]).to_record()
    for seed, values, length in zip(rec["seeds"], rec["substitutions"], rec["lengths"]):
        t = run_trial(2, 2, c, seed)
        assert t.substitution.to_json() == values and t.length == length


@pytest.mark.parametrize("r, m, parts", [(2, 2, (1, 2)), (3, 2, (1, 1, 1)), (2, 3, (2, 2))])
def test_lex_gives_same_length(r, m, parts):
    c = Composition(parts, m)
    assert oracle_multiplicity(r, m, c, SEEDS, ordering=LEX).length == oracle_multiplicity(r, m, c, SEEDS).length


@pytest.mark.parametrize("r, m", [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3)])
def test_length_additivity_through_oracle(r, m):
    """ell(m; t) = sum over t_n > 0 of ell(m-1; t - e_n), both sides measured."""
    for P in enumerate_minimal_primes(r, m):
        t = P.composition.parts
        whole = oracle_multiplicity(r, m, P.composition, SEEDS).length
        pieces = 0
        for n, tn in enumerate(t):
            if tn:
                lowered = t[:n] + (tn - 1,) + t[n + 1:]
                pieces += oracle_multiplicity(r, m - 1, Composition(lowered, m - 1), SEEDS).length
        assert whole == pieces


def test_disagreement_retries_then_aborts(monkeypatch):
    calls = []

    def fake(r, m, c, seed, *args):
        calls.append(seed)
        return Trial(seed, GenericSubstitution(seed, {}), len(calls) % 2 + 1, 1)

    monkeypatch.setattr(lengthoracle, "run_trial", fake)
    with pytest.raises(GenericDisagreementError):
        oracle_multiplicity(2, 1, Composition.of(1, 1), [1, 2])
    assert len(calls) == 2 * lengthoracle.MAX_ROUNDS
    assert len(set(calls)) == len(calls)


def test_disagreement_then_agreement(monkeypatch):
    lengths = iter([1, 2, 2, 2])

    def fake(r, m, c, seed, *args):
        return Trial(seed, GenericSubstitution(seed, {}), next(lengths), 1)

    monkeypatch.setattr(lengthoracle, "run_trial", fake)
    res = oracle_multiplicity(2, 1, Composition.of(1, 1), [1, 2])
    assert res.length == 2 and len(res.rejected_rounds) == 1
    assert res.trials[0].seed != 1


def test_formula_not_consulted():
    # sanity: the oracle module never imports the closed form
    import inspect
    assert "multiplicity_formula" not in inspect.getsource(lengthoracle)
    assert multiplicity_formula(Composition.of(1, 1)) == 2
