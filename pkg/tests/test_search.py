import pytest

from upwords.errors import BadParams, CountMismatch, TooLarge
from upwords.feasibility import DiamondTemplate
from upwords.search import (
    SearchSpec,
    brute_force_oracle,
    exhaustive_search,
    is_representative,
    pattern_length_check,
    single_diamond_template,
    sweep_single_diamond,
)
from upwords.words import canonicalize, is_universal, parse_partial_word as P


def run(template, **kw):
    return exhaustive_search(SearchSpec(template, **kw))


def test_pattern_length_check():
    assert pattern_length_check(DiamondTemplate.with_diamonds(8, [2], 3)) == 8
    with pytest.raises(CountMismatch) as exc:
        pattern_length_check(DiamondTemplate.with_diamonds(9, [2], 3))
    assert (exc.value.expected, exc.value.actual) == (8, 9)
    assert pattern_length_check(DiamondTemplate.with_diamonds(8, [1, 5], 4, cyclic=True)) == 16


def test_search_examples():
    r = run(single_diamond_template(3, 4))
    assert r.witnesses == [] and r.exhausted
    r = run(single_diamond_template(4, 6))
    assert P("01100*011110100") in r.witnesses
    r = run(DiamondTemplate.with_diamonds(2, [1, 2], 2))
    assert r.witnesses == [P("**")]
    r = run(DiamondTemplate.with_diamonds(8, [1, 5], 4, cyclic=True))
    assert r.witnesses
    assert {canonicalize(w, cyclic=True) for w in r.witnesses} == {canonicalize(P("*001*110"), cyclic=True)}


def test_oracle_examples():
    r = brute_force_oracle(SearchSpec(single_diamond_template(2, 1), symmetry_reduction=True))
    assert r.witnesses == [P("*011")]
    r = brute_force_oracle(SearchSpec(single_diamond_template(3, 1)))
    assert P("*00111010") in r.witnesses
    r = brute_force_oracle(SearchSpec(DiamondTemplate.with_diamonds(3, [2], 2)))
    assert r.witnesses == []
    with pytest.raises(TooLarge):
        brute_force_oracle(SearchSpec(single_diamond_template(6, 1)), max_assignments=1000)


def test_sweep_examples():
    found = {n: {k for k, r in sweep_single_diamond(2, n).items() if r.witnesses} for n in (2, 3, 4)}
    assert found[2] == {1}
    assert found[3] == {1, 2}
    assert found[4] == {1, 2, 3, 6, 8}
    with pytest.raises(TooLarge):
        sweep_single_diamond(2, 8)


def test_count_mismatch_is_raised():
    with pytest.raises(CountMismatch):
        run(DiamondTemplate.with_diamonds(9, [2], 3))


@pytest.mark.parametrize(
    "template",
    [
        single_diamond_template(4, 6),
        single_diamond_template(4, 2),
        DiamondTemplate.with_diamonds(14, [1, 7], 4),
        DiamondTemplate.with_diamonds(8, [1, 5], 4, cyclic=True),
        DiamondTemplate.from_text("0*??????", 3),
    ],
    ids=str,
)
def test_pruning_is_sound(template):
    fast = run(template)
    slow = run(template, pruning=False)
    assert fast.witnesses == slow.witnesses
    assert fast.nodes_explored <= slow.nodes_explored
    for w in fast.witnesses:
        assert template.matches(w)
        assert is_universal(w, template.n, template.cyclic)


def test_determinism_and_threads():
    t = single_diamond_template(4, 6)
    a, b = run(t), run(t)
    assert a.witnesses == b.witnesses and a.nodes_explored == b.nodes_explored
    par = run(t, threads=2)
    assert par.witnesses == a.witnesses and par.exhausted


def test_first_mode_threads_agree():
    t = single_diamond_template(5, 9)
    assert run(t, mode="first", threads=2).witnesses == run(t, mode="first").witnesses


def test_budget_monotone():
    t = single_diamond_template(4, 6)
    full = run(t)
    previous = []
    for budget in (1, 10, 50, 100, 150, 10**6):
        r = run(t, node_budget=budget)
        assert r.witnesses[: len(previous)] == previous
        assert set(r.witnesses) <= set(full.witnesses)
        previous = r.witnesses
    assert previous == full.witnesses and r.exhausted
    assert not run(t, node_budget=5).exhausted


def test_time_budget():
    r = run(single_diamond_template(6, 20), time_budget=0.05)
    assert not r.exhausted
    assert all(is_universal(w, 6) for w in r.witnesses)


def test_symmetry_reduction():
    t = single_diamond_template(4, 6)
    full = run(t).witnesses
    reduced = run(t, symmetry_reduction=True).witnesses
    assert set(reduced) <= set(full)
    assert all(is_representative(w, t) for w in reduced)
    # every full witness has its letter-swapped image among the reduced set or is itself there
    for w in full:
        assert w in reduced or w.permuted((1, 0)) in reduced
    t2 = DiamondTemplate.with_diamonds(2, [1, 2], 2)
    assert run(t2, symmetry_reduction=True).witnesses == [P("**")]


def test_symmetry_reduction_cyclic():
    t = DiamondTemplate.with_diamonds(8, [1, 5], 4, cyclic=True)
    full = run(t).witnesses
    reduced = run(t, symmetry_reduction=True).witnesses
    assert 0 < len(reduced) < len(full)


def test_contradiction_gives_empty_result():
    r = run(DiamondTemplate.from_text("???*???", 3))
    assert r.witnesses == [] and r.exhausted and r.nodes_explored == 0


def test_spec_validation():
    with pytest.raises(BadParams):
        SearchSpec(single_diamond_template(3, 1), mode="some")


def test_alpha_three_single_diamond_is_empty():
    t = DiamondTemplate.with_diamonds(8, [1], 2, alpha=3)
    assert pattern_length_check(t) == 9
    assert run(t).witnesses == []
    assert brute_force_oracle(SearchSpec(t)).witnesses == []
