from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from upwords.errors import BadParams, Contradiction
from upwords.feasibility import (
    FREE,
    DiamondTemplate,
    VerdictKind,
    cyclic_parameter_verdict,
    cyclic_template_verdict,
    max_single_position,
    normalize_position,
    prefix_run_verdict,
    propagate_constraints,
    single_diamond_length,
    single_diamond_verdict,
    two_diamond_shape_verdict,
    window_total,
)
from upwords.tables import entries
from upwords.words import DIAMOND, is_universal, parse_partial_word as P

EX, NO, UNK = VerdictKind.EXISTS, VerdictKind.NONEXISTENT, VerdictKind.UNKNOWN


def test_single_diamond_examples():
    v = single_diamond_verdict(3, 2, 1)
    assert (v.kind, v.theorem) == (NO, "T3.1")
    v = single_diamond_verdict(2, 4, 5)
    assert (v.kind, v.theorem) == (NO, "T3.3")
    v = single_diamond_verdict(2, 4, 6)
    assert v.kind == UNK and v.witness == P("01100*011110100")
    v = single_diamond_verdict(2, 5, 3)
    assert (v.kind, v.construction) == (EX, "posk")
    assert single_diamond_verdict(2, 4, 4).theorem == "T3.2"
    assert single_diamond_verdict(2, 6, 1).construction == "pos1"
    with pytest.raises(BadParams):
        single_diamond_verdict(2, 3, 0)
    with pytest.raises(BadParams):
        single_diamond_verdict(2, 3, 5)


def test_single_diamond_absolute_positions_mirror():
    # with a length, k is absolute and the verdict must match its mirror image
    for n in range(2, 6):
        for k in range(1, max_single_position(n) + 1):
            N = single_diamond_length(n, k)
            if N is None:
                continue
            a = single_diamond_verdict(2, n, k, N).to_dict()
            b = single_diamond_verdict(2, n, N + 1 - k, N).to_dict()
            assert a == b


def test_normalize_position():
    assert normalize_position(13, 15) == (3, True)
    assert normalize_position(3, 15) == (3, False)
    with pytest.raises(BadParams):
        normalize_position(16, 15)


def test_two_diamond_examples():
    v = two_diamond_shape_verdict(5, 5, 5, 20)
    assert (v.kind, v.theorem) == (NO, "T4.1")
    v = two_diamond_shape_verdict(5, 0, 4, 24)
    assert v.kind == UNK and v.witness == P("*0100*101011000001110111110010")
    v = two_diamond_shape_verdict(4, 3, 0, 3)
    assert (v.kind, v.theorem) == (NO, "C4.2")
    v = two_diamond_shape_verdict(2, 0, 0, 0)
    assert v.kind == EX and v.witness == P("**")
    v = two_diamond_shape_verdict(3, 4, 0, 0)
    assert v.kind == EX and v.witness == P("1110**")
    v = two_diamond_shape_verdict(6, 0, 9, 51)
    assert (v.kind, v.construction) == (EX, "two_diamonds")


def test_two_diamond_witnesses_are_universal():
    for e in entries(2):
        p, q = e.positions
        shape = (p - 1, q - p - 1, len(e.word) - q)
        v = two_diamond_shape_verdict(e.n, *shape)
        assert v.kind != NO
        if v.witness is not None:
            assert is_universal(v.witness, e.n)
        w = two_diamond_shape_verdict(e.n, *shape[::-1])
        assert w.kind == v.kind
        if w.witness is not None:
            assert is_universal(w.witness, e.n)


def _divisibility_oracle(alpha, n):
    # window count: N * alpha^d = alpha^n forces N to be a power of alpha;
    # each diamond lies in n windows, so the diamond total D = d * N / n is whole
    found = []
    for d in range(1, n):
        for j in range(n + 1):
            N = alpha**j
            D = Fraction(d * N, n)
            if N * alpha**d == alpha**n and D.denominator == 1 and 0 < D <= N:
                found.append(d)
    return found


@pytest.mark.parametrize("alpha", [2, 3, 4, 5])
def test_cyclic_parameter_verdict_against_enumeration(alpha):
    for n in range(2, 21):
        v = cyclic_parameter_verdict(alpha, n)
        ds = _divisibility_oracle(alpha, n)
        if gcd(alpha, n) == 1:
            assert (v.kind, v.theorem) == (NO, "C5.3") and ds == []
        elif (alpha, n) == (2, 2):
            assert v.theorem == "N2D1"
        elif not ds:
            assert (v.kind, v.theorem) == (NO, "C5.2")
        else:
            assert v.kind == UNK and list(v.d_list) == ds


def test_cyclic_examples():
    assert cyclic_parameter_verdict(2, 5).theorem == "C5.3"
    v = cyclic_parameter_verdict(2, 4)
    assert v.d_list == (1, 2) and is_universal(v.witness, 4, cyclic=True)
    assert cyclic_parameter_verdict(2, 12).d_list == (3, 6, 9)
    assert cyclic_parameter_verdict(2, 2).theorem == "N2D1"


def test_cyclic_template_verdict():
    t = DiamondTemplate.with_diamonds(8, [1], 4, cyclic=True)
    assert cyclic_template_verdict(t).kind == UNK
    t = DiamondTemplate.with_diamonds(8, [1, 2], 4, cyclic=True)
    assert cyclic_template_verdict(t).theorem == "L5.1-count"
    t = DiamondTemplate.from_text("*0??????", 4, cyclic=True)
    assert cyclic_template_verdict(t).kind == UNK
    t = DiamondTemplate.from_text("*???0???", 4, cyclic=True)
    assert cyclic_template_verdict(t).theorem == "L5.1-count"
    t = DiamondTemplate.with_diamonds(9, [1], 3, cyclic=True)
    assert cyclic_template_verdict(t).theorem == "C5.3"


def test_prefix_run_examples():
    t = DiamondTemplate.from_text("**????????", 4)
    assert prefix_run_verdict(2, 4, 2, t).theorem == "T6.2"
    t = DiamondTemplate.from_text("**001*11010", 4)
    assert prefix_run_verdict(2, 4, 2, t).kind == UNK
    v = prefix_run_verdict(2, 4, 3)
    assert (v.kind, v.construction) == (EX, "nm1_diamonds")
    with pytest.raises(BadParams):
        prefix_run_verdict(2, 4, 2, DiamondTemplate.from_text("***?????", 4))


def test_propagation_examples():
    # n=3, diamond at 4, length 7: the forward pass forces cells 5..7
    t = DiamondTemplate.from_text("???*???", 3)
    ref = propagate_constraints(t, mirror=False)
    assert ref.relation(5, 1) == "equal"
    assert ref.relation(6, 2) == "equal"
    assert ref.relation(7, 3) == "complement"
    # both directions together make the template impossible
    with pytest.raises(Contradiction):
        propagate_constraints(t)
    with pytest.raises(Contradiction) as exc:
        propagate_constraints(DiamondTemplate.from_text("*??", 2, alpha=3))
    assert exc.value.theorem == "T3.1"
    ref = propagate_constraints(DiamondTemplate.with_diamonds(8, [1], 4, cyclic=True))
    assert ref.template.diamonds == (1, 5)


def test_propagation_fixes_letters():
    t = DiamondTemplate.from_text("*0??????", 3)
    ref = propagate_constraints(t)
    # position-1 diamond: cells 2..n equal, cell n+1 complementary
    assert ref.template.cells[:4] == (DIAMOND, 0, 0, 1)


templates = st.integers(2, 4).flatmap(
    lambda n: st.lists(st.sampled_from([DIAMOND, FREE, FREE, FREE, 0, 1]), min_size=n, max_size=14).map(
        lambda cells: DiamondTemplate(tuple(cells), n)
    )
)


@settings(max_examples=300)
@given(templates)
def test_propagation_monotone_and_idempotent(t):
    try:
        ref = propagate_constraints(t)
    except Contradiction:
        return
    for before, after in zip(t.cells, ref.template.cells):
        if before != FREE:
            assert after == before
    again = propagate_constraints(ref.template)
    assert again.template == ref.template
    assert again.classes == ref.classes


@settings(max_examples=300)
@given(templates)
def test_propagation_mirror_symmetry(t):
    def outcome(x):
        try:
            return propagate_constraints(x).template.cells
        except Contradiction:
            return None

    a, b = outcome(t), outcome(t.reversed())
    assert (a is None) == (b is None)
    if a is not None:
        assert a == b[::-1]


def test_window_total():
    assert window_total(8, 3, 2, [2]) == 8
    assert window_total(9, 3, 2, [2]) == 9
    assert window_total(8, 4, 2, [1, 5], cyclic=True) == 16
    assert single_diamond_length(3, 4) == 7
    assert single_diamond_length(4, 6) == 15


def test_template_parsing():
    t = DiamondTemplate.from_text("0?*1", 3)
    assert t.cells == (0, FREE, DIAMOND, 1) and t.render() == "0?*1"
    assert t.diamonds == (3,) and t.free == (2,)
    assert t.matches(P("01*1")) and not t.matches(P("11*1"))
    with pytest.raises(BadParams):
        DiamondTemplate.with_diamonds(4, [5], 3)
