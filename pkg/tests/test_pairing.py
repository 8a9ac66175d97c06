import re

import pytest

import oracles
from booltop import fixtures as F
from booltop.boolsemi import BoolMatrix
from booltop.pairing import (PairingTheory, dotless_closed_form, dotless_theory, extended_gram,
                             pairing_state_space)
from booltop.theory import general_state_space, sign_sequences

PAIRING_GRAMS = {
    0: ["00010", "01011", "00111", "11111", "01110"],
    1: ["00010", "01011", "00111", "11111", "01111"],
}

# interval value, circle value
DOTLESS = {1: (0, 0), 2: (0, 1), 3: (1, 1), 4: (1, 0)}
SEQS = [""] + sign_sequences(4)


def space(lam):
    return pairing_state_space(F.pair_theory(lam))


@pytest.mark.parametrize("lam", [0, 1])
def test_extended_gram_matches_figure(lam):
    g = extended_gram(F.pair_theory(lam))
    assert g.to_strings() == PAIRING_GRAMS[lam]
    assert g.is_symmetric()
    assert F.pair_theory(lam).names() == ["xx'", "xy'", "yx'", "yy'", "cup"]


def test_cup_is_a_sum_when_circle_is_one():
    s = space(1)
    assert s.vector("cup") == s.join("xy'", "yx'")
    g = extended_gram(F.pair_theory(1))
    col = lambda j: sum(1 << i for i in range(5) if g.entry(i, j))
    assert col(4) == col(1) | col(2)


def test_cup_is_new_when_circle_is_zero():
    s = space(0)
    others = [s.vector(n) for n in ("xx'", "xy'", "yx'", "yy'")]
    cup = s.vector("cup")
    below = 0
    for v in others:
        if v & ~cup == 0:
            below |= v
    assert below != cup
    assert cup in s.space.irreducibles


def test_relations_when_circle_is_zero():
    s = space(0)
    cup = s.vector("cup")
    assert cup | s.vector("yy'") == s.vector("yy'")
    assert cup | s.vector("xx'") == cup
    assert cup | s.vector("xy'") == cup | s.vector("yx'")


def test_one_by_one():
    t = PairingTheory(BoolMatrix.from_rows(["1"]), 1)
    assert extended_gram(t).to_strings() == ["11", "11"]


def test_identity_pairing():
    t = PairingTheory(BoolMatrix.from_rows(["10", "01"]), 1)
    s = pairing_state_space(t)
    names = t.names()
    diag = [n for n in names[:-1] if n[1] == n[3]]
    assert s.vector("cup") == s.join(*diag)
    assert s.space.is_free() and s.space.rank == 4


def test_pairing_json_round_trip():
    t = F.pair_theory(1)
    back = PairingTheory.from_json(t.to_json())
    assert extended_gram(back).to_strings() == extended_gram(t).to_strings()


@pytest.mark.parametrize("bad", [{"matrix": {"rows": 3, "cols": 2, "data": ["01", "11"]}, "lambda": 1},
                                 {"matrix": {"rows": 2, "cols": 2, "data": ["01", "11"]}, "lambda": 2}])
def test_pairing_json_rejects_bad_input(bad):
    with pytest.raises(ValueError):
        PairingTheory.from_json(bad)


# -- label-free theories -----------------------------------------------------------

def parse_diagram(name: str) -> frozenset:
    return frozenset(tuple(sorted(map(int, m))) for m in re.findall(r"arc(\d+)-(\d+)", name))


def oracle_rows(case: int, eps: str, diagrams) -> tuple[list[int], int]:
    interval, circle = DOTLESS[case]
    tests = oracles.dotless_diagrams(eps)
    rows = [sum(1 << k for k, y in enumerate(tests) if oracles.dotless_value(x, y, len(eps), interval, circle))
            for x in diagrams]
    return rows, len(tests)


@pytest.mark.parametrize("case", [1, 2, 3, 4])
@pytest.mark.parametrize("eps", SEQS)
def test_dotless_spaces_match_gluing(case, eps):
    s = general_state_space(dotless_theory(case), eps, reduce=False)
    diagrams = [parse_diagram(n) for n in s.names()] if eps else [frozenset()]
    assert sorted(diagrams, key=sorted) == sorted(oracles.dotless_diagrams(eps), key=sorted)
    rows, width = oracle_rows(case, eps, diagrams)
    assert oracles.same_relations(list(s.vectors), s.width, rows, width)
    assert s.space.cardinality == len(oracles.span(rows))


@pytest.mark.parametrize("case", [1, 2, 3])
@pytest.mark.parametrize("eps", SEQS)
def test_dotless_closed_forms(case, eps):
    assert general_state_space(dotless_theory(case), eps).space.cardinality == dotless_closed_form(case, eps)


def test_case_four_has_no_closed_form():
    with pytest.raises(ValueError):
        dotless_closed_form(4, "+-")


def test_case_four_cardinalities():
    ev = dotless_theory(4)
    cards = [general_state_space(ev, e).space.cardinality for e in ("", "+", "+-", "++-", "++--")]
    assert cards == [2, 2, 3, 4, 11]


def named(s):
    return dict(zip(s.names(), s.vectors))


def test_case_four_pair_absorbs_cup():
    v = named(general_state_space(dotless_theory(4), "+-", reduce=False))
    pair, cup = v["+0(∅) -1(∅)"], v["arc0-1(∅)"]
    assert pair | cup == pair and pair != cup


def test_case_four_three_point_relations():
    ev = dotless_theory(4)
    v = named(general_state_space(ev, "++-", reduce=False))
    assert v["+0(∅) +1(∅) -2(∅)"] == v["+0(∅) arc1-2(∅)"] | v["arc0-2(∅) +1(∅)"]
    w = named(general_state_space(ev, "+--", reduce=False))
    assert w["+0(∅) -1(∅) -2(∅)"] == w["arc0-1(∅) -2(∅)"] | w["arc0-2(∅) -1(∅)"]


def test_case_four_four_point_space():
    s = general_state_space(dotless_theory(4), "++--", reduce=False)
    rows, width = oracle_rows(4, "++--", [parse_diagram(n) for n in s.names()])
    assert oracles.same_relations(list(s.vectors), s.width, rows, width)
    v = named(s)
    assert v["arc0-2(∅) arc1-3(∅)"] != v["arc0-3(∅) arc1-2(∅)"]
    free = v["+0(∅) +1(∅) -2(∅) -3(∅)"]
    assert all(x & ~free == 0 for x in s.vectors)


def test_case_three_single_element():
    s = general_state_space(dotless_theory(3), "+-")
    assert s.space.cardinality == 2
    assert len(set(s.vectors)) == 1


def test_case_two_cup_generates():
    v = named(general_state_space(dotless_theory(2), "+-", reduce=False))
    assert v["+0(∅) -1(∅)"] == 0 and v["arc0-1(∅)"] != 0


def test_bad_case():
    with pytest.raises(ValueError):
        dotless_theory(5)
