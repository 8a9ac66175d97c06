import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from generators import random_circle, random_dfa
from booltop import fixtures as F
from booltop.errors import NotCircular, RegexSyntaxError
from booltop.lang import (Concat, Dfa, Empty, Eps, Letter, Star, Union, ast_matches, compile,
                          complement, cyclic_derivative_lang, cyclic_derivative_word, determinize, equivalent,
                          intersect, is_empty, is_rotation_closed, minimize, opposite, parse_regex, regex_dfa,
                          rotation_closure, subset, syntactic_monoid, universal_dfa, words_up_to)

regexes = st.recursive(
    st.sampled_from(["a", "b", "1", "0"]),
    lambda inner: st.one_of(
        st.tuples(inner, inner).map(lambda t: f"({t[0]}+{t[1]})"),
        st.tuples(inner, inner).map(lambda t: f"{t[0]}{t[1]}"),
        inner.map(lambda r: f"({r})*"),
    ),
    max_leaves=8,
)


def test_parse_penult():
    ast = parse_regex("(a+b)*b(a+b)", "ab")
    ab = Union(Letter("a"), Letter("b"))
    assert ast == Concat(Concat(Star(ab), Letter("b")), ab)


def test_parse_constants():
    assert parse_regex("1", "ab") == Eps()
    assert parse_regex("0", "ab") == Empty()


def test_parse_golden():
    assert parse_regex("a(1+b)*", "ab") == Concat(Letter("a"), Star(Union(Eps(), Letter("b"))))


@pytest.mark.parametrize("text", ["(a", "a)", "+a", "a**(", "c"])
def test_bad_regex(text):
    with pytest.raises(RegexSyntaxError):
        parse_regex(text, "ab")


def test_penult_minimal_sizes():
    assert F.penult().n_states == 4
    assert opposite(F.penult()).n_states == 4


def test_intersection_with_complement_is_empty():
    d = F.penult()
    assert is_empty(intersect(d, complement(d)))


@given(regexes)
@settings(max_examples=150, deadline=None)
def test_regex_pipeline_matches_stdlib(text):
    accepts = oracles.matcher(text)
    ast = parse_regex(text, "ab")
    nfa = compile(ast, "ab")
    dfa = determinize(nfa)
    m = minimize(dfa)
    for w in words_up_to("ab", 6):
        want = accepts(w)
        assert ast_matches(ast, w) == want
        assert nfa.accepts(w) == want
        assert m.accepts(w) == want


@given(regexes)
@settings(max_examples=100, deadline=None)
def test_minimal_size_is_myhill_nerode_count(text):
    m = regex_dfa(text, "ab")
    assert m.n_states == oracles.myhill_nerode_count(m.accepts, "ab", 8)
    assert minimize(m) == m


@given(regexes)
@settings(max_examples=60, deadline=None)
def test_opposite_reverses(text):
    d = regex_dfa(text, "ab")
    op = opposite(d)
    for w in words_up_to("ab", 6):
        assert op.accepts(w) == d.accepts(w[::-1])
    assert len(syntactic_monoid(d)) == len(syntactic_monoid(op))


def test_penult_monoid():
    m = syntactic_monoid(F.penult())
    assert sorted(m.reps, key=lambda w: (len(w), w)) == ["", "a", "b", "aa", "ab", "ba", "bb"]


def test_monoid_small_cases():
    assert len(syntactic_monoid(universal_dfa("ab"))) == 1
    assert len(syntactic_monoid(F.even())) == 2


@given(regexes)
@settings(max_examples=40, deadline=None)
def test_monoid_size_matches_context_classes(text):
    d = regex_dfa(text, "ab")
    m = syntactic_monoid(d)
    # every word of length <= 3 sits in a class; contexts up to 3 separate at most |M| classes
    assert oracles.syntactic_classes(d.accepts, "ab") <= len(m)
    assert len(m) == len(set(m.transforms))


def test_rotation_closed_examples():
    assert is_rotation_closed(F.circ_aa())
    assert not is_rotation_closed(F.penult())
    assert is_rotation_closed(universal_dfa("ab"))


@pytest.mark.parametrize("seed", range(40))
def test_rotation_closed_routes_agree(seed):
    d = minimize(random_dfa(random.Random(seed), "ab", 3))
    assert is_rotation_closed(d) == equivalent(rotation_closure(d), d)


@pytest.mark.parametrize("seed", range(20))
def test_rotation_closure_laws(seed):
    d = minimize(random_dfa(random.Random(seed), "ab", 3))
    r = rotation_closure(d)
    assert subset(d, r)
    assert equivalent(rotation_closure(r), r)
    for w in words_up_to("ab", 6):
        assert r.accepts(w) == any(d.accepts(x) for x in oracles.rotations(w))


def test_word_derivatives():
    assert cyclic_derivative_word("babbcaa", "a") == {"bbcaab", "ababbc", "babbca"}
    assert cyclic_derivative_word("baba", "a") == {"bab"}
    assert cyclic_derivative_word("bb", "a") == set()


def test_derivative_of_universal_unary():
    nfa = cyclic_derivative_lang(universal_dfa("a"), "a")
    assert all(nfa.accepts(w) for w in words_up_to("a", 8))


def test_derivative_with_missing_letter_is_empty():
    d = regex_dfa("(a+b)*aa(a+b)*+a(a+b)*a+a", "ab")
    only_a = minimize(intersect(d, regex_dfa("a*", "ab")))
    nfa = cyclic_derivative_lang(only_a, "b")
    assert not any(nfa.accepts(w) for w in words_up_to("ab", 8))


def test_derivative_needs_circular_language():
    with pytest.raises(NotCircular):
        cyclic_derivative_lang(F.penult(), "a")


def derivative_oracle(d: Dfa, a: str, n: int) -> set[str]:
    out = set()
    for w in oracles.words("".join(d.alphabet), n):
        if d.accepts(w):
            out |= oracles.word_cyclic_derivative(w, a)
    return out


@pytest.mark.parametrize("seed", range(20))
def test_language_derivative_matches_words(seed):
    d = random_circle(random.Random(1000 + seed))
    for a in d.alphabet:
        nfa = cyclic_derivative_lang(d, a)
        want = derivative_oracle(d, a, 8)
        got = {w for w in words_up_to(d.alphabet, 7) if nfa.accepts(w)}
        assert got == {w for w in want if len(w) <= 7}


def test_dfa_json_round_trip():
    d = F.penult()
    assert Dfa.from_json(d.to_json()) == d
