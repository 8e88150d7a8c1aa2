import json

import pytest
from hypothesis import given, strategies as st

from omlq import automata as au
from omlq import builtin
from omlq import regex as rx
from omlq.errors import HasEpsilonMoves, ParseError
from omlq.harness.generators import random_automaton, random_regex, rng_for
from omlq.language import words_upto

seeds = st.integers(0, 10_000)


def naive_eval(r, w, L):
    """Direct recursion over every split; star over non-empty factors."""
    op = r.op
    if op == "empty":
        return L.zero
    if op == "eps":
        return L.one if not w else L.zero
    if op == "sym":
        return L.one if w == (r.symbol,) else L.zero
    if op == "scalar":
        return L.meet(r.value, naive_eval(r.left, w, L))
    if op == "union":
        return L.join(naive_eval(r.left, w, L), naive_eval(r.right, w, L))
    if op == "concat":
        return L.big_join(
            L.meet(naive_eval(r.left, w[:k], L), naive_eval(r.right, w[k:], L)) for k in range(len(w) + 1)
        )
    if not w:
        return L.one
    return L.big_join(
        L.meet(naive_eval(r.left, w[:k], L), naive_eval(r, w[k:], L)) for k in range(1, len(w) + 1)
    )


def test_op_names_match_oracle():
    assert {rx.EMPTY.op, rx.EPS.op, rx.sym("a").op} == {"empty", "eps", "sym"}
    a = rx.sym("a")
    assert {rx.union(a, a).op, rx.concat(a, a).op, rx.star(a).op, rx.scalar(1, a).op} == {
        "union", "concat", "star", "scalar"
    }


def test_hash_consing():
    a, b = rx.sym("a"), rx.sym("b")
    assert rx.union(a, b) is rx.union(rx.sym("a"), rx.sym("b"))
    assert rx.concat(a, b) is not rx.concat(b, a)


def test_smart_constructors(mo2):
    a = rx.sym("a")
    assert rx.s_union(rx.EMPTY, a) is a
    assert rx.s_concat(rx.EPS, a) is a
    assert rx.s_concat(rx.EMPTY, a) is rx.EMPTY
    assert rx.s_scalar(mo2, mo2.zero, a) is rx.EMPTY
    assert rx.s_scalar(mo2, mo2.one, a) is a
    assert rx.s_star(rx.EMPTY) is rx.EPS


def test_text_syntax(mo2):
    r = rx.parse_regex("<x>a.b* + @", mo2)
    assert rx.to_text(r, mo2) == "<x>a.b* + @"
    assert rx.parse_regex("<x>a b", mo2) is rx.parse_regex("<x>a.b", mo2)
    assert rx.regex_eval(r, "a b b", mo2) == mo2.elem("x")
    assert rx.regex_eval(r, "", mo2) == mo2.one
    assert rx.regex_eval(rx.parse_regex("%0", mo2), "", mo2) == mo2.zero
    for bad in ("", "(a", "a +", "a > b", "<q>a"):
        with pytest.raises(Exception) as ei:
            rx.parse_regex(bad, mo2)
        assert "offset" in str(ei.value) or "unknown element" in str(ei.value)


@given(seeds)
def test_eval_matches_naive(seed):
    L = builtin("mo2")
    r = random_regex(L, rng_for(seed, "rx"), ("a", "b"), 3)
    for w in words_upto(("a", "b"), 3):
        assert rx.regex_eval(r, w, L) == naive_eval(r, w, L)


@given(seeds)
def test_text_and_json_round_trip(seed):
    L = builtin("mo2")
    r = random_regex(L, rng_for(seed, "rx"), ("a", "b"), 4)
    assert rx.parse_regex(rx.to_text(r, L), L) is r
    assert rx.from_json(json.loads(json.dumps(rx.to_ast(r, L))), L) is r
    assert rx.from_json(json.loads(json.dumps(rx.to_dag(r, L))), L) is r


@given(seeds)
def test_kleene_equals_rec_on_boolean(seed):
    L = builtin("boolN:3")
    M = random_automaton(L, rng_for(seed, "k"))
    k = rx.kleene_representation(M, "lex").regex
    for w in words_upto(M.alphabet, 4):
        assert rx.regex_eval(k, w, L) == M.rec(w)


@given(seeds)
def test_kleene_bounds_on_mo2(seed):
    L = builtin("mo2")
    M = random_automaton(L, rng_for(seed, "k"))
    k = rx.kleene_representation(M).regex
    g = M.gamma_atoms()
    for w in words_upto(M.alphabet, 4):
        v = rx.regex_eval(k, w, L)
        assert L.leq(M.rec(w), v)
        assert L.leq(L.meet(g, v), M.rec(w))


def test_pivot_orders(mo2):
    M = random_automaton(mo2, rng_for(0, "k"), n_states=3)
    assert rx.resolve_pivot_order(M.states, "lex") == tuple(sorted(M.states))
    assert rx.resolve_pivot_order(M.states, "q2,q0,q1") == ("q2", "q0", "q1")
    with pytest.raises(ParseError):
        rx.resolve_pivot_order(M.states, "q0,q1")
    with pytest.raises(HasEpsilonMoves):
        rx.kleene_representation(random_automaton(mo2, rng_for(0, "e"), eps=True, zero_bias=0.0))


def test_regex_hom_and_gamma(mo2):
    r = rx.parse_regex("<x>a.b* + <y>b", mo2)
    h = {"a": ("c", "c"), "b": ()}
    hr = rx.regex_hom(h, r)
    assert rx.symbols_of(hr) == {"c"}
    assert rx.regex_eval(hr, "c c", mo2) == mo2.elem("x")
    assert rx.regex_eval(hr, "", mo2) == mo2.elem("y")
    assert rx.lambda_set(r) == sorted([mo2.elem("x"), mo2.elem("y")])
    assert rx.delta_gamma(r, mo2) == mo2.zero
