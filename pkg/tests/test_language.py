import pytest
from hypothesis import given, strategies as st

from omlq import automata as au
from omlq import builtin
from omlq import language as lg
from omlq.errors import AlphabetMismatch, ErasingImageUnbounded, NotFiniteRange, NotFiniteSupport
from omlq.harness.generators import random_automaton, random_table, rng_for

SIG = ("a", "b")


@pytest.fixture
def A(mo2):
    return lg.FiniteTable(mo2, SIG, {"": "y", "a": "x", "a b": "x'", "b": "0"})


def test_finite_table(A, mo2):
    assert A.support() == [(), ("a",), ("a", "b")]
    assert A("b a") == mo2.zero
    assert {mo2.name_of(v) for v in A.range_values()} == {"0", "x", "x'", "y"}
    with pytest.raises(AlphabetMismatch):
        A("c")
    B = lg.language_from_json(A.to_json())
    assert B.table == A.table


def test_pointwise(A, mo2):
    B = lg.FiniteTable(mo2, SIG, {"a": "y", "a b": "1"})
    for w in lg.words_upto(SIG, 3):
        assert lg.union(A, B)(w) == mo2.join(A(w), B(w))
        assert lg.intersect(A, B)(w) == mo2.meet(A(w), B(w))
        assert lg.complement(A)(w) == mo2.ortho(A(w))
        assert lg.scalar(mo2.elem("x"), A)(w) == mo2.meet(mo2.elem("x"), A(w))
    assert lg.complement(A).range_values() == {mo2.ortho(v) for v in A.range_values()}


def test_concat_and_star_split_join(mo2):
    A = lg.FiniteTable(mo2, SIG, {"a": "x", "b": "y"})
    B = lg.FiniteTable(mo2, SIG, {"b": "x'", "": "y'"})
    C = lg.concat(A, B)
    e = mo2.elem
    assert C("a b") == mo2.meet(e("x"), e("x'"))
    assert C("a") == mo2.meet(e("x"), e("y'"))
    S = lg.kleene_star(A)
    assert S("") == mo2.one
    assert S("a b") == mo2.meet(e("x"), e("y"))
    assert S("a a a") == e("x")


def test_thresholds(A, mo2):
    lam = mo2.elem("x")
    down, up, clamp = lg.thresholds(A, lam)
    # A(s) ≰ x
    assert set(down.words) == {(), ("a", "b")}
    # A(s) ≱ x: everything except the word with value x
    assert ("a",) not in up and ("b", "b") in up and not up.is_finite()
    assert clamp("a") == mo2.zero and clamp("a b") == mo2.elem("x'")
    _, up0, _ = lg.thresholds(A, mo2.zero)
    assert up0.is_finite() and not up0.words
    with pytest.raises(NotFiniteSupport):
        lg.thresholds(lg.AutomatonLanguage(au.sigma_star(mo2, SIG)), lam)


def test_hom_image_and_preimage(mo2):
    A = lg.FiniteTable(mo2, SIG, {"a": "x", "b": "y", "a b": "x'"})
    h = {"a": ("c",), "b": ("c",)}
    img = lg.image(h, A, ("c",))
    assert img("c") == mo2.join(mo2.elem("x"), mo2.elem("y"))
    assert img("c c") == mo2.elem("x'")
    pre = lg.preimage(h, img)
    assert pre("b") == img("c")
    with pytest.raises(ErasingImageUnbounded):
        lg.image({"a": (), "b": ("c",)}, A, ("c",))
    lb = lg.image({"a": (), "b": ("c",)}, A, ("c",), max_len=3)
    assert lb("") == mo2.elem("x")
    assert lb("c") == mo2.join(mo2.elem("y"), mo2.elem("x'"))


def test_degrees(A, mo2):
    assert lg.equiv_degree_bounded(A, A, 3, 4) == mo2.one
    B = lg.FiniteTable(mo2, SIG, {"": "y", "a": "x"})
    # A and B differ only at "a b": x' ↔ 0 = x
    assert lg.equiv_degree_bounded(A, B, 3, 4) == mo2.elem("x")
    assert lg.inclusion_degree_bounded(B, A, 3, 4) == mo2.one
    assert lg.membership_degree(A, "a", mo2.one) == mo2.elem("x")


def test_reg_witness(mo2):
    A = lg.FiniteTable(mo2, SIG, {"a": "x", "b": "y"})
    M = A.to_automaton()
    assert lg.reg_witness(A, M) == mo2.one
    assert lg.reg_witness(A, M, commutative=True) == mo2.zero  # x and y do not commute
    assert lg.reg_witness(A, M, deterministic=True) == mo2.zero
    D = au.determinize(M)
    assert lg.reg_witness(A, D, deterministic=True) == mo2.one
    with pytest.raises(NotFiniteRange):
        lg.reg_witness(lg.kleene_star(A), M)


@given(st.integers(0, 10_000))
def test_automaton_language_memo_consistent(seed):
    L = builtin("mo2")
    M = random_automaton(L, rng_for(seed, "lang"))
    A = lg.AutomatonLanguage(M)
    for w in lg.words_upto(M.alphabet, 4):
        assert A(w) == M.rec(w)


@given(st.integers(0, 10_000))
def test_table_automaton_recognises_table(seed):
    L = builtin("mo2")
    table = random_table(L, rng_for(seed, "tab"), SIG)
    A = lg.FiniteTable(L, SIG, table)
    M = A.to_automaton()
    for w in lg.words_upto(SIG, 4):
        assert M.rec(w) == A(w)
