import itertools
import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from omlq import builtin, product_lattice, validate_lattice
from omlq.builtins import BUILTIN_NAMES, resolve_lattice
from omlq.errors import (
    BadOrthocomplement,
    CommutatorSetTooLarge,
    NotALattice,
    NotOrthomodular,
    UnknownBuiltin,
    UnknownElement,
)
from omlq.lattice import lattice_from_json

from .oracles import naive_mo2

LATTICES = ["bool2", "boolN:3", "mo2", "chinese_lantern", "free2"]


def test_mo2_tables_match_naive_order_scan(mo2):
    N = naive_mo2()
    for a, b in itertools.product(N.names, repeat=2):
        ia, ib = mo2.elem(a), mo2.elem(b)
        assert mo2.name_of(mo2.meet(ia, ib)) == N.names[N.meet(N.idx[a], N.idx[b])]
        assert mo2.name_of(mo2.join(ia, ib)) == N.names[N.join(N.idx[a], N.idx[b])]


def test_builtin_sizes_and_flags():
    sizes = {"bool2": 2, "boolN:3": 8, "mo2": 6, "chinese_lantern": 6, "o6": 6, "free2": 96}
    for name, n in sizes.items():
        assert builtin(name).size == n
    assert builtin("boolN:3").is_boolean
    assert not builtin("mo2").is_boolean and builtin("mo2").is_orthomodular
    assert not builtin("o6").is_orthomodular
    assert builtin("free2").is_orthomodular and not builtin("free2").is_boolean


def test_o6_violation_location():
    L = builtin("o6")
    with pytest.raises(NotOrthomodular, match=r"orthomodular law violated at \(a,b\)=\(a,b\)"):
        L.require_orthomodular()


def test_unicode_aliases(lantern, mo2):
    assert lantern.elem("p−") == lantern.elem("p-")
    assert lantern.elem("p̄+") == lantern.elem("pbar+")
    assert mo2.elem("x′") == mo2.elem("x'")


def test_unknown_names():
    with pytest.raises(UnknownBuiltin):
        builtin("mo3")
    with pytest.raises(UnknownBuiltin):
        builtin("boolN:99")
    with pytest.raises(UnknownElement):
        builtin("mo2").elem("z")
    assert "mo2" in BUILTIN_NAMES


def test_validation_errors():
    with pytest.raises(NotALattice, match="cycle"):
        validate_lattice("c", ["0", "a", "1"], [["0", "a"], ["a", "0"], ["a", "1"]],
                         {"0": "1", "1": "0", "a": "a"})
    # two incomparable tops
    with pytest.raises(NotALattice):
        validate_lattice("t", ["0", "a", "b"], [["0", "a"], ["0", "b"]], {"0": "a", "a": "0", "b": "b"})
    with pytest.raises(BadOrthocomplement, match="involution"):
        validate_lattice("i", ["0", "a", "b", "1"], [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]],
                         {"0": "1", "1": "0", "a": "b", "b": "b"})
    with pytest.raises(BadOrthocomplement, match="no orthocomplement"):
        validate_lattice("m", ["0", "1"], [["0", "1"]], {"0": "1"})


def test_json_round_trip():
    for name in LATTICES + ["o6"]:
        L = builtin(name)
        doc = json.loads(json.dumps(L.to_json()))
        L2 = lattice_from_json(doc)
        assert L2.elem_names == L.elem_names
        assert np.array_equal(L2.meet_table, L.meet_table)
        assert np.array_equal(L2.ortho_table, L.ortho_table)
    assert resolve_lattice("builtin:mo2") is builtin("mo2")


def test_product_componentwise():
    P = product_lattice(builtin("bool2"), builtin("mo2"))
    a, b = P.elem("1|x"), P.elem("0|y")
    assert P.name_of(P.join(a, b)) == "1|1"
    assert P.name_of(P.meet(a, b)) == "0|0"
    assert P.name_of(P.ortho(a)) == "0|x'"


# [DERIVED] values from the naive scan, frozen
def test_commutator_values(mo2):
    e = mo2.elem
    assert mo2.commutator([e("x"), e("y")]) == mo2.zero
    assert mo2.commutator([e("x"), e("x'")]) == mo2.one
    assert mo2.commutator([]) == mo2.one
    assert mo2.commutator([mo2.zero, mo2.one, e("x")]) == mo2.one
    assert mo2.strong_commutator([e("x"), e("y")]) == mo2.zero
    assert mo2.strong_commutator([e("x")]) == mo2.one


def test_commutator_cap(monkeypatch):
    L = builtin("free2")
    items = list(range(2, 30))
    with pytest.raises(CommutatorSetTooLarge):
        L.commutator(items, cap=5)
    monkeypatch.setenv("OMLQ_COMMUTATOR_CAP", "3")
    with pytest.raises(CommutatorSetTooLarge):
        L.commutator(items[:4])


def test_commutator_one_iff_pairwise_commuting_on_mo2(mo2):
    for r in range(1, 4):
        for s in itertools.combinations(mo2.elements, r):
            pairwise = all(mo2.commutes(a, b) for a in s for b in s)
            assert (mo2.commutator(s) == mo2.one) == pairwise


def test_subalgebra(mo2):
    e = mo2.elem
    assert mo2.subalgebra([e("x")]) == sorted([mo2.zero, mo2.one, e("x"), e("x'")])
    assert len(mo2.subalgebra([e("x"), e("y")])) == 6


@pytest.mark.parametrize("name", LATTICES)
@given(data=st.data())
def test_ortholattice_laws(name, data):
    L = builtin(name)
    el = st.sampled_from(list(L.elements))
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    m, j, o = L.meet, L.join, L.ortho
    assert m(a, b) == m(b, a) and j(a, b) == j(b, a)
    assert m(a, m(b, c)) == m(m(a, b), c)
    assert m(a, j(a, b)) == a and j(a, m(a, b)) == a
    assert o(o(a)) == a
    assert o(m(a, b)) == j(o(a), o(b))
    assert m(a, o(a)) == L.zero and j(a, o(a)) == L.one
    if L.leq(a, b):
        assert j(a, m(o(a), b)) == b  # orthomodular law
    assert L.commutes(a, b) == L.commutes(b, a)


@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
def test_distributive_on_commuting_triples(a, b, c):
    L = builtin("mo2")
    if L.commutator([a, b, c]) == L.one:
        assert L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c))
