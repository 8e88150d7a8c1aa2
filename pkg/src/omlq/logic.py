"""Implication connectives of quantum logic and derived checks.

Kind 0 is the material conditional a⊥ ∨ b.  Kinds 1 to 5 are the five
Kalmbach polynomials; kind 3 is the Sasaki hook a⊥ ∨ (a ∧ b) and is the
default everywhere.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Callable

from .lattice import OrthoLattice


class ImplKind(IntEnum):
    MATERIAL0 = 0
    IMPL1 = 1
    IMPL2 = 2
    SASAKI3 = 3
    IMPL4 = 4
    IMPL5 = 5


DEFAULT_IMPL = ImplKind.SASAKI3


def _i0(L, a, b):
    return L.join(L.ortho(a), b)


def _i1(L, a, b):
    na, nb = L.ortho(a), L.ortho(b)
    return L.join(L.join(L.meet(na, b), L.meet(na, nb)), L.meet(a, L.join(na, b)))


def _i2(L, a, b):
    na, nb = L.ortho(a), L.ortho(b)
    return L.join(L.join(L.meet(na, b), L.meet(a, b)), L.meet(L.join(na, b), nb))


def _i3(L, a, b):
    return L.join(L.ortho(a), L.meet(a, b))


def _i4(L, a, b):
    return L.join(b, L.meet(L.ortho(a), L.ortho(b)))


def _i5(L, a, b):
    na, nb = L.ortho(a), L.ortho(b)
    return L.join(L.join(L.meet(na, b), L.meet(a, b)), L.meet(na, nb))


_POLYS: dict[int, Callable[[OrthoLattice, int, int], int]] = {
    0: _i0, 1: _i1, 2: _i2, 3: _i3, 4: _i4, 5: _i5,
}


def implication_polynomial(kind: int) -> Callable[[OrthoLattice, int, int], int]:
    return _POLYS[int(ImplKind(kind))]


def implies(L: OrthoLattice, kind: int, a: int, b: int) -> int:
    return L.impl_table(int(kind))[a][b]


def biimplies(L: OrthoLattice, kind: int, a: int, b: int) -> int:
    t = L.impl_table(int(kind))
    return L.meet(t[a][b], t[b][a])


def check_bvn(L: OrthoLattice, kind: int) -> bool:
    """a → b = 1 exactly when a ≤ b, for every pair."""
    t = L.impl_table(int(kind))
    return all((t[a][b] == L.one) == L.leq(a, b) for a in L.elements for b in L.elements)


def sasaki_residual(L: OrthoLattice, a: int, b: int) -> int:
    """Join of every x that commutes with a and has x ∧ a ≤ b."""
    return L.big_join(
        x for x in L.elements if L.commutes(x, a) and L.leq(L.meet(x, a), b)
    )


def point_membership(L: OrthoLattice, kind: int, height: int, value: int) -> int:
    """Truth degree that the point with the given height lies in a set whose
    membership value at the support is ``value``."""
    return implies(L, kind, height, value)


def import_export_violation(L: OrthoLattice, kind: int, compatible_only: bool = False):
    """First (a, b, c) where a ∧ b ≤ c and a ≤ (b → c) disagree, or None.

    With ``compatible_only`` only commuting pairs a, b are considered.
    """
    t = L.impl_table(int(kind))
    for a in L.elements:
        for b in L.elements:
            if compatible_only and not L.commutes(a, b):
                continue
            for c in L.elements:
                if L.leq(L.meet(a, b), c) != L.leq(a, t[b][c]):
                    return a, b, c
    return None
