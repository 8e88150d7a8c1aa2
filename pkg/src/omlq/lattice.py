"""Finite ortholattices, orthomodular lattices and Boolean algebras.

A lattice is given by an order relation and an orthocomplement.  Meets and
joins are derived by glb/lub search and checked for uniqueness.  Elements are
small integers (``ElemId``) indexing ``elem_names``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _kernels as K
from .errors import (
    BadOrthocomplement,
    CommutatorSetTooLarge,
    CrossLattice,
    NotALattice,
    NotOrthomodular,
    UnknownElement,
)

ElemId = int

DEFAULT_COMMUTATOR_CAP = 20


def commutator_cap() -> int:
    raw = os.environ.get("OMLQ_COMMUTATOR_CAP")
    return int(raw) if raw else DEFAULT_COMMUTATOR_CAP


@dataclass(eq=False)
class OrthoLattice:
    """A validated finite ortholattice with precomputed operation tables.

    Build instances with :func:`validate_lattice`, :func:`product_lattice`
    or :func:`omlq.builtins.builtin`; the constructor does no checking.
    """

    name: str
    elem_names: tuple[str, ...]
    leq_table: np.ndarray
    meet_table: np.ndarray
    join_table: np.ndarray
    ortho_table: np.ndarray
    zero: int
    one: int
    aliases: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.elem_names)
        self.size = n
        self._index = {nm: i for i, nm in enumerate(self.elem_names)}
        # plain python copies: per-element lookups dominate the automata code
        self.m = self.meet_table.tolist()
        self.j = self.join_table.tolist()
        self.o = self.ortho_table.tolist()
        self.le = self.leq_table.tolist()
        self.om_violation = K.orthomodular_violation(
            self.leq_table, self.meet_table, self.join_table, self.ortho_table
        )
        self.is_orthomodular = self.om_violation == (-1, -1)
        self.dist_violation = K.distributive_violation(self.meet_table, self.join_table)
        self.is_boolean = self.dist_violation == (-1, -1, -1)
        # downset bitmasks: bit x of down[a] is set iff x <= a
        self.down = [sum(1 << x for x in range(n) if self.le[x][a]) for a in range(n)]
        self.full_mask = (1 << n) - 1
        self._commutes = None
        self._impl = {}
        self._mask_join = {}
        self._key = (self.elem_names, self.leq_table.tobytes(), self.ortho_table.tobytes())

    # identity ---------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, OrthoLattice) and (self is other or self._key == other._key)

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        flags = "boolean" if self.is_boolean else "orthomodular" if self.is_orthomodular else "ortho"
        return f"OrthoLattice({self.name!r}, {self.size} elements, {flags})"

    def same_as(self, other: "OrthoLattice") -> None:
        if self != other:
            raise CrossLattice(f"lattice {self.name!r} vs {other.name!r}")

    # names --------------------------------------------------------------------

    def elem(self, name: str | int) -> int:
        if isinstance(name, (int, np.integer)):
            if not 0 <= int(name) < self.size:
                raise UnknownElement(f"element index {name} out of range for {self.name}")
            return int(name)
        key = self.aliases.get(name, name)
        try:
            return self._index[key]
        except KeyError:
            raise UnknownElement(f"unknown element {name!r} in lattice {self.name!r}") from None

    def name_of(self, a: int) -> str:
        return self.elem_names[a]

    @property
    def elements(self) -> range:
        return range(self.size)

    # basic operations -----------------------------------------------------------

    def meet(self, a: int, b: int) -> int:
        return self.m[a][b]

    def join(self, a: int, b: int) -> int:
        return self.j[a][b]

    def ortho(self, a: int) -> int:
        return self.o[a]

    def leq(self, a: int, b: int) -> bool:
        return self.le[a][b]

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.le[a][b]

    def big_meet(self, items: Iterable[int]) -> int:
        acc = self.one
        m = self.m
        for x in items:
            acc = m[acc][x]
        return acc

    def big_join(self, items: Iterable[int]) -> int:
        acc = self.zero
        j = self.j
        for x in items:
            acc = j[acc][x]
        return acc

    def join_mask(self, mask: int) -> int:
        """Join of all elements whose bit is set in ``mask``."""
        r = self._mask_join.get(mask)
        if r is None:
            acc, j, x, rest = self.zero, self.j, 0, mask
            while rest:
                if rest & 1:
                    acc = j[acc][x]
                rest >>= 1
                x += 1
            self._mask_join[mask] = r = acc
        return r

    def maximal(self, items: Iterable[int]) -> frozenset[int]:
        """Maximal elements of a finite set (its antichain of generators)."""
        s = set(items)
        le = self.le
        return frozenset(a for a in s if not any(b != a and le[a][b] for b in s))

    # commutation --------------------------------------------------------------

    @property
    def commutes_table(self) -> np.ndarray:
        if self._commutes is None:
            self._commutes = K.commutes_table(self.meet_table, self.join_table, self.ortho_table)
        return self._commutes

    def commutes(self, a: int, b: int) -> bool:
        """aCb: a = (a ∧ b) ∨ (a ∧ b⊥)."""
        return self.j[self.m[a][b]][self.m[a][self.o[b]]] == a

    def commutator(self, items: Iterable[int], cap: int | None = None) -> int:
        """Join over all sign patterns of the meet of a or a⊥ for a in items."""
        elems = sorted({int(a) for a in items} - {self.zero, self.one})
        cap = commutator_cap() if cap is None else cap
        if len(elems) > cap:
            raise CommutatorSetTooLarge(
                f"commutator over {len(elems)} elements exceeds cap {cap} in {self.name}"
            )
        if not elems:
            return self.one
        return K.commutator(
            self.meet_table, self.join_table, self.ortho_table, elems, self.zero, self.one
        )

    def strong_commutator(self, items: Iterable[int]) -> int:
        """Join of every b with bCa for all a in items and (a1∧b)C(a2∧b) for all pairs."""
        s = sorted({int(a) for a in items})
        acc = self.zero
        for b in self.elements:
            if not all(self.commutes(b, a) for a in s):
                continue
            mb = [self.m[a][b] for a in s]
            if all(self.commutes(x, y) for x in mb for y in mb):
                acc = self.j[acc][b]
        return acc

    def subalgebra(self, items: Iterable[int]) -> list[int]:
        """Least subset containing items, 0, 1 and closed under ∧, ∨, ⊥ (sorted)."""
        s = {int(a) for a in items} | {self.zero, self.one}
        s |= {self.o[a] for a in s}
        while True:
            new = set()
            for a in s:
                for b in s:
                    for c in (self.m[a][b], self.j[a][b]):
                        if c not in s:
                            new.add(c)
            if not new:
                return sorted(s)
            s |= new
            s |= {self.o[a] for a in s}

    # implications ---------------------------------------------------------------

    def impl_table(self, kind: int) -> list[list[int]]:
        """Cached table of the implication of the given kind (0..5)."""
        t = self._impl.get(kind)
        if t is None:
            from .logic import implication_polynomial

            f = implication_polynomial(kind)
            t = [[f(self, a, b) for b in self.elements] for a in self.elements]
            self._impl[kind] = t
        return t

    def require_orthomodular(self) -> None:
        if not self.is_orthomodular:
            a, b = self.om_violation
            raise NotOrthomodular(
                f"orthomodular law violated at (a,b)=({self.name_of(a)},{self.name_of(b)})"
                f" in {self.name}"
            )

    # serialisation ------------------------------------------------------------

    def to_json(self) -> dict:
        covers = []
        for a in self.elements:
            for b in self.elements:
                if self.lt(a, b) and not any(
                    self.lt(a, c) and self.lt(c, b) for c in self.elements
                ):
                    covers.append([self.name_of(a), self.name_of(b)])
        return {
            "name": self.name,
            "elements": list(self.elem_names),
            "leq": covers,
            "ortho": {self.name_of(a): self.name_of(self.o[a]) for a in self.elements},
        }


def validate_lattice(
    name: str,
    elements: Sequence[str],
    leq_pairs: Iterable[Sequence[str]],
    ortho: Mapping[str, str],
    aliases: Mapping[str, str] | None = None,
) -> OrthoLattice:
    """Build and check an ortholattice from an order relation and a complement map."""
    names = tuple(str(e) for e in elements)
    if not names:
        raise NotALattice("element list is empty")
    if len(set(names)) != len(names):
        dup = next(n for n in names if names.count(n) > 1)
        raise NotALattice(f"duplicate element name {dup!r}")
    idx = {nm: i for i, nm in enumerate(names)}
    n = len(names)
    rel = np.eye(n, dtype=bool)
    for pair in leq_pairs:
        if len(pair) != 2:
            raise NotALattice(f"leq entry {pair!r} is not a pair")
        a, b = pair
        if a not in idx or b not in idx:
            raise NotALattice(f"leq pair ({a!r},{b!r}) references an undeclared element")
        rel[idx[a], idx[b]] = True
    leq = K.transitive_closure(rel)
    both = leq & leq.T & ~np.eye(n, dtype=bool)
    if both.any():
        a, b = (int(x) for x in np.argwhere(both)[0])
        raise NotALattice(f"order has a cycle between {names[a]!r} and {names[b]!r}")

    meet = K.bound_table(leq, True)
    join = K.bound_table(leq, False)
    for table, what in ((meet, "greatest lower bound"), (join, "least upper bound")):
        bad = np.argwhere(table < 0)
        if bad.size:
            a, b = (int(x) for x in bad[0])
            raise NotALattice(f"pair ({names[a]},{names[b]}) has no unique {what}")
    bottoms = [i for i in range(n) if leq[i].all()]
    tops = [i for i in range(n) if leq[:, i].all()]
    zero, one = bottoms[0], tops[0]

    missing = [nm for nm in names if nm not in ortho]
    if missing:
        raise BadOrthocomplement(f"no orthocomplement given for {missing[0]!r}")
    oc = np.empty(n, dtype=np.int64)
    for nm, comp in ortho.items():
        if nm not in idx or comp not in idx:
            raise BadOrthocomplement(f"ortho entry {nm!r}: {comp!r} references an undeclared element")
        oc[idx[nm]] = idx[comp]
    for a in range(n):
        if oc[oc[a]] != a:
            raise BadOrthocomplement(f"not an involution at {names[a]}")
        if meet[a, oc[a]] != zero or join[a, oc[a]] != one:
            raise BadOrthocomplement(f"{names[a]} and its orthocomplement are not complements")
    for a, b in itertools.product(range(n), repeat=2):
        if leq[a, b] and not leq[oc[b], oc[a]]:
            raise BadOrthocomplement(f"not antitone at ({names[a]},{names[b]})")
    return OrthoLattice(
        name, names, leq, meet, join, oc, int(zero), int(one), dict(aliases or {})
    )


def lattice_from_json(doc: Mapping) -> OrthoLattice:
    try:
        return validate_lattice(
            doc.get("name", "lattice"), doc["elements"], doc.get("leq", []), doc["ortho"]
        )
    except KeyError as e:
        raise NotALattice(f"lattice document lacks field {e.args[0]!r}") from None


def product_lattice(l1: OrthoLattice, l2: OrthoLattice, name: str | None = None) -> OrthoLattice:
    """Componentwise product; element (a, b) is named ``"a|b"``."""
    n1, n2 = l1.size, l2.size
    pairs = [(a, b) for a in range(n1) for b in range(n2)]
    names = tuple(f"{l1.name_of(a)}|{l2.name_of(b)}" for a, b in pairs)
    A = np.array([p[0] for p in pairs])
    B = np.array([p[1] for p in pairs])
    leq = l1.leq_table[A[:, None], A[None, :]] & l2.leq_table[B[:, None], B[None, :]]
    meet = l1.meet_table[A[:, None], A[None, :]] * n2 + l2.meet_table[B[:, None], B[None, :]]
    join = l1.join_table[A[:, None], A[None, :]] * n2 + l2.join_table[B[:, None], B[None, :]]
    oc = l1.ortho_table[A] * n2 + l2.ortho_table[B]
    return OrthoLattice(
        name or f"{l1.name}x{l2.name}",
        names,
        leq,
        meet.astype(np.int64),
        join.astype(np.int64),
        oc.astype(np.int64),
        l1.zero * n2 + l2.zero,
        l1.one * n2 + l2.one,
    )
