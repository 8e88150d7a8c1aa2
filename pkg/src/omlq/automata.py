"""Lattice-valued finite automata, with and without ε-moves.

Recognition degrees are joins over accepting paths of I ∧ path ∧ T.  The
exact engine propagates, for every state, the *downset* of path values that
can reach it, as a bitmask over lattice elements.  Because
↓{x ∧ d : x ∈ D} = D ∩ ↓d for any downset D, one step is a bitwise AND with
the downset of the transition value followed by an OR over source states.
The join of the final downset is the join over paths, so no distributivity is
assumed anywhere.

``rec_vector`` is the join-collapsed recurrence v'(q) = ∨_p v(p) ∧ δ(p,σ,q).
It is the semantics of the power-set construction and differs from the path
semantics on non-distributive lattices.  ``rec_paths`` enumerates paths one
by one and serves as the definitional oracle.
"""

from __future__ import annotations

from collections import deque
from itertools import product as _cartesian
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _kernels as K
from .errors import (
    AlphabetMismatch,
    HasEpsilonMoves,
    MalformedPath,
    NotDeterministic,
    NotFiniteRange,
    ParseError,
    StateBlowup,
)
from .lattice import OrthoLattice
from .logic import DEFAULT_IMPL, biimplies

EPS = "@eps"
Word = tuple

DEFAULT_STATE_CAP = 100_000


def as_word(word) -> tuple:
    """Accept a tuple/list of symbols or a space separated string."""
    if isinstance(word, str):
        return tuple(word.split())
    return tuple(word)


class LAutomaton:
    """Automaton <Q, I, T, δ> valued in an ortholattice.

    ``initial`` and ``terminal`` map state names to elements (names or ids);
    ``delta`` is an iterable of ``(p, symbol, q, value)``; the symbol ``@eps``
    marks an ε-move.  Omitted entries have value 0.
    """

    def __init__(
        self,
        lattice: OrthoLattice,
        alphabet: Sequence[str],
        states: Sequence[str],
        initial: Mapping,
        terminal: Mapping,
        delta: Iterable[Sequence] = (),
    ):
        L = self.lattice = lattice
        self.alphabet = tuple(str(a) for a in alphabet)
        if not self.alphabet:
            raise AlphabetMismatch("alphabet must be non-empty")
        if EPS in self.alphabet or len(set(self.alphabet)) != len(self.alphabet):
            raise AlphabetMismatch(f"bad alphabet {self.alphabet!r}")
        self.states = tuple(str(s) for s in states)
        if len(set(self.states)) != len(self.states):
            raise ParseError("duplicate state names")
        self.sidx = {s: i for i, s in enumerate(self.states)}
        self.aidx = {a: i for i, a in enumerate(self.alphabet)}
        n, k = len(self.states), len(self.alphabet)
        self.eps_index = k
        self.I = [L.zero] * n
        self.T = [L.zero] * n
        for src, dst, what in ((initial, self.I, "initial"), (terminal, self.T, "terminal")):
            for s, v in src.items():
                dst[self._state(s, what)] = L.elem(v)
        # delta[a][p][q]; index k is the ε column
        self.delta = [[[L.zero] * n for _ in range(n)] for _ in range(k + 1)]
        for entry in delta:
            if len(entry) != 4:
                raise ParseError(f"delta entry {entry!r} must be [p, symbol, q, value]")
            p, a, q, v = entry
            ai = k if a == EPS else self.aidx.get(a)
            if ai is None:
                raise AlphabetMismatch(f"symbol {a!r} not in alphabet {self.alphabet}")
            self.delta[ai][self._state(p, "delta")][self._state(q, "delta")] = L.elem(v)
        self.has_eps = any(v != L.zero for row in self.delta[k] for v in row)
        self._downs = [
            [[L.down[v] & ~(1 << L.zero) for v in row] for row in mat] for mat in self.delta
        ]
        self._np = None

    def _state(self, s, what):
        try:
            return self.sidx[str(s)]
        except KeyError:
            raise ParseError(f"{what} references undeclared state {s!r}") from None

    # basic accessors ----------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.states)

    def value(self, p: str, symbol: str, q: str) -> int:
        ai = self.eps_index if symbol == EPS else self.aidx[symbol]
        return self.delta[ai][self.sidx[p]][self.sidx[q]]

    def entries(self):
        """Non-zero transitions as (p, symbol, q, value) with state/symbol names."""
        z = self.lattice.zero
        syms = self.alphabet + (EPS,)
        for ai, mat in enumerate(self.delta):
            for p, row in enumerate(mat):
                for q, v in enumerate(row):
                    if v != z:
                        yield self.states[p], syms[ai], self.states[q], v

    def atoms(self) -> list[int]:
        """All truth values used by I, T and δ (ε-moves included)."""
        vals = set(self.I) | set(self.T)
        for mat in self.delta:
            for row in mat:
                vals.update(row)
        return sorted(vals)

    def gamma_atoms(self, cap: int | None = None) -> int:
        return self.lattice.commutator(self.atoms(), cap)

    def word_indices(self, word) -> list[int]:
        out = []
        for a in as_word(word):
            i = self.aidx.get(a)
            if i is None:
                raise AlphabetMismatch(f"symbol {a!r} not in alphabet {self.alphabet}")
            out.append(i)
        return out

    def __repr__(self):
        eps = ", ε-moves" if self.has_eps else ""
        return f"LAutomaton({self.n} states, alphabet {self.alphabet}, {self.lattice.name}{eps})"

    # exact downset engine -------------------------------------------------------

    def start(self) -> tuple:
        L = self.lattice
        zbit = ~(1 << L.zero)
        return self.eps_close(tuple(L.down[v] & zbit for v in self.I))

    def eps_close(self, vec: tuple) -> tuple:
        if not self.has_eps:
            return vec
        d = self._downs[self.eps_index]
        v = list(vec)
        n = len(v)
        changed = True
        while changed:
            changed = False
            for p in range(n):
                if not v[p]:
                    continue
                row = d[p]
                for q in range(n):
                    add = v[p] & row[q] & ~v[q]
                    if add:
                        v[q] |= add
                        changed = True
        return tuple(v)

    def step(self, vec: tuple, ai: int) -> tuple:
        d = self._downs[ai]
        n = len(vec)
        out = [0] * n
        for p in range(n):
            x = vec[p]
            if x:
                row = d[p]
                for q in range(n):
                    out[q] |= x & row[q]
        return self.eps_close(tuple(out))

    def accept(self, vec: tuple) -> int:
        L = self.lattice
        m = 0
        for q, x in enumerate(vec):
            if x:
                m |= x & L.down[self.T[q]]
        return L.join_mask(m)

    def rec(self, word, method: str = "exact") -> int:
        """Degree to which the word is recognised.

        ``exact`` (default) is the path semantics computed with downsets and
        handles ε-moves; ``paths`` enumerates paths explicitly (ε-free only);
        ``vector`` is the join-collapsed recurrence.
        """
        if method == "paths":
            return self.rec_paths(word)
        if method == "vector":
            return self.rec_vector(word)
        vec = self.start()
        for ai in self.word_indices(word):
            vec = self.step(vec, ai)
        return self.accept(vec)

    def rec_paths(self, word) -> int:
        if self.has_eps:
            raise HasEpsilonMoves("path enumeration needs an ε-free automaton")
        L = self.lattice
        idx = self.word_indices(word)
        arr = self.as_arrays()
        wd = arr["delta"][idx] if idx else np.zeros((0, self.n, self.n), dtype=np.int64)
        return K.path_join(
            L.meet_table, L.join_table, arr["I"], arr["T"], wd, L.zero
        )

    def rec_vector(self, word) -> int:
        L = self.lattice
        arr = self.as_arrays()
        v = np.asarray(self.I, dtype=np.int64)
        v = self._vector_eps(v)
        for ai in self.word_indices(word):
            v = K.vector_step(L.meet_table, L.join_table, v, arr["delta"][ai], L.zero)
            v = self._vector_eps(v)
        return L.big_join(L.meet(int(x), t) for x, t in zip(v, self.T))

    def _vector_eps(self, v):
        if not self.has_eps:
            return v
        L = self.lattice
        d = self.as_arrays()["delta"][self.eps_index]
        while True:
            w = K.vector_step(L.meet_table, L.join_table, v, d, L.zero)
            w = L.join_table[v, w]
            if np.array_equal(w, v):
                return v
            v = w

    def as_arrays(self) -> dict:
        if self._np is None:
            self._np = {
                "I": np.asarray(self.I, dtype=np.int64),
                "T": np.asarray(self.T, dtype=np.int64),
                "delta": np.asarray(self.delta, dtype=np.int64),
            }
        return self._np

    def path_value(self, path: Sequence) -> int:
        """Meet of the transition values along q0 σ1 q1 ... σk qk."""
        if len(path) % 2 != 1:
            raise MalformedPath("a path alternates states and symbols and ends in a state")
        L = self.lattice
        acc = L.one
        for i in range(0, len(path) - 1, 2):
            p, a, q = path[i], path[i + 1], path[i + 2]
            if p not in self.sidx or q not in self.sidx:
                raise MalformedPath(f"unknown state in path segment {p!r} {a!r} {q!r}")
            if a != EPS and a not in self.aidx:
                raise MalformedPath(f"unknown symbol {a!r} in path")
            acc = L.meet(acc, self.value(p, a, q))
        if len(path) == 1 and path[0] not in self.sidx:
            raise MalformedPath(f"unknown state {path[0]!r}")
        return acc

    def reachable_vectors(self, cap: int = DEFAULT_STATE_CAP) -> set:
        seen = {self.start()}
        todo = deque(seen)
        while todo:
            v = todo.popleft()
            for ai in range(len(self.alphabet)):
                w = self.step(v, ai)
                if w not in seen:
                    seen.add(w)
                    if len(seen) > cap:
                        raise StateBlowup(f"more than {cap} reachable downset vectors")
                    todo.append(w)
        return seen

    def range_values(self) -> set[int]:
        """Exact set of values rec takes over all words."""
        return {self.accept(v) for v in self.reachable_vectors()}

    # serialisation ------------------------------------------------------------

    def to_json(self, lattice_ref=None) -> dict:
        from .io import lattice_ref_for

        L = self.lattice
        nm = L.name_of
        return {
            "lattice": lattice_ref if lattice_ref is not None else lattice_ref_for(L),
            "alphabet": list(self.alphabet),
            "states": list(self.states),
            "initial": {s: nm(v) for s, v in zip(self.states, self.I) if v != L.zero},
            "terminal": {s: nm(v) for s, v in zip(self.states, self.T) if v != L.zero},
            "delta": [[p, a, q, nm(v)] for p, a, q, v in self.entries()],
        }

    def to_dot(self) -> str:
        L = self.lattice
        lines = ["digraph automaton {", "  rankdir=LR;"]
        for s, i, t in zip(self.states, self.I, self.T):
            label = s
            if i != L.zero:
                label += f"\\nI={L.name_of(i)}"
            if t != L.zero:
                label += f"\\nT={L.name_of(t)}"
            shape = "doublecircle" if t != L.zero else "circle"
            lines.append(f'  "{s}" [label="{label}", shape={shape}];')
        for p, a, q, v in self.entries():
            sym = "ε" if a == EPS else a
            lines.append(f'  "{p}" -> "{q}" [label="{sym}/{L.name_of(v)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ predicates


def is_deterministic(M: LAutomaton) -> bool:
    z = M.lattice.zero
    if M.has_eps or sum(1 for v in M.I if v != z) != 1:
        return False
    for ai in range(len(M.alphabet)):
        for row in M.delta[ai]:
            if sum(1 for v in row if v != z) != 1:
                return False
    return True


# ------------------------------------------------------------------ constructions


def _require_same(M1: LAutomaton, M2: LAutomaton):
    M1.lattice.same_as(M2.lattice)
    if M1.alphabet != M2.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {M1.alphabet} vs {M2.alphabet}")


def _require_eps_free(M: LAutomaton, what: str):
    if M.has_eps:
        raise HasEpsilonMoves(f"{what} is defined for automata without ε-moves")


def _vector_name(M: LAutomaton, vec) -> str:
    L = M.lattice
    parts = [f"{s}:{L.name_of(v)}" for s, v in zip(M.states, vec) if v != L.zero]
    return "{" + ",".join(parts) + "}"


def determinize(M: LAutomaton, cap: int = DEFAULT_STATE_CAP) -> LAutomaton:
    """Power-set construction over lattice-valued subsets of Q.

    States are the subsets reachable from I under
    X ↦ (q ↦ ∨_p X(p) ∧ δ(p,σ,q)); transitions are crisp and the terminal
    value of X is ∨_q X(q) ∧ T(q).
    """
    _require_eps_free(M, "the power-set construction")
    L = M.lattice
    arr = M.as_arrays()
    start = tuple(M.I)
    index = {start: 0}
    order = [start]
    edges = []
    todo = deque([start])
    while todo:
        X = todo.popleft()
        for ai, a in enumerate(M.alphabet):
            Y = tuple(
                int(x)
                for x in K.vector_step(L.meet_table, L.join_table, np.asarray(X), arr["delta"][ai], L.zero)
            )
            if Y not in index:
                if len(index) >= cap:
                    raise StateBlowup(f"power-set construction exceeds {cap} states")
                index[Y] = len(order)
                order.append(Y)
                todo.append(Y)
            edges.append((index[X], a, index[Y]))
    names = [_vector_name(M, X) for X in order]
    terminal = {
        names[i]: L.big_join(L.meet(x, t) for x, t in zip(X, M.T)) for i, X in enumerate(order)
    }
    delta = [(names[i], a, names[j], L.one) for i, a, j in edges]
    return LAutomaton(L, M.alphabet, names, {names[0]: L.one}, terminal, delta)


def eps_reduce(M: LAutomaton) -> LAutomaton:
    """Remove ε-moves.

    δ'(p,σ,q) is the join over all paths p ε* σ ε* q of their values and
    T'(p) the join over ε-paths p ε* q of path ∧ T(q); I is unchanged.
    """
    L = M.lattice
    n = M.n
    full = L.down[L.one] & ~(1 << L.zero)
    closures = []
    for p in range(n):
        unit = tuple(full if q == p else 0 for q in range(n))
        closures.append(M.eps_close(unit))
    delta = []
    for p in range(n):
        for ai, a in enumerate(M.alphabet):
            vec = M.step(closures[p], ai)
            for q in range(n):
                v = L.join_mask(vec[q])
                if v != L.zero:
                    delta.append((M.states[p], a, M.states[q], v))
    terminal = {M.states[p]: M.accept(closures[p]) for p in range(n)}
    initial = dict(zip(M.states, M.I))
    return LAutomaton(L, M.alphabet, M.states, initial, terminal, delta)


def union_aut(M1: LAutomaton, M2: LAutomaton) -> LAutomaton:
    """Disjoint union; states are renamed ``1/p`` and ``2/q``."""
    _require_same(M1, M2)
    return _blockwise(M1, M2, M1.I, M2.I, M1.T, M2.T, ())


def concat_aut(M1: LAutomaton, M2: LAutomaton) -> LAutomaton:
    """Concatenation with ε-moves valued T1(p) ∧ I2(q) from Q1 to Q2."""
    _require_same(M1, M2)
    L = M1.lattice
    z = L.zero
    links = [
        (f"1/{p}", EPS, f"2/{q}", L.meet(t, i))
        for p, t in zip(M1.states, M1.T)
        for q, i in zip(M2.states, M2.I)
        if L.meet(t, i) != z
    ]
    return _blockwise(M1, M2, M1.I, [z] * M2.n, [z] * M1.n, M2.T, links)


def _blockwise(M1, M2, I1, I2, T1, T2, extra):
    L = M1.lattice
    s1 = [f"1/{s}" for s in M1.states]
    s2 = [f"2/{s}" for s in M2.states]
    delta = [(f"1/{p}", a, f"1/{q}", v) for p, a, q, v in M1.entries()]
    delta += [(f"2/{p}", a, f"2/{q}", v) for p, a, q, v in M2.entries()]
    delta += list(extra)
    return LAutomaton(
        L,
        M1.alphabet,
        s1 + s2,
        {**dict(zip(s1, I1)), **dict(zip(s2, I2))},
        {**dict(zip(s1, T1)), **dict(zip(s2, T2))},
        delta,
    )


def product_aut(M1: LAutomaton, M2: LAutomaton) -> LAutomaton:
    """Synchronous product; I, T and δ are pointwise meets."""
    _require_same(M1, M2)
    _require_eps_free(M1, "the product")
    _require_eps_free(M2, "the product")
    L = M1.lattice
    pairs = list(_cartesian(range(M1.n), range(M2.n)))
    names = [f"({M1.states[p]},{M2.states[q]})" for p, q in pairs]
    initial = {nm: L.meet(M1.I[p], M2.I[q]) for nm, (p, q) in zip(names, pairs)}
    terminal = {nm: L.meet(M1.T[p], M2.T[q]) for nm, (p, q) in zip(names, pairs)}
    delta = []
    for ai, a in enumerate(M1.alphabet):
        d1, d2 = M1.delta[ai], M2.delta[ai]
        for i, (p1, q1) in enumerate(pairs):
            for j, (p2, q2) in enumerate(pairs):
                v = L.meet(d1[p1][p2], d2[q1][q2])
                if v != L.zero:
                    delta.append((names[i], a, names[j], v))
    return LAutomaton(L, M1.alphabet, names, initial, terminal, delta)


def fold_aut(M: LAutomaton, fresh: str = "q0") -> LAutomaton:
    """Fold (star) construction.

    A new state is initial and terminal with value 1, has ε-moves valued I(q)
    into Q, and every pair p, q of old states gets an ε-move valued T(p) ∧ I(q).
    """
    _require_eps_free(M, "the fold construction")
    L = M.lattice
    while fresh in M.sidx:
        fresh += "'"
    delta = list(M.entries())
    delta += [(fresh, EPS, q, i) for q, i in zip(M.states, M.I) if i != L.zero]
    for p, t in zip(M.states, M.T):
        for q, i in zip(M.states, M.I):
            v = L.meet(t, i)
            if v != L.zero:
                delta.append((p, EPS, q, v))
    terminal = dict(zip(M.states, M.T))
    terminal[fresh] = L.one
    return LAutomaton(L, M.alphabet, (fresh,) + M.states, {fresh: L.one}, terminal, delta)


def inverse_aut(M: LAutomaton) -> LAutomaton:
    """Reverse every transition and swap I with T."""
    delta = [(q, a, p, v) for p, a, q, v in M.entries()]
    return LAutomaton(
        M.lattice, M.alphabet, M.states, dict(zip(M.states, M.T)), dict(zip(M.states, M.I)), delta
    )


def string_delta(M: LAutomaton, p: int, word) -> tuple:
    """Per-state value of δ(p, word, q): join over the paths from p labelled word."""
    L = M.lattice
    full = L.down[L.one] & ~(1 << L.zero)
    vec = tuple(full if q == p else 0 for q in range(M.n))
    for ai in M.word_indices(word):
        vec = M.step(vec, ai)
    return tuple(L.join_mask(x) for x in vec)


def hom_preimage_aut(h: Mapping[str, Sequence[str]], M: LAutomaton) -> LAutomaton:
    """Pre-image under h: Σ → Γ*; the new δ(p,σ,q) is δ(p, h(σ), q)."""
    _require_eps_free(M, "the homomorphism pre-image")
    L = M.lattice
    sigma = tuple(h)
    for s, img in h.items():
        for a in img:
            if a not in M.aidx:
                raise AlphabetMismatch(f"h({s}) uses {a!r}, not in {M.alphabet}")
    delta = []
    for p in range(M.n):
        for s in sigma:
            row = string_delta(M, p, tuple(h[s]))
            for q, v in enumerate(row):
                if v != L.zero:
                    delta.append((M.states[p], s, M.states[q], v))
    return LAutomaton(L, sigma, M.states, dict(zip(M.states, M.I)), dict(zip(M.states, M.T)), delta)


def complement_det(M: LAutomaton) -> LAutomaton:
    """Orthocomplement the terminal values of a deterministic automaton."""
    if not is_deterministic(M):
        raise NotDeterministic("complement_det needs a deterministic automaton")
    L = M.lattice
    terminal = {s: L.ortho(t) for s, t in zip(M.states, M.T)}
    return LAutomaton(L, M.alphabet, M.states, dict(zip(M.states, M.I)), terminal, M.entries())


# ------------------------------------------------------------------ equivalence


def value_pairs(M1: LAutomaton, M2: LAutomaton, cap: int = DEFAULT_STATE_CAP) -> set[tuple[int, int]]:
    """All pairs (rec1(s), rec2(s)) over every word s, by joint BFS."""
    _require_same(M1, M2)
    start = (M1.start(), M2.start())
    seen = {start}
    todo = deque([start])
    pairs = set()
    while todo:
        v1, v2 = todo.popleft()
        pairs.add((M1.accept(v1), M2.accept(v2)))
        for ai in range(len(M1.alphabet)):
            nxt = (M1.step(v1, ai), M2.step(v2, ai))
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise StateBlowup(f"more than {cap} joint states in equivalence search")
                todo.append(nxt)
    return pairs


def equiv_degree_exact(M1: LAutomaton, M2: LAutomaton, impl: int = DEFAULT_IMPL) -> int:
    """Exact degree of rec_M1 ≡ rec_M2: meet over all words of rec1 ↔ rec2."""
    L = M1.lattice
    return L.big_meet(biimplies(L, impl, a, b) for a, b in sorted(value_pairs(M1, M2)))


# ------------------------------------------------------------------ witness builders


def table_automaton(lattice: OrthoLattice, alphabet: Sequence[str], table: Mapping) -> LAutomaton:
    """Chain automaton recognising a finite-support language exactly.

    Each supported word gets its own chain whose transitions carry the word's
    value; the empty word gets one state with I = 1 and T = its value.
    """
    L = lattice
    states, initial, terminal, delta = [], {}, {}, []
    for i, (word, val) in enumerate(sorted((as_word(w), v) for w, v in table.items())):
        v = L.elem(val)
        if v == L.zero:
            continue
        word = as_word(word)
        chain = [f"w{i}.{j}" for j in range(len(word) + 1)]
        states += chain
        initial[chain[0]] = L.one
        terminal[chain[-1]] = v if not word else L.one
        for j, a in enumerate(word):
            delta.append((chain[j], a, chain[j + 1], v))
    if not states:
        states = ["w"]
    return LAutomaton(L, alphabet, states, initial, terminal, delta)


def scaled_classical(M: LAutomaton, value) -> LAutomaton:
    """Keep I and T; every non-zero transition gets the given value."""
    L = M.lattice
    v = L.elem(value)
    delta = [(p, a, q, v) for p, a, q, _ in M.entries()]
    return LAutomaton(L, M.alphabet, M.states, dict(zip(M.states, M.I)), dict(zip(M.states, M.T)), delta)


def sigma_star(lattice: OrthoLattice, alphabet: Sequence[str], value=None) -> LAutomaton:
    """One state, initial and terminal, looping on every symbol."""
    v = lattice.one if value is None else lattice.elem(value)
    return LAutomaton(
        lattice, alphabet, ["s"], {"s": lattice.one}, {"s": lattice.one},
        [("s", a, "s", v) for a in alphabet],
    )


def decompose_by_range(lattice: OrthoLattice, alphabet: Sequence[str], table: Mapping) -> LAutomaton:
    """Union over the non-zero levels λ of λ-scaled crisp automata for {s : A(s) = λ}.

    Each level automaton is a set of chains whose transitions all carry λ.
    """
    L = lattice
    levels: dict[int, list] = {}
    for w, val in table.items():
        v = L.elem(val)
        if v != L.zero:
            levels.setdefault(v, []).append(as_word(w))
    parts = [table_automaton(L, alphabet, {w: v for w in levels[v]}) for v in sorted(levels)]
    if not parts:
        return table_automaton(L, alphabet, {})
    out = parts[0]
    for part in parts[1:]:
        out = union_aut(out, part)
    return out


def rename_states(M: LAutomaton, prefix: str) -> LAutomaton:
    f = lambda s: prefix + s  # noqa: E731
    return LAutomaton(
        M.lattice, M.alphabet, [f(s) for s in M.states],
        {f(s): v for s, v in zip(M.states, M.I)}, {f(s): v for s, v in zip(M.states, M.T)},
        [(f(p), a, f(q), v) for p, a, q, v in M.entries()],
    )


def automaton_from_json(doc: Mapping, lattice: OrthoLattice | None = None) -> LAutomaton:
    from .builtins import resolve_lattice

    try:
        L = lattice if lattice is not None else resolve_lattice(doc["lattice"])
        return LAutomaton(
            L,
            doc["alphabet"],
            doc["states"],
            doc.get("initial", {}),
            doc.get("terminal", {}),
            doc.get("delta", []),
        )
    except KeyError as e:
        raise ParseError(f"automaton document lacks field {e.args[0]!r}") from None


def reg_witness_automata(
    A: LAutomaton,
    M: LAutomaton,
    impl: int = DEFAULT_IMPL,
    commutative: bool = False,
    deterministic: bool = False,
    range_values: Iterable[int] | None = None,
    cap: int | None = None,
) -> int:
    """Clause value contributed by witness M to the regularity of rec_A."""
    L = M.lattice
    if deterministic and not is_deterministic(M):
        return L.zero
    val = equiv_degree_exact(A, M, impl)
    if commutative:
        rng = set(range_values) if range_values is not None else A.range_values()
        if rng is None:
            raise NotFiniteRange("range of the language is unknown")
        val = L.meet(val, L.commutator(set(M.atoms()) | rng, cap))
    return val
