"""The fixed automata used as counterexamples, parameterised by a, b, c."""

from __future__ import annotations

from ..automata import EPS, LAutomaton
from ..lattice import OrthoLattice

SIGMA = ("s",)


def fig3(L: OrthoLattice, a, b, c) -> LAutomaton:
    """Two initial states u, v feeding u, which reaches the terminal w."""
    return LAutomaton(
        L, SIGMA, ["u", "v", "w"], {"u": L.one, "v": L.one}, {"w": L.one},
        [("u", "s", "u", a), ("u", "s", "w", c), ("v", "s", "u", b)],
    )


def fig4(L: OrthoLattice, a, b, c) -> LAutomaton:
    """σ-move valued a, an ε-diamond through b and c, then a crisp σ-move."""
    one = L.one
    return LAutomaton(
        L, SIGMA, [f"q{i}" for i in range(6)], {"q0": one}, {"q5": one},
        [
            ("q0", "s", "q1", a),
            ("q1", EPS, "q2", one),
            ("q1", EPS, "q3", one),
            ("q2", EPS, "q4", b),
            ("q3", EPS, "q4", c),
            ("q4", "s", "q5", one),
        ],
    )


def fig6(L: OrthoLattice, a, b, c) -> tuple[LAutomaton, LAutomaton]:
    one = L.one
    M1 = LAutomaton(L, SIGMA, ["p"], {"p": one}, {"p": one}, [("p", "s", "p", a)])
    M2 = LAutomaton(
        L, SIGMA, ["q", "r", "t"], {"q": one}, {"r": one, "t": one},
        [("q", "s", "r", b), ("q", "s", "t", c)],
    )
    return M1, M2


def fig7(L: OrthoLattice, a, b, c) -> tuple[LAutomaton, LAutomaton]:
    one = L.one
    M1 = LAutomaton(L, SIGMA, ["p0", "p1"], {"p0": one}, {"p1": one}, [("p0", "s", "p1", a)])
    M2 = LAutomaton(
        L, SIGMA, ["q0", "q1", "q2"], {"q0": one}, {"q1": one, "q2": one},
        [("q0", "s", "q1", b), ("q0", "s", "q2", c)],
    )
    return M1, M2


def fig8(L: OrthoLattice, a, b, c) -> LAutomaton:
    """Six states; the fold of this automaton is the star instance."""
    one = L.one
    return LAutomaton(
        L, SIGMA, [f"q{i}" for i in range(1, 7)],
        {"q1": one, "q2": one, "q3": one}, {"q6": one},
        [
            ("q1", "s", "q4", one),
            ("q3", "s", "q5", one),
            ("q2", "s", "q6", a),
            ("q4", "s", "q6", b),
            ("q5", "s", "q6", c),
        ],
    )


def fig9(L: OrthoLattice, a, b, c) -> LAutomaton:
    one = L.one
    return LAutomaton(
        L, SIGMA, ["u", "v"], {"u": a}, {"u": one, "v": one},
        [("u", "s", "u", b), ("u", "s", "v", c)],
    )


def diamond(L: OrthoLattice, a, b, c) -> LAutomaton:
    """Two σσ-paths from u to w through v and t, valued b and c, under I(u) = a.

    The Kleene representation factors I(u) ∧ T(w) out of the union of both
    paths, so at σσ it evaluates to a ∧ (b ∨ c)."""
    one = L.one
    return LAutomaton(
        L, SIGMA, ["u", "v", "t", "w"], {"u": a}, {"w": one},
        [("u", "s", "v", one), ("u", "s", "t", one), ("v", "s", "w", b), ("t", "s", "w", c)],
    )


def fig8_variant(L: OrthoLattice, a, b, c) -> LAutomaton:
    """fig8 with the a-move on a second symbol t, so that t·s·s has a
    single factorisation t | ss and no a-only path competes."""
    one = L.one
    return LAutomaton(
        L, ("s", "t"), [f"q{i}" for i in range(1, 7)],
        {"q1": one, "q2": one, "q3": one}, {"q6": one},
        [
            ("q1", "s", "q4", one),
            ("q3", "s", "q5", one),
            ("q2", "t", "q6", a),
            ("q4", "s", "q6", b),
            ("q5", "s", "q6", c),
        ],
    )
