"""Seeded random automata, tables, regexes and homomorphisms."""

from __future__ import annotations

import random
from typing import Sequence

from ..automata import EPS, LAutomaton
from ..lattice import OrthoLattice
from .. import regex as rx

SIGMA = ("a", "b")
GAMMA = ("c", "d")
ZERO_BIAS = 0.5


def rng_for(seed: int, *tags) -> random.Random:
    """Independent stream per (seed, tags); string seeds hash stably."""
    return random.Random("/".join(str(t) for t in (seed,) + tags))


def random_value(L: OrthoLattice, rng: random.Random, zero_bias: float = ZERO_BIAS, crisp=False) -> int:
    if rng.random() < zero_bias:
        return L.zero
    if crisp:
        return L.one
    return rng.randrange(len(L.elem_names))


def random_automaton(
    L: OrthoLattice,
    rng: random.Random,
    n_states: int | None = None,
    alphabet: Sequence[str] | None = None,
    zero_bias: float = ZERO_BIAS,
    eps: bool = False,
    crisp: bool = False,
) -> LAutomaton:
    n = n_states if n_states is not None else rng.choice((2, 3, 4))
    if alphabet is None:
        alphabet = SIGMA[: rng.choice((1, 2))]
    states = [f"q{i}" for i in range(n)]

    def val():
        return random_value(L, rng, zero_bias, crisp)

    initial = {s: val() for s in states}
    terminal = {s: val() for s in states}
    syms = list(alphabet) + ([EPS] if eps else [])
    delta = [(p, a, q, val()) for a in syms for p in states for q in states]
    return LAutomaton(L, alphabet, states, initial, terminal, delta)


def random_table(L: OrthoLattice, rng: random.Random, alphabet: Sequence[str], max_len=3, size=4) -> dict:
    table = {}
    for _ in range(size):
        w = tuple(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))
        table[w] = random_value(L, rng, 0.2)
    return table


def random_regex(L: OrthoLattice, rng: random.Random, alphabet: Sequence[str], depth: int = 3) -> rx.Regex:
    """Raw constructors only, so the tree keeps every scalar it was given."""
    if depth <= 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.1:
            return rx.EPS
        if r < 0.15:
            return rx.EMPTY
        return rx.sym(rng.choice(alphabet))
    op = rng.choice(("scalar", "union", "concat", "star", "scalar", "union"))
    if op == "scalar":
        return rx.scalar(random_value(L, rng, 0.0), random_regex(L, rng, alphabet, depth - 1))
    if op == "star":
        return rx.star(random_regex(L, rng, alphabet, depth - 1))
    left = random_regex(L, rng, alphabet, depth - 1)
    right = random_regex(L, rng, alphabet, depth - 1)
    return rx.union(left, right) if op == "union" else rx.concat(left, right)


def random_hom(
    rng: random.Random, sigma: Sequence[str], gamma: Sequence[str], min_len=0, max_len=2
) -> dict[str, tuple[str, ...]]:
    return {a: tuple(rng.choice(gamma) for _ in range(rng.randint(min_len, max_len))) for a in sigma}


def describe(M: LAutomaton, seed, index) -> str:
    eps = " ε" if M.has_eps else ""
    return f"seed={seed} #{index} |Q|={M.n} Σ={''.join(M.alphabet)}{eps}"
