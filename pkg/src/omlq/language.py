"""Lattice-valued languages over a finite alphabet.

Every language evaluates pointwise: ``A(word)`` returns an element id.
Three concrete backings exist (finite table, automaton, regex); the set
operations build lazily evaluated derived languages on top of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .automata import LAutomaton, as_word
from .errors import AlphabetMismatch, ErasingImageUnbounded, NotFiniteRange, NotFiniteSupport
from .lattice import OrthoLattice
from .logic import DEFAULT_IMPL, biimplies, implies

Word = tuple


def words_upto(alphabet: Sequence[str], max_len: int) -> Iterator[tuple]:
    """Every word of length ≤ max_len, shortest first, then in alphabet order."""
    layer = [()]
    for _ in range(max_len + 1):
        yield from layer
        layer = [w + (a,) for w in layer for a in alphabet]


class Language:
    lattice: OrthoLattice
    alphabet: tuple[str, ...]

    def __call__(self, word) -> int:
        return self.eval(word)

    def eval(self, word) -> int:
        w = as_word(word)
        for a in w:
            if a not in self.alphabet:
                raise AlphabetMismatch(f"symbol {a!r} not in alphabet {self.alphabet}")
        return self._eval(w)

    def _eval(self, w: tuple) -> int:
        raise NotImplementedError

    def range_values(self) -> set[int]:
        """Exact set of values taken over Σ*; raises NotFiniteRange when unknown."""
        raise NotFiniteRange(f"range of {type(self).__name__} is not computable here")

    def _check(self, other: "Language"):
        self.lattice.same_as(other.lattice)
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch(f"alphabets differ: {self.alphabet} vs {other.alphabet}")


class FiniteTable(Language):
    """Finite support; omitted words have value 0."""

    def __init__(self, lattice: OrthoLattice, alphabet: Sequence[str], entries: Mapping):
        self.lattice, self.alphabet = lattice, tuple(alphabet)
        table = {}
        for w, v in entries.items():
            w = as_word(w)
            for a in w:
                if a not in self.alphabet:
                    raise AlphabetMismatch(f"symbol {a!r} not in alphabet {self.alphabet}")
            v = lattice.elem(v)
            if v != lattice.zero:
                table[w] = v
        self.table = table

    def _eval(self, w):
        return self.table.get(w, self.lattice.zero)

    def support(self) -> list[tuple]:
        return sorted(self.table)

    def range_values(self) -> set[int]:
        # infinitely many words fall outside the support and take value 0
        return set(self.table.values()) | {self.lattice.zero}

    def to_automaton(self) -> LAutomaton:
        from .automata import table_automaton

        return table_automaton(self.lattice, self.alphabet, self.table)

    def to_json(self) -> dict:
        from .io import lattice_ref_for

        nm = self.lattice.name_of
        return {
            "lattice": lattice_ref_for(self.lattice),
            "alphabet": list(self.alphabet),
            "entries": [{"word": list(w), "value": nm(v)} for w, v in sorted(self.table.items())],
        }


class AutomatonLanguage(Language):
    """Language recognised by an automaton (exact path semantics)."""

    def __init__(self, automaton: LAutomaton):
        self.automaton = automaton
        self.lattice, self.alphabet = automaton.lattice, automaton.alphabet
        self._memo: dict[tuple, tuple] = {(): automaton.start()}

    def _vector(self, w: tuple) -> tuple:
        v = self._memo.get(w)
        if v is None:
            M = self.automaton
            v = M.step(self._vector(w[:-1]), M.aidx[w[-1]])
            if len(self._memo) < 200_000:
                self._memo[w] = v
        return v

    def _eval(self, w):
        return self.automaton.accept(self._vector(w))

    def range_values(self) -> set[int]:
        return self.automaton.range_values()


class RegexLanguage(Language):
    def __init__(self, regex, lattice: OrthoLattice, alphabet: Sequence[str]):
        from .regex import symbols_of

        self.regex, self.lattice, self.alphabet = regex, lattice, tuple(alphabet)
        extra = symbols_of(regex) - set(self.alphabet)
        if extra:
            raise AlphabetMismatch(f"regex uses symbols outside the alphabet: {sorted(extra)}")

    def _eval(self, w):
        from .regex import regex_eval

        return regex_eval(self.regex, w, self.lattice)


class _Pointwise(Language):
    def __init__(self, f: Callable[..., int], operands: Sequence[Language], unary_range=False):
        first = operands[0]
        for other in operands[1:]:
            first._check(other)
        self.lattice, self.alphabet = first.lattice, first.alphabet
        self.f, self.operands, self.unary_range = f, tuple(operands), unary_range

    def _eval(self, w):
        return self.f(*(A._eval(w) for A in self.operands))

    def range_values(self) -> set[int]:
        if not self.unary_range:
            return super().range_values()
        return {self.f(v) for v in self.operands[0].range_values()}


def scalar(a: int, A: Language) -> Language:
    L = A.lattice
    return _Pointwise(lambda x: L.meet(a, x), [A], unary_range=True)


def complement(A: Language) -> Language:
    L = A.lattice
    return _Pointwise(L.ortho, [A], unary_range=True)


def intersect(A: Language, B: Language) -> Language:
    return _Pointwise(A.lattice.meet, [A, B])


def union(A: Language, B: Language) -> Language:
    return _Pointwise(A.lattice.join, [A, B])


class _Concat(Language):
    def __init__(self, A: Language, B: Language):
        A._check(B)
        self.lattice, self.alphabet, self.A, self.B = A.lattice, A.alphabet, A, B

    def _eval(self, w):
        L = self.lattice
        return L.big_join(L.meet(self.A._eval(w[:k]), self.B._eval(w[k:])) for k in range(len(w) + 1))


class _Star(Language):
    def __init__(self, A: Language):
        self.lattice, self.alphabet, self.A = A.lattice, A.alphabet, A

    def _eval(self, w):
        L, memo = self.lattice, {len(w): self.lattice.one}
        # memo[i]: value of the suffix w[i:] split into non-empty factors
        for i in range(len(w) - 1, -1, -1):
            memo[i] = L.big_join(
                L.meet(self.A._eval(w[i:k]), memo[k]) for k in range(i + 1, len(w) + 1)
            )
        return memo[0]


def concat(A: Language, B: Language) -> Language:
    return _Concat(A, B)


def kleene_star(A: Language) -> Language:
    return _Star(A)


def power_union(A: Language, w, max_power: int | None = None) -> int:
    """∨_n A^n(w), using A^0 = {ε} and A^{n+1} = A^n · A (n ≤ |w| by default).

    Factors may be empty here, so the join over n is only complete for
    n ≤ |w| when A(ε) adds nothing; callers compare against kleene_star on
    Boolean lattices."""
    L = A.lattice
    w = as_word(w)
    top = len(w) if max_power is None else max_power
    acc = L.zero
    powers = [FiniteTable(L, A.alphabet, {(): L.one})]
    acc = L.join(acc, powers[0]._eval(w))
    for _ in range(top):
        powers.append(concat(powers[-1], A))
        acc = L.join(acc, powers[-1]._eval(w))
    return acc


# ------------------------------------------------------------------ homomorphisms


def _check_hom(h: Mapping[str, Sequence[str]], sigma: Sequence[str]):
    missing = [a for a in sigma if a not in h]
    if missing:
        raise AlphabetMismatch(f"h is not defined on {missing[0]!r}")


def apply_hom(h: Mapping[str, Sequence[str]], word) -> tuple:
    out: list[str] = []
    for a in as_word(word):
        out.extend(h[a])
    return tuple(out)


class _Preimage(Language):
    def __init__(self, h, B: Language, sigma: Sequence[str]):
        _check_hom(h, sigma)
        for a in sigma:
            for b in h[a]:
                if b not in B.alphabet:
                    raise AlphabetMismatch(f"h({a}) uses {b!r}, outside {B.alphabet}")
        self.h, self.B = {a: tuple(h[a]) for a in sigma}, B
        self.lattice, self.alphabet = B.lattice, tuple(sigma)

    def _eval(self, w):
        return self.B._eval(apply_hom(self.h, w))


class _Image(Language):
    """h(A)(t) = ∨{A(s) : h(s) = t}.

    Exact when h never maps a symbol to the empty word.  For erasing h only
    preimages of length ≤ max_len are joined, which bounds the true value
    from below; ``exact`` records which case applies.
    """

    def __init__(self, h, A: Language, gamma: Sequence[str], max_len: int | None):
        _check_hom(h, A.alphabet)
        self.h, self.A = {a: tuple(h[a]) for a in A.alphabet}, A
        self.lattice, self.alphabet = A.lattice, tuple(gamma)
        self.erasing = any(len(v) == 0 for v in self.h.values())
        self.exact = not self.erasing
        self.max_len = max_len

    def _eval(self, t):
        L, A, h = self.lattice, self.A, self.h
        bound = len(t) if not self.erasing else self.max_len
        acc = L.zero
        stack = [((), 0)]
        while stack:
            s, pos = stack.pop()
            if pos == len(t):
                acc = L.join(acc, A._eval(s))
            if len(s) >= bound:
                continue
            for a in A.alphabet:
                img = h[a]
                if t[pos : pos + len(img)] == img:
                    stack.append((s + (a,), pos + len(img)))
        return acc


def preimage(h: Mapping[str, Sequence[str]], B: Language, sigma: Sequence[str] | None = None) -> Language:
    return _Preimage(h, B, tuple(h) if sigma is None else sigma)


def image(
    h: Mapping[str, Sequence[str]],
    A: Language,
    gamma: Sequence[str],
    max_len: int | None = None,
    exact: bool = False,
) -> Language:
    erasing = any(len(h[a]) == 0 for a in A.alphabet if a in h)
    if erasing and (exact or max_len is None):
        raise ErasingImageUnbounded(
            "h maps a symbol to the empty word; give max_len for a lower-bound evaluation"
        )
    return _Image(h, A, gamma, max_len)


# ------------------------------------------------------------------ thresholds


@dataclass(frozen=True)
class WordSet:
    """A finite word set, or the complement of one when ``cofinite`` is set."""

    words: frozenset
    cofinite: bool = False

    def __contains__(self, word) -> bool:
        return (as_word(word) in self.words) != self.cofinite

    def is_finite(self) -> bool:
        return not self.cofinite


def thresholds(A: Language, lam: int):
    """(A↓λ, A↑λ, A⇓λ): words with A(s) ≰ λ, words with A(s) ≱ λ, and A with
    every value ≤ λ replaced by 0."""
    if not isinstance(A, FiniteTable):
        raise NotFiniteSupport("thresholds need a finite-support language")
    L = A.lattice
    down = frozenset(w for w, v in A.table.items() if not L.leq(v, lam))
    if L.leq(lam, L.zero):
        up = frozenset(w for w, v in A.table.items() if not L.leq(lam, v))
        up_set = WordSet(up)
    else:
        # every word outside the support has value 0 ≱ λ
        up_set = WordSet(frozenset(w for w, v in A.table.items() if L.leq(lam, v)), cofinite=True)
    clamp = FiniteTable(L, A.alphabet, {w: A.table[w] for w in down})
    return WordSet(down), up_set, clamp


# ------------------------------------------------------------------ degrees


def equiv_degree_bounded(A: Language, B: Language, impl: int = DEFAULT_IMPL, max_len: int = 5) -> int:
    """∧ over words of length ≤ max_len of A(s) ↔ B(s)."""
    A._check(B)
    L = A.lattice
    return L.big_meet(biimplies(L, impl, A._eval(w), B._eval(w)) for w in words_upto(A.alphabet, max_len))


def inclusion_degree_bounded(A: Language, B: Language, impl: int = DEFAULT_IMPL, max_len: int = 5) -> int:
    A._check(B)
    L = A.lattice
    return L.big_meet(implies(L, impl, A._eval(w), B._eval(w)) for w in words_upto(A.alphabet, max_len))


def membership_degree(A: Language, word, height: int, impl: int = DEFAULT_IMPL) -> int:
    """Degree that the point (word, height) belongs to A: height → A(word)."""
    return implies(A.lattice, impl, height, A.eval(word))


def as_language(obj) -> Language:
    if isinstance(obj, Language):
        return obj
    if isinstance(obj, LAutomaton):
        return AutomatonLanguage(obj)
    raise TypeError(f"cannot view {type(obj).__name__} as a language")


def language_automaton(A: Language) -> LAutomaton:
    """An automaton recognising A exactly, when one is at hand."""
    if isinstance(A, AutomatonLanguage):
        return A.automaton
    if isinstance(A, FiniteTable):
        return A.to_automaton()
    raise NotFiniteRange("only table- and automaton-backed languages have a witness automaton")


def reg_witness(
    A: Language,
    M: LAutomaton,
    impl: int = DEFAULT_IMPL,
    commutative: bool = False,
    deterministic: bool = False,
    cap: int | None = None,
) -> int:
    """Clause value of witness M in the (commutative, deterministic) regularity of A:
    the exact degree of A ≡ rec_M, met with γ(atom(M) ∪ Range(A)) when
    commutative, and 0 when determinism is asked for but M is not deterministic."""
    from .automata import reg_witness_automata

    A_aut = language_automaton(A)
    rng = A.range_values() if commutative else None
    return reg_witness_automata(A_aut, M, impl, commutative, deterministic, rng, cap)


def language_from_json(doc: Mapping, lattice: OrthoLattice | None = None) -> FiniteTable:
    from .builtins import resolve_lattice
    from .errors import ParseError

    try:
        L = lattice if lattice is not None else resolve_lattice(doc["lattice"])
        entries = {}
        for e in doc["entries"]:
            w = as_word(e["word"])
            entries[w] = e["value"]
        return FiniteTable(L, doc["alphabet"], entries)
    except (KeyError, TypeError) as e:
        raise ParseError(f"language document malformed: {e!r}") from None


def iter_values(A: Language, max_len: int) -> Iterable[tuple[tuple, int]]:
    for w in words_upto(A.alphabet, max_len):
        yield w, A._eval(w)
