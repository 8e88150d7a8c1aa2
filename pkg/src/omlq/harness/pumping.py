"""Bounded pumping check and the three computable facets of the
Chinese-lantern regularity example."""

from __future__ import annotations

from ..automata import LAutomaton, as_word, sigma_star
from ..builtins import builtin
from ..errors import NotFiniteRange, OmlqError
from ..language import Language, language_automaton, words_upto
from ..logic import ImplKind, biimplies, implies
from .report import CheckReport, make_report, word_text


class CountingLanguage(Language):
    """A_t: value 1 on σⁿτⁿ (n ≥ 0) and t everywhere else."""

    def __init__(self, lattice, t, sigma="s", tau="t"):
        self.lattice, self.alphabet = lattice, (sigma, tau)
        self.t = lattice.elem(t)

    def _eval(self, w):
        n = len(w) // 2
        if len(w) % 2 == 0 and w == (self.alphabet[0],) * n + (self.alphabet[1],) * n:
            return self.lattice.one
        return self.t

    def range_values(self) -> set[int]:
        return {self.lattice.one, self.t}


def equiv_range_lower_bound(A: Language, M: LAutomaton, impl: int) -> int:
    """∧ of a ↔ b over Range(A) × Range(rec_M): every actual pair
    (A(s), rec_M(s)) is among them, so this is below ⌈A ≡ rec_M⌉."""
    L = A.lattice
    return L.big_meet(biimplies(L, impl, a, b) for a in sorted(A.range_values()) for b in sorted(M.range_values()))


def _witness_lhs(A: Language, M: LAutomaton):
    """Clause value of M for commutative regularity of A, exact when A has an
    automaton, otherwise the range-product lower bound."""
    from ..automata import reg_witness_automata

    L = A.lattice
    rng = A.range_values()
    try:
        A_aut = language_automaton(A)
    except NotFiniteRange:
        deg = equiv_range_lower_bound(A, M, ImplKind.SASAKI3)
        return L.meet(deg, L.commutator(set(M.atoms()) | rng)), "lhs is a lower bound"
    return reg_witness_automata(A_aut, M, ImplKind.SASAKI3, commutative=True, range_values=rng), "lhs exact"


def pumping_rhs(A: Language, n: int, max_len: int, max_pump: int):
    """∧ over n ≤ |s| ≤ max_len of A(s) →3 ∨_{s=uvw, |uv|≤n, |v|≥1} ∧_{i≤max_pump} A(uvⁱw).

    Returns the value and the word attaining the smallest implication."""
    L = A.lattice
    acc, worst = L.one, None
    for s in words_upto(A.alphabet, max_len):
        if len(s) < n:
            continue
        best = L.zero
        for j in range(1, n + 1):
            for i in range(j):
                u, v, w = s[:i], s[i:j], s[j:]
                best = L.join(best, L.big_meet(A._eval(u + v * k + w) for k in range(max_pump + 1)))
        term = implies(L, ImplKind.SASAKI3, A._eval(s), best)
        new = L.meet(acc, term)
        if new != acc:
            acc, worst = new, s
    return acc, worst


def pumping_check(
    A: Language,
    witness: LAutomaton,
    impl: int = ImplKind.SASAKI3,
    max_len: int = 8,
    max_pump: int = 3,
    index: int = 0,
    instance: str = "",
) -> CheckReport:
    if int(impl) != ImplKind.SASAKI3:
        raise OmlqError("the pumping check is stated for the Sasaki hook (--impl 3)")
    A.lattice.same_as(witness.lattice)
    lhs, note = _witness_lhs(A, witness)
    n = witness.n
    rhs, worst = pumping_rhs(A, n, max_len, max_pump)
    return make_report(
        A.lattice, "thm8.1", index, instance or f"n=|Q|={n} max_len={max_len} max_pump={max_pump}",
        lhs, rhs, "<=", witness=word_text(worst) if worst else None, notes=(note,),
    )


def _paths(M: LAutomaton, word):
    """Every state sequence q0..qk along word with non-zero value."""
    L = M.lattice
    idx = M.word_indices(word)
    seqs = [[p] for p in range(M.n) if M.I[p] != L.zero]
    for ai in idx:
        seqs = [s + [q] for s in seqs for q in range(M.n) if M.delta[ai][s[-1]][q] != L.zero]
    return [s for s in seqs if M.T[s[-1]] != L.zero]


def _path_term(M: LAutomaton, seq, word):
    L = M.lattice
    v = L.meet(M.I[seq[0]], M.T[seq[-1]])
    for k, a in enumerate(word):
        v = L.meet(v, M.delta[M.aidx[a]][seq[k]][seq[k + 1]])
    return v


def default_surgery_automaton():
    L = builtin("chinese_lantern")
    return LAutomaton(
        L, ("s", "t"), ["u", "v"], {"u": "1"}, {"v": "1", "u": "p-"},
        [("u", "s", "u", "1"), ("u", "s", "v", "p+"), ("u", "t", "v", "1"), ("v", "t", "v", "pbar-"),
         ("v", "s", "u", "p-")],
    )


def example_3_4_check(automaton: LAutomaton | None = None, max_len: int = 6) -> CheckReport:
    """(a) the four bi-implication identities; (b) the Σ*-witness scaled by p−
    gives regularity degree at least p−; (c) pumping σ inside an accepting
    path on σⁿτⁿ of an n-state automaton keeps its value and is dominated by
    the recognition degree of the pumped word."""
    L = builtin("chinese_lantern")
    e = L.elem
    pm = e("p-")
    notes = []
    S = ImplKind.SASAKI3

    a_ok = all(biimplies(L, S, pm, e(x)) == L.zero for x in ("p+", "pbar-", "pbar+"))
    a_ok = a_ok and biimplies(L, S, pm, L.one) == pm
    notes.append(f"(a) identities {'hold' if a_ok else 'FAIL'}")

    A = CountingLanguage(L, pm)
    W = sigma_star(L, A.alphabet, pm)
    lower = equiv_range_lower_bound(A, W, S)
    upper = L.big_meet(biimplies(L, S, A(w), W.rec(w)) for w in words_upto(A.alphabet, max_len))
    notes.append(f"(b) witness degree in [{L.name_of(lower)}, {L.name_of(upper)}]")

    M = automaton if automaton is not None else default_surgery_automaton()
    L.same_as(M.lattice)
    n = M.n
    s, t = M.alphabet[:2]
    word = (s,) * n + (t,) * n
    c_ok, checked = True, 0
    for seq in _paths(M, word):
        term = _path_term(M, seq, word)
        i, j = next((i, j) for j in range(1, n + 1) for i in range(j) if seq[i] == seq[j])
        pumped_seq = seq[: j + 1] + seq[i + 1 : j + 1] + seq[j + 1 :]
        pumped = (s,) * (n + j - i) + (t,) * n
        same = _path_term(M, pumped_seq, pumped) == term
        dominated = L.leq(term, M.rec(pumped))
        c_ok = c_ok and same and dominated
        checked += 1
    notes.append(f"(c) {checked} accepting paths on {word_text(word)} {'pumped soundly' if c_ok else 'FAIL'}")
    notes.append("the supremum over all automata is not computed")

    report = make_report(L, "ex3.4", 0, "chinese_lantern A_{p-}, Σ={s,t}", pm, lower, "<=", notes=notes)
    if not (a_ok and c_ok and upper == pm):
        report = CheckReport(**{**report.__dict__, "passed": False})
    return report
