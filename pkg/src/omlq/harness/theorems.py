"""Property checks of the automaton, language and regex theorems.

Each generator draws seeded random instances and compares both sides word
by word up to ``max_len``.  ``boolean=True`` asks for the equality forms
that hold when the lattice is a Boolean algebra.
"""

from __future__ import annotations

import itertools

from .. import automata as au
from .. import language as lg
from .. import regex as rx
from ..logic import DEFAULT_IMPL, biimplies
from .generators import GAMMA, describe, random_automaton, random_hom, random_regex, random_table, rng_for
from .report import CheckReport, Tally, make_report


def _words(alphabet, max_len):
    return list(lg.words_upto(alphabet, max_len))


def _tallies(L, index, instance, spec):
    return {k: Tally(L, k, index, instance, rel) for k, rel in spec}


def check_rec_engines(L, seed, samples, max_len) -> list[CheckReport]:
    """Exact downset engine and join-collapsed recurrence against path enumeration."""
    out = []
    for i in range(samples):
        M = random_automaton(L, rng_for(seed, "aut", i))
        t = _tallies(L, i, describe(M, seed, i), (("rec.exact-paths", "="), ("rec.vector-paths", "=")))
        for w in _words(M.alphabet, max_len):
            p = M.rec_paths(w)
            t["rec.exact-paths"].add(w, M.rec(w), p)
            t["rec.vector-paths"].add(w, M.rec_vector(w), p)
        out += [x.report() for x in t.values()]
    return out


def check_determinize(L, seed, samples, max_len, boolean=False) -> list[CheckReport]:
    out = []
    for i in range(samples):
        M = random_automaton(L, rng_for(seed, "aut", i))
        D = au.determinize(M)
        g = M.gamma_atoms()
        spec = (("thm4.1.3", "="),) if boolean else (("thm4.1.1", "<="), ("thm4.1.2", "<="))
        t = _tallies(L, i, describe(M, seed, i), spec)
        for w in _words(M.alphabet, max_len):
            r, d = M.rec(w), D.rec(w)
            if boolean:
                t["thm4.1.3"].add(w, r, d)
            else:
                t["thm4.1.1"].add(w, r, d)
                t["thm4.1.2"].add(w, L.meet(g, d), r)
        out += [x.report() for x in t.values()]
    return out


def check_eps_reduce(L, seed, samples, max_len, boolean=False) -> list[CheckReport]:
    out = []
    for i in range(samples):
        E = random_automaton(L, rng_for(seed, "eps", i), eps=True, zero_bias=0.6)
        R = au.eps_reduce(E)
        g = E.gamma_atoms()
        spec = (("thm5.1.3", "="),) if boolean else (("thm5.1.1", "<="), ("thm5.1.2", "<="))
        t = _tallies(L, i, describe(E, seed, i), spec)
        for w in _words(E.alphabet, max_len):
            e, r = E.rec(w), R.rec(w)
            if boolean:
                t["thm5.1.3"].add(w, e, r)
            else:
                t["thm5.1.1"].add(w, e, r)
                t["thm5.1.2"].add(w, L.meet(g, r), e)
        out += [x.report() for x in t.values()]
    return out


def _pair(L, seed, tag, i):
    rng = rng_for(seed, tag, i)
    M1 = random_automaton(L, rng)
    M2 = random_automaton(L, rng, alphabet=M1.alphabet)
    return M1, M2, f"{describe(M1, seed, i)} + |Q|={M2.n}"


def check_closures(L, seed, samples, max_len, boolean=False) -> list[CheckReport]:
    """Inverse, union, product, concatenation and fold."""
    out = []
    for i in range(samples):
        M1, M2, desc = _pair(L, seed, "pair", i)
        g = L.commutator(set(M1.atoms()) | set(M2.atoms()))
        g1 = M1.gamma_atoms()
        inv, uni, prod = au.inverse_aut(M1), au.union_aut(M1, M2), au.product_aut(M1, M2)
        cat, fold = au.concat_aut(M1, M2), au.fold_aut(M1)
        A1, A2 = lg.AutomatonLanguage(M1), lg.AutomatonLanguage(M2)
        split = lg.concat(A1, A2)
        star = lg.kleene_star(A1)
        if boolean:
            spec = (("prop6.5.3", "="), ("prop6.6.3", "="), ("prop6.7.3", "="))
        else:
            spec = (
                ("prop6.1", "="), ("prop6.3", "="), ("prop6.5.1", "<="), ("prop6.5.2", "<="),
                ("prop6.6.1", "<="), ("prop6.6.2", "<="), ("prop6.7.1", "<="), ("prop6.7.2", "<="),
            )
        t = _tallies(L, i, desc, spec)
        for w in _words(M1.alphabet, max_len):
            r1, r2 = A1(w), A2(w)
            both = L.meet(r1, r2)
            rp, rc, rf = prod.rec(w), cat.rec(w), fold.rec(w)
            sj, st = split(w), star(w)
            if boolean:
                t["prop6.5.3"].add(w, rp, both)
                t["prop6.6.3"].add(w, rc, sj)
                t["prop6.7.3"].add(w, rf, st)
                continue
            t["prop6.1"].add(w, inv.rec(w), M1.rec(tuple(reversed(w))))
            t["prop6.3"].add(w, uni.rec(w), L.join(r1, r2))
            t["prop6.5.1"].add(w, rp, both)
            t["prop6.5.2"].add(w, L.meet(g, both), rp)
            t["prop6.6.1"].add(w, rc, sj)
            t["prop6.6.2"].add(w, L.meet(g, sj), rc)
            t["prop6.7.1"].add(w, rf, st)
            t["prop6.7.2"].add(w, L.meet(g1, st), rf)
        out += [x.report() for x in t.values()]
    return out


def check_hom_preimage(L, seed, samples, max_len) -> list[CheckReport]:
    out = []
    for i in range(samples):
        rng = rng_for(seed, "hom", i)
        M = random_automaton(L, rng, alphabet=GAMMA[: rng.choice((1, 2))])
        sigma = ("a", "b")[: rng.choice((1, 2))]
        h = random_hom(rng, sigma, M.alphabet, 0, 2)
        H = au.hom_preimage_aut(h, M)
        desc = f"{describe(M, seed, i)} h={_hom_text(h)}"
        t = Tally(L, "prop6.9", i, desc, "=")
        for w in _words(sigma, max_len):
            t.add(w, H.rec(w), M.rec(lg.apply_hom(h, w)))
        out.append(t.report())
    return out


def _hom_text(h):
    return ",".join(f"{a}->{''.join(v) or '@'}" for a, v in h.items())


def check_lemma_2_12(L, seed, samples, max_len, impl=DEFAULT_IMPL) -> list[CheckReport]:
    """Bounded form: the equivalence degree over all t with |t| ≤ K·max|h(σ)|
    is below the degree over the images h(s), |s| ≤ K."""
    out = []
    for i in range(samples):
        rng = rng_for(seed, "l212", i)
        gamma = GAMMA[: rng.choice((1, 2))]
        B1 = random_automaton(L, rng, alphabet=gamma)
        B2 = random_automaton(L, rng, alphabet=gamma)
        sigma = ("a", "b")[: rng.choice((1, 2))]
        h = random_hom(rng, sigma, gamma, 0, 2)
        k = min(max_len, 4)
        bound = k * max(1, max(len(v) for v in h.values()))
        A1, A2 = lg.AutomatonLanguage(B1), lg.AutomatonLanguage(B2)
        lhs = lg.equiv_degree_bounded(A1, A2, impl, bound)
        rhs = L.big_meet(
            biimplies(L, impl, A1(lg.apply_hom(h, s)), A2(lg.apply_hom(h, s))) for s in _words(sigma, k)
        )
        out.append(make_report(L, "lem2.12", i, f"seed={seed} #{i} h={_hom_text(h)} K={k}", lhs, rhs, "<="))
    return out


def check_complement_chain(L, seed, samples, impl=DEFAULT_IMPL) -> list[CheckReport]:
    """γ(atom(M) ∪ r(A)) ∧ ⌈A ≡ rec_M⌉ ≤ γ(atom(M) ∪ r(A^c)) ∧ ⌈A^c ≡ rec_{D^c}⌉, D the power-set automaton of M."""
    out = []
    for i in range(samples):
        rng = rng_for(seed, "p62", i)
        if i % 2 == 0:
            A = random_automaton(L, rng)
            M = random_automaton(L, rng, alphabet=A.alphabet)
            kind = "A=rec(random)"
        else:
            alphabet = ("a", "b")[: rng.choice((1, 2))]
            A = au.table_automaton(L, alphabet, random_table(L, rng, alphabet))
            M = A
            kind = "A=table, witness=chain automaton"
        rng_A = A.range_values()
        lhs = L.meet(L.commutator(set(M.atoms()) | rng_A), au.equiv_degree_exact(A, M, impl))
        Dc = au.complement_det(au.determinize(M))
        pairs = au.value_pairs(A, Dc)
        deg = L.big_meet(biimplies(L, impl, L.ortho(a), d) for a, d in sorted(pairs))
        rng_Ac = {L.ortho(a) for a in rng_A}
        rhs = L.meet(L.commutator(set(M.atoms()) | rng_Ac), deg)
        out.append(make_report(L, "prop6.2", i, f"seed={seed} #{i} {kind} |Q|={M.n}", lhs, rhs, "<="))
    return out


def check_cor_4_2(L, seed, samples, impl=DEFAULT_IMPL, boolean=False) -> list[CheckReport]:
    """Witness M against its power-set automaton D.

    General form: the commutative clause of M is below that of D.  Boolean
    form: the plain (Reg) clause of M equals the deterministic clause of D."""
    out = []
    for i in range(samples):
        rng = rng_for(seed, "c42", i)
        A = random_automaton(L, rng)
        M = random_automaton(L, rng, alphabet=A.alphabet)
        D = au.determinize(M)
        desc = f"seed={seed} #{i} |Q|={M.n} |D|={D.n}"
        if boolean:
            lhs = au.reg_witness_automata(A, M, impl)
            rhs = au.reg_witness_automata(A, D, impl, deterministic=True)
            out.append(make_report(L, "cor4.2.bool", i, desc, lhs, rhs, "="))
        else:
            rng_A = A.range_values()
            lhs = au.reg_witness_automata(A, M, impl, commutative=True, range_values=rng_A)
            rhs = au.reg_witness_automata(A, D, impl, commutative=True, deterministic=True, range_values=rng_A)
            out.append(make_report(L, "cor4.2", i, desc, lhs, rhs, "<="))
    return out


def check_kleene(L, seed, samples, max_len, boolean=False, all_orders_upto=3) -> list[CheckReport]:
    out = []
    for i in range(samples):
        M = random_automaton(L, rng_for(seed, "aut", i))
        g = M.gamma_atoms()
        orders = (
            list(itertools.permutations(M.states)) if M.n <= all_orders_upto and not boolean else [M.states]
        )
        spec = (("thm7.1.3", "="),) if boolean else (("thm7.1.1", "<="), ("thm7.1.2", "<="))
        t = _tallies(L, i, describe(M, seed, i), spec)
        words = _words(M.alphabet, max_len)
        recs = [M.rec(w) for w in words]
        for order in orders:
            k = rx.kleene_representation(M, ",".join(order)).regex
            for w, r in zip(words, recs):
                v = rx.regex_eval(k, w, L)
                if boolean:
                    t["thm7.1.3"].add(w, r, v)
                else:
                    t["thm7.1.1"].add(w, r, v)
                    t["thm7.1.2"].add(w, L.meet(g, v), r)
        out += [x.report() for x in t.values()]
    return out


def check_regex_hom(L, seed, samples, max_len, boolean=False) -> list[CheckReport]:
    """h(L(α)) against L(h(α)).

    The first inequality is checked with erasing h allowed (the image is then a
    lower bound, which keeps the direction); the gated and Boolean forms use
    non-erasing h so the image is exact."""
    out = []
    for i in range(samples):
        rng = rng_for(seed, "p75", i)
        sigma = ("a", "b")[: rng.choice((1, 2))]
        gamma = GAMMA[: rng.choice((1, 2))]
        alpha = random_regex(L, rng, sigma, 3)
        h_any = random_hom(rng, sigma, gamma, 0, 2)
        h_ne = random_hom(rng, sigma, gamma, 1, 2)
        A = lg.RegexLanguage(alpha, L, sigma)
        g = rx.delta_gamma(alpha, L)
        desc = f"seed={seed} #{i} α={rx.to_text(alpha, L)}"
        if boolean:
            img = lg.image(h_ne, A, gamma, exact=True)
            ha = rx.regex_hom(h_ne, alpha)
            t = Tally(L, "prop7.5.3", i, f"{desc} h={_hom_text(h_ne)}", "=")
            for w in _words(gamma, max_len):
                t.add(w, img(w), rx.regex_eval(ha, w, L))
            out.append(t.report())
            continue
        img_lb = lg.image(h_any, A, gamma, max_len=max_len + 2)
        ha_any = rx.regex_hom(h_any, alpha)
        t1 = Tally(L, "prop7.5.1", i, f"{desc} h={_hom_text(h_any)}", "<=")
        img = lg.image(h_ne, A, gamma, exact=True)
        ha = rx.regex_hom(h_ne, alpha)
        t2 = Tally(L, "prop7.5.2", i, f"{desc} h={_hom_text(h_ne)}", "<=")
        for w in _words(gamma, max_len):
            t1.add(w, img_lb(w), rx.regex_eval(ha_any, w, L))
            t2.add(w, L.meet(g, rx.regex_eval(ha, w, L)), img(w))
        out += [t1.report(), t2.report()]
    return out
