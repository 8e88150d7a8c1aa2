"""Fixed counterexample automata: symbolic identities over all substitutions and the
strict gaps on MO2."""

from __future__ import annotations

import re

from .. import automata as au
from .. import language as lg
from .. import regex as rx
from ..builtins import builtin
from ..lattice import OrthoLattice
from . import figures as F
from .lemmas import truth, tuples
from .report import CheckReport, Tally, make_report

S1, S2, S3 = ("s",), ("s", "s"), ("s", "s", "s")
TSS = ("t", "s", "s")

# α-expressions displayed for the two-state automaton, before and after pivoting
FIG9_BASE = {("u", "u"): "@ + <b>s", ("u", "v"): "<c>s", ("v", "v"): "@", ("v", "u"): "%0"}
FIG9_DISPLAY = "@ + <b>s + (@ + <b>s).(@ + <b>s)*.<c>s"


def _dist_sides(L, a, b, c):
    """(a∧b)∨(a∧c) and a∧(b∨c)."""
    return L.join(L.meet(a, b), L.meet(a, c)), L.meet(a, L.join(b, c))


def _subst(text: str, L: OrthoLattice, a, b, c) -> rx.Regex:
    names = {"a": a, "b": b, "c": c}
    text = re.sub(r"<([abc])>", lambda m: f"<{L.name_of(names[m.group(1)])}>", text)
    return rx.parse_regex(text, L)


def _same_on_words(L, r1, r2, alphabet, max_len=3) -> bool:
    return all(rx.regex_eval(r1, w, L) == rx.regex_eval(r2, w, L) for w in lg.words_upto(alphabet, max_len))


def symbolic_checks(L: OrthoLattice, seed: int, samples: int) -> list[CheckReport]:
    exhaustive = len(L.elem_names) <= 8
    desc = f"{L.name} all (a,b,c)" if exhaustive else f"{L.name} {samples} sampled (a,b,c)"
    ids = (
        "fig3.rec", "fig3.det", "fig4.delta", "fig4.rec", "fig4.reduced", "fig6.rec1", "fig6.rec2",
        "fig6.prod", "fig7.concat", "fig7.split", "fig8.fold", "fig8.star", "fig8v.fold", "fig8v.star",
        "fig9.base", "fig9.rec", "fig9.display", "fig9v.rec", "fig9v.kleene",
    )
    t = {k: Tally(L, k, 0, desc, "=") for k in ids}
    t["fig9.kleene"] = Tally(L, "fig9.kleene", 0, desc, "<=")
    one = L.one
    for a, b, c in tuples(L, 3, seed, samples, "figures"):
        w = tuple(L.name_of(x) for x in (a, b, c))
        lo, hi = _dist_sides(L, a, b, c)

        M = F.fig3(L, a, b, c)
        t["fig3.rec"].add(w, M.rec(S2), L.join(L.meet(a, c), L.meet(b, c)))
        t["fig3.det"].add(w, au.determinize(M).rec(S2), L.meet(L.join(a, b), c))

        E = F.fig4(L, a, b, c)
        R = au.eps_reduce(E)
        want = {("q0", "q1"): a, ("q0", "q2"): a, ("q0", "q3"): a, ("q0", "q4"): lo,
                ("q1", "q5"): L.join(b, c), ("q2", "q5"): b, ("q3", "q5"): c, ("q4", "q5"): one}
        table_ok = all(
            R.value(p, "s", q) == want.get((p, q), L.zero) for p in R.states for q in R.states
        ) and R.T == E.T
        t["fig4.delta"].add(w, R.value("q0", "s", "q4"), lo)
        t["fig4.rec"].add(w, E.rec(S2), lo)
        t["fig4.reduced"].add(w, R.rec(S2) if table_ok else L.zero, hi if table_ok else one)

        M1, M2 = F.fig6(L, a, b, c)
        t["fig6.rec1"].add(w, M1.rec(S1), a)
        t["fig6.rec2"].add(w, M2.rec(S1), L.join(b, c))
        t["fig6.prod"].add(w, au.product_aut(M1, M2).rec(S1), lo)

        M1, M2 = F.fig7(L, a, b, c)
        t["fig7.concat"].add(w, au.concat_aut(M1, M2).rec(S2), lo)
        t["fig7.split"].add(w, lg.concat(lg.AutomatonLanguage(M1), lg.AutomatonLanguage(M2))(S2), hi)

        M = F.fig8(L, a, b, c)
        t["fig8.fold"].add(w, au.fold_aut(M).rec(S3), lo)
        t["fig8.star"].add(w, lg.kleene_star(lg.AutomatonLanguage(M))(S3), hi)
        M = F.fig8_variant(L, a, b, c)
        t["fig8v.fold"].add(w, au.fold_aut(M).rec(TSS), lo)
        t["fig8v.star"].add(w, lg.kleene_star(lg.AutomatonLanguage(M))(TSS), hi)

        M = F.fig9(L, a, b, c)
        k = rx.kleene_representation(M)
        base_ok = all(
            _same_on_words(L, k.base[(u, v)], _subst(txt, L, a, b, c), M.alphabet)
            for (u, v), txt in FIG9_BASE.items()
        )
        t["fig9.base"].add(w, truth(L, base_ok), one)
        t["fig9.rec"].add(w, M.rec(S1), lo)
        t["fig9.kleene"].add(w, hi, rx.regex_eval(k.regex, S1, L))
        shown = rx.s_scalar(L, a, _subst(FIG9_DISPLAY, L, a, b, c))
        t["fig9.display"].add(w, rx.regex_eval(shown, S1, L), hi)
        M = F.diamond(L, a, b, c)
        t["fig9v.rec"].add(w, M.rec(S2), lo)
        t["fig9v.kleene"].add(w, rx.regex_eval(rx.kleene_representation(M).regex, S2, L), hi)
    return [x.report() for x in t.values()]


def gap_checks() -> list[CheckReport]:
    """Strict gaps with the fixed MO2 substitutions."""
    L = builtin("mo2")
    e = L.elem
    x, xc, y, yc = e("x"), e("x'"), e("y"), e("y'")
    out = []

    def gap(cid, desc, lhs, rhs):
        out.append(make_report(L, cid, 0, desc, lhs, rhs, "gap-strict"))

    M = F.fig3(L, x, xc, y)
    gap("fig3.gap", "mo2 a=x b=x' c=y, word s s", M.rec(S2), au.determinize(M).rec(S2))
    sub = "mo2 a=x b=y c=y'"
    E = F.fig4(L, x, y, yc)
    gap("fig4.gap", f"{sub}, word s s", E.rec(S2), au.eps_reduce(E).rec(S2))
    M1, M2 = F.fig6(L, x, y, yc)
    gap("fig6.gap", f"{sub}, word s", au.product_aut(M1, M2).rec(S1), L.meet(M1.rec(S1), M2.rec(S1)))
    M1, M2 = F.fig7(L, x, y, yc)
    split = lg.concat(lg.AutomatonLanguage(M1), lg.AutomatonLanguage(M2))(S2)
    gap("fig7.gap", f"{sub}, word s s", au.concat_aut(M1, M2).rec(S2), split)
    M = F.fig8(L, x, y, yc)
    gap("fig8.gap", f"{sub}, word s s s", au.fold_aut(M).rec(S3), lg.kleene_star(lg.AutomatonLanguage(M))(S3))
    M = F.fig8_variant(L, x, y, yc)
    gap("fig8v.gap", f"{sub}, word t s s", au.fold_aut(M).rec(TSS), lg.kleene_star(lg.AutomatonLanguage(M))(TSS))
    M = F.fig9(L, x, y, yc)
    gap("fig9.gap", f"{sub}, word s", M.rec(S1), rx.regex_eval(rx.kleene_representation(M).regex, S1, L))
    M = F.diamond(L, x, y, yc)
    gap("fig9v.gap", f"{sub}, word s s", M.rec(S2), rx.regex_eval(rx.kleene_representation(M).regex, S2, L))
    return out
