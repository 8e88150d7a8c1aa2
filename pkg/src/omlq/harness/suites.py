"""Named suites and the pumping sampler."""

from __future__ import annotations

from ..automata import determinize
from ..errors import UnknownSuite
from ..language import AutomatonLanguage
from ..lattice import OrthoLattice
from . import theorems as T
from .counterexamples import gap_checks, symbolic_checks
from .generators import describe, random_automaton, rng_for
from .lemmas import lattice_lemmas, logic_lemmas
from .pumping import example_3_4_check, pumping_check
from .report import CheckReport

SUITES = (
    "lattice-lemmas",
    "logic-lemmas",
    "automata-theorems",
    "regex-theorems",
    "counterexamples",
    "boolean-equalities",
    "pumping",
    "all",
)


def pumping_pairs(L: OrthoLattice, seed: int, samples: int, max_len: int = 8, max_pump: int = 3):
    """Automaton-backed A with one of three witnesses: its own automaton, the
    power-set automaton of it, or an unrelated random automaton."""
    out = []
    for i in range(samples):
        rng = rng_for(seed, "pump", i)
        M = random_automaton(L, rng)
        kind = i % 3
        if kind == 0:
            W, how = M, "witness=self"
        elif kind == 1:
            W, how = determinize(M), "witness=power-set"
        else:
            W, how = random_automaton(L, rng, alphabet=M.alphabet), "witness=random"
        desc = f"{describe(M, seed, i)} {how} |W|={W.n}"
        out.append(pumping_check(AutomatonLanguage(M), W, 3, max_len, max_pump, index=i, instance=desc))
    return out


def run_suite(
    suite: str, lattice: OrthoLattice, seed: int = 0, max_len: int = 5, samples: int = 100
) -> list[CheckReport]:
    if suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")
    L = lattice
    if suite == "all":
        # the equality forms are only claimed over Boolean algebras
        todo = tuple(s for s in SUITES[:-1] if L.is_boolean or s != "boolean-equalities")
    else:
        todo = (suite,)
    reports: list[CheckReport] = []
    for name in todo:
        if name == "lattice-lemmas":
            reports += lattice_lemmas(L, seed, samples)
        elif name == "logic-lemmas":
            reports += logic_lemmas(L, seed, samples)
        elif name == "automata-theorems":
            reports += T.check_rec_engines(L, seed, samples, max_len)
            reports += T.check_determinize(L, seed, samples, max_len)
            reports += T.check_eps_reduce(L, seed, samples, max_len)
            reports += T.check_closures(L, seed, samples, max_len)
            reports += T.check_hom_preimage(L, seed, samples, max_len)
            reports += T.check_lemma_2_12(L, seed, samples, max_len)
            reports += T.check_complement_chain(L, seed, samples)
            reports += T.check_cor_4_2(L, seed, samples)
        elif name == "regex-theorems":
            reports += T.check_kleene(L, seed, samples, max_len)
            reports += T.check_regex_hom(L, seed, samples, max_len)
        elif name == "counterexamples":
            reports += symbolic_checks(L, seed, samples)
            reports += gap_checks()
            reports.append(example_3_4_check())
        elif name == "boolean-equalities":
            reports += T.check_determinize(L, seed, samples, max_len, boolean=True)
            reports += T.check_eps_reduce(L, seed, samples, max_len, boolean=True)
            reports += T.check_closures(L, seed, samples, max_len, boolean=True)
            reports += T.check_kleene(L, seed, samples, max_len, boolean=True)
            reports += T.check_regex_hom(L, seed, samples, max_len, boolean=True)
            reports += T.check_cor_4_2(L, seed, samples, boolean=True)
        elif name == "pumping":
            reports += pumping_pairs(L, seed, samples, max(max_len, 1))
    return sorted(reports, key=CheckReport.sort_key)
