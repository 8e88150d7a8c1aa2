"""Command-line front end: ``omlq <command> ...``.

Exit codes: 0 on success, 1 when ``verify`` produced a failed report, 2 on
parse or validation errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Mapping, Sequence

from . import automata as au
from . import language as lg
from . import regex as rx
from .errors import OmlqError, ParseError
from .io import dumps, lattice_ref_for, load_hom, load_lattice, read_json
from .lattice import DEFAULT_COMMUTATOR_CAP, OrthoLattice
from .logic import DEFAULT_IMPL

MAX_AST_NODES = 200_000


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(f"{self.prog}: {message}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--impl", type=int, choices=range(6), default=int(DEFAULT_IMPL),
                   help="implication kind (default 3, the Sasaki hook)")
    p.add_argument("--commutator-cap", type=int, default=None,
                   help=f"largest set handed to the commutator (default {DEFAULT_COMMUTATOR_CAP})")
    p.add_argument("-o", "--output", default=None, help="write the result here instead of stdout")
    p.add_argument("--format", choices=("json", "table"), default=None)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = _Parser(prog="omlq", description="Lattice-valued automata over orthomodular lattices.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("lattice", parents=[common], help="validate or print a lattice")
    p.add_argument("action", choices=("check", "show"))
    p.add_argument("ref", help="builtin:<name> or a lattice JSON file")

    def aut(p, flag="--automaton", required=True):
        p.add_argument(flag, required=required, metavar="FILE")

    p = sub.add_parser("rec", parents=[common], help="truth degree of words")
    aut(p)
    p.add_argument("--word", action="append", required=True,
                   help='space separated symbols; "" is the empty word (repeatable)')
    p.add_argument("--method", choices=("exact", "paths", "vector"), default="exact")

    for name, hlp in (("determinize", "power-set construction"), ("eps-reduce", "remove ε-moves")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        aut(p)
        p.add_argument("--emit-dot", action="store_true", help="print Graphviz DOT instead of JSON")

    p = sub.add_parser("compose", parents=[common], help="closure constructions")
    p.add_argument("--op", required=True,
                   choices=("union", "product", "concat", "star", "inverse", "hom-preimage"))
    aut(p)
    aut(p, "--other", required=False)
    p.add_argument("--hom", metavar="FILE", help="homomorphism JSON for hom-preimage")
    p.add_argument("--emit-dot", action="store_true")

    p = sub.add_parser("equiv", parents=[common], help="degree to which two languages coincide")
    p.add_argument("left", help="automaton or finite-support language JSON")
    p.add_argument("right")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", help="value-vector exact equivalence")
    g.add_argument("--max-len", type=int, default=None)

    p = sub.add_parser("witness", parents=[common], help="regularity clause value of one witness")
    p.add_argument("--language", required=True, metavar="FILE",
                   help="automaton or finite-support language JSON")
    p.add_argument("--witness", required=True, metavar="FILE", help="witness automaton JSON")
    p.add_argument("--commutative", action="store_true")
    p.add_argument("--deterministic", action="store_true")

    p = sub.add_parser("to-regex", parents=[common], help="Kleene representation of an automaton")
    aut(p)
    p.add_argument("--pivot-order", default="decl", help="lex, decl or a comma separated state list")

    p = sub.add_parser("regex-eval", parents=[common], help="evaluate a regular expression")
    p.add_argument("--regex", required=True, help="text syntax, or a JSON file")
    p.add_argument("--lattice", default=None, help="lattice ref (taken from the file when omitted)")
    p.add_argument("--alphabet", default=None, help="space separated symbols")
    p.add_argument("--word", action="append", required=True)

    from .harness.suites import SUITES

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", default="all", choices=SUITES)
    p.add_argument("--lattice", default="builtin:mo2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--max-len", type=int, default=5)
    return ap


# ------------------------------------------------------------------ loading


def _doc(path: str) -> Mapping:
    doc = read_json(path)
    if not isinstance(doc, Mapping):
        raise ParseError(f"{path}: expected a JSON object")
    return doc


def _automaton(path: str, L: OrthoLattice | None = None) -> au.LAutomaton:
    return au.automaton_from_json(_doc(path), L)


def _language(path: str, L: OrthoLattice | None = None) -> lg.Language:
    doc = _doc(path)
    if "entries" in doc:
        return lg.language_from_json(doc, L)
    return lg.AutomatonLanguage(au.automaton_from_json(doc, L))


def _word(text: str) -> tuple:
    return tuple(text.split())


# ------------------------------------------------------------------ commands


def _emit_automaton(M: au.LAutomaton, args) -> str:
    return M.to_dot() if getattr(args, "emit_dot", False) else dumps(M.to_json())


def _cmd_lattice(args) -> str:
    L = load_lattice(args.ref)
    if args.action == "show":
        return dumps(L.to_json())
    L.require_orthomodular()
    kind = "Boolean algebra" if L.is_boolean else "orthomodular lattice"
    return f"{L.name}: {L.size} elements, {kind}\n"


def _cmd_rec(args) -> str:
    M = _automaton(args.automaton)
    f = {"exact": M.rec, "paths": M.rec_paths, "vector": M.rec_vector}[args.method]
    vals = [(w, M.lattice.name_of(f(_word(w)))) for w in args.word]
    if args.format == "json":
        return dumps([{"word": list(_word(w)), "value": v} for w, v in vals])
    return "".join(f"{v}\n" for _, v in vals)


def _cmd_determinize(args) -> str:
    return _emit_automaton(au.determinize(_automaton(args.automaton)), args)


def _cmd_eps_reduce(args) -> str:
    return _emit_automaton(au.eps_reduce(_automaton(args.automaton)), args)


def _cmd_compose(args) -> str:
    M = _automaton(args.automaton)
    op = args.op
    if op in ("union", "product", "concat"):
        if not args.other:
            raise ParseError(f"compose --op {op} needs --other")
        N = _automaton(args.other, M.lattice)
        R = {"union": au.union_aut, "product": au.product_aut, "concat": au.concat_aut}[op](M, N)
    elif op == "star":
        R = au.fold_aut(M)
    elif op == "inverse":
        R = au.inverse_aut(M)
    else:
        if not args.hom:
            raise ParseError("compose --op hom-preimage needs --hom")
        R = au.hom_preimage_aut(load_hom(args.hom), M)
    return _emit_automaton(R, args)


def _cmd_equiv(args) -> str:
    A = _language(args.left)
    B = _language(args.right, A.lattice)
    L = A.lattice
    if args.exact or args.max_len is None:
        val = au.equiv_degree_exact(lg.language_automaton(A), lg.language_automaton(B), args.impl)
        how = "exact"
    else:
        val = lg.equiv_degree_bounded(A, B, args.impl, args.max_len)
        how = f"max-len {args.max_len}"
    if args.format == "json":
        return dumps({"degree": L.name_of(val), "impl": args.impl, "mode": how})
    return f"{L.name_of(val)}\n"


def _cmd_witness(args) -> str:
    A = _language(args.language)
    M = _automaton(args.witness, A.lattice)
    val = lg.reg_witness(A, M, args.impl, args.commutative, args.deterministic, args.commutator_cap)
    if args.format == "json":
        return dumps({
            "value": A.lattice.name_of(val),
            "impl": args.impl,
            "commutative": args.commutative,
            "deterministic": args.deterministic,
        })
    return f"{A.lattice.name_of(val)}\n"


def _tree_size(r: rx.Regex) -> int:
    memo: dict[int, int] = {}
    for n in rx.unique_nodes(r):
        kids = [k for k in (n.left, n.right) if k is not None]
        memo[n.uid] = 1 + sum(memo[k.uid] for k in kids)
    return memo[r.uid]


def _cmd_to_regex(args) -> str:
    M = _automaton(args.automaton)
    L = M.lattice
    rep = rx.kleene_representation(M, args.pivot_order)
    text = rx.to_text(rep.regex, L)
    if args.format == "table":
        return text + "\n"
    doc = {
        "lattice": lattice_ref_for(L),
        "alphabet": list(M.alphabet),
        "pivot_order": list(rep.pivot_order),
        "text": text,
        "dag": rx.to_dag(rep.regex, L),
    }
    if _tree_size(rep.regex) <= MAX_AST_NODES:
        doc["ast"] = rx.to_ast(rep.regex, L)
    return dumps(doc)


def _cmd_regex_eval(args) -> str:
    src = args.regex
    alphabet = args.alphabet.split() if args.alphabet else None
    if os.path.exists(src):
        doc = read_json(src)
        lref = args.lattice or (doc.get("lattice") if isinstance(doc, Mapping) else None)
        if lref is None:
            raise ParseError(f"{src}: no lattice given; pass --lattice")
        L = load_lattice(lref)
        if isinstance(doc, Mapping) and ("dag" in doc or "ast" in doc or "text" in doc):
            if alphabet is None and "alphabet" in doc:
                alphabet = doc["alphabet"]
            if "dag" in doc:
                r = rx.from_json(doc["dag"], L)
            elif "ast" in doc:
                r = rx.from_json(doc["ast"], L)
            else:
                r = rx.parse_regex(doc["text"], L)
        else:
            r = rx.from_json(doc, L)
    else:
        L = load_lattice(args.lattice or "builtin:bool2")
        r = rx.parse_regex(src, L)
    vals = [(w, L.name_of(rx.regex_eval(r, _word(w), L, alphabet))) for w in args.word]
    if args.format == "json":
        return dumps([{"word": list(_word(w)), "value": v} for w, v in vals])
    return "".join(f"{v}\n" for _, v in vals)


def _cmd_verify(args):
    from .harness.report import summary_table
    from .harness.suites import run_suite

    L = load_lattice(args.lattice)
    L.require_orthomodular()
    reports = run_suite(args.suite, L, args.seed, args.max_len, args.samples)
    if args.format == "json":
        text = "".join(json.dumps(r.to_json(), ensure_ascii=False) + "\n" for r in reports)
    else:
        text = summary_table(reports)
    return text, 1 if any(not r.passed for r in reports) else 0


COMMANDS = {
    "lattice": _cmd_lattice,
    "rec": _cmd_rec,
    "determinize": _cmd_determinize,
    "eps-reduce": _cmd_eps_reduce,
    "compose": _cmd_compose,
    "equiv": _cmd_equiv,
    "witness": _cmd_witness,
    "to-regex": _cmd_to_regex,
    "regex-eval": _cmd_regex_eval,
    "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.commutator_cap is not None:
            os.environ["OMLQ_COMMUTATOR_CAP"] = str(args.commutator_cap)
        out = COMMANDS[args.command](args)
        code = 0
        if isinstance(out, tuple):
            out, code = out
    except OmlqError as e:
        print(f"omlq: error: {e}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
