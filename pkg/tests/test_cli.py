import json

import pytest

from omlq import automata as au
from omlq import regex as rx
from omlq.cli import main
from omlq.harness.figures import fig3
from omlq.harness.generators import random_automaton, rng_for
from omlq.io import dumps
from omlq.language import words_upto

# check ids whose failure is expected on MO2 (see the notes in the README)
KNOWN_MO2_FAILURES = {"rec.vector-paths", "fig8.fold", "fig8.star", "fig8.gap", "fig9.gap", "fig9.kleene"}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path, mo2):
    e = mo2.elem
    f3 = tmp_path / "fig3.json"
    f3.write_text(dumps(fig3(mo2, e("x"), e("x'"), e("y")).to_json()))
    r = tmp_path / "rand.json"
    r.write_text(dumps(random_automaton(mo2, rng_for(0, "cli"), alphabet=("s",)).to_json()))
    eps = tmp_path / "eps.json"
    eps.write_text(dumps(random_automaton(mo2, rng_for(1, "cli"), alphabet=("s",), eps=True).to_json()))
    h = tmp_path / "h.json"
    h.write_text('{"a": ["s", "s"], "b": []}')
    lang = tmp_path / "lang.json"
    lang.write_text(json.dumps({"lattice": "builtin:mo2", "alphabet": ["s"],
                                "entries": [{"word": ["s"], "value": "x"}]}))
    return {"fig3": str(f3), "rand": str(r), "eps": str(eps), "hom": str(h), "lang": str(lang),
            "dir": tmp_path}


def test_rec_fig3(capsys, files):
    # [DERIVED] (a∧c)∨(b∧c) with a=x, b=x', c=y on MO2
    code, out, _ = run(capsys, "rec", "--automaton", files["fig3"], "--word", "s s", "--word", "")
    assert code == 0 and out.split() == ["0", "0"]
    code, out, _ = run(capsys, "rec", "--automaton", files["fig3"], "--word", "s s", "--format", "json")
    assert json.loads(out) == [{"word": ["s", "s"], "value": "0"}]


def test_lattice_check(capsys):
    code, _, err = run(capsys, "lattice", "check", "builtin:o6")
    assert code == 2 and "orthomodular law violated at (a,b)=" in err
    code, out, _ = run(capsys, "lattice", "check", "builtin:mo2")
    assert code == 0 and "orthomodular" in out


def test_lattice_show_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "lattice", "show", "builtin:chinese_lantern")
    p = tmp_path / "l.json"
    p.write_text(out)
    code, out, _ = run(capsys, "lattice", "check", str(p))
    assert code == 0


def test_bad_input_exits_2(capsys, files, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"lattice": "builtin:mo2",\n "alphabet": [}')
    code, _, err = run(capsys, "rec", "--automaton", str(bad), "--word", "s")
    assert code == 2 and "bad.json:2:" in err
    code, _, err = run(capsys, "rec", "--automaton", files["fig3"], "--word", "z")
    assert code == 2
    code, _, _ = run(capsys, "rec", "--nope")
    assert code == 2
    code, _, err = run(capsys, "verify", "--lattice", "builtin:o6", "--samples", "2")
    assert code == 2


@pytest.mark.parametrize("cmd", ["determinize", "eps-reduce"])
def test_transformations_round_trip(capsys, files, cmd):
    src = files["eps"] if cmd == "eps-reduce" else files["rand"]
    out_path = str(files["dir"] / f"{cmd}.json")
    code, _, _ = run(capsys, cmd, "--automaton", src, "-o", out_path)
    assert code == 0
    M = au.automaton_from_json(json.load(open(src)))
    R = au.automaton_from_json(json.load(open(out_path)))
    f = au.determinize if cmd == "determinize" else au.eps_reduce
    want = f(M)
    for w in words_upto(M.alphabet, 4):
        assert R.rec(w) == want.rec(w)
    code, out, _ = run(capsys, cmd, "--automaton", src, "--emit-dot")
    assert out.startswith("digraph")


@pytest.mark.parametrize("op", ["union", "product", "concat", "star", "inverse", "hom-preimage"])
def test_compose(capsys, files, op):
    argv = ["compose", "--op", op, "--automaton", files["rand"]]
    if op in ("union", "product", "concat"):
        argv += ["--other", files["fig3"]]
    if op == "hom-preimage":
        argv += ["--hom", files["hom"]]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    R = au.automaton_from_json(json.loads(out))
    M = au.automaton_from_json(json.load(open(files["rand"])))
    N = au.automaton_from_json(json.load(open(files["fig3"])))
    want = {
        "union": lambda: au.union_aut(M, N), "product": lambda: au.product_aut(M, N),
        "concat": lambda: au.concat_aut(M, N), "star": lambda: au.fold_aut(M),
        "inverse": lambda: au.inverse_aut(M),
        "hom-preimage": lambda: au.hom_preimage_aut({"a": ("s", "s"), "b": ()}, M),
    }[op]()
    for w in words_upto(R.alphabet, 3):
        assert R.rec(w) == want.rec(w)


def test_compose_missing_operand(capsys, files):
    code, _, err = run(capsys, "compose", "--op", "union", "--automaton", files["rand"])
    assert code == 2 and "--other" in err


def test_equiv_and_witness(capsys, files, mo2):
    code, out, _ = run(capsys, "equiv", files["fig3"], files["fig3"], "--exact")
    assert out.strip() == "1"
    M1 = au.automaton_from_json(json.load(open(files["fig3"])))
    M2 = au.automaton_from_json(json.load(open(files["rand"])))
    want = mo2.name_of(au.equiv_degree_exact(M1, M2))
    code, out, _ = run(capsys, "equiv", files["fig3"], files["rand"], "--exact")
    assert out.strip() == want
    code, out, _ = run(capsys, "equiv", files["fig3"], files["rand"], "--max-len", "8", "--format", "json")
    assert json.loads(out)["degree"] == want
    code, out, _ = run(capsys, "equiv", files["lang"], files["lang"], "--impl", "1")
    assert out.strip() == "1"


def test_witness(capsys, files, mo2):
    from omlq.language import FiniteTable

    A = FiniteTable(mo2, ["s"], {"s": "x"})
    wpath = files["dir"] / "w.json"
    wpath.write_text(dumps(A.to_automaton().to_json()))
    code, out, _ = run(capsys, "witness", "--language", files["lang"], "--witness", str(wpath))
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "witness", "--language", files["lang"], "--witness", str(wpath), "--deterministic")
    assert out.strip() == "0"
    code, out, _ = run(capsys, "witness", "--language", files["lang"], "--witness", str(wpath),
                       "--commutative", "--commutator-cap", "20", "--format", "json")
    assert json.loads(out)["value"] == "1"


def test_to_regex_round_trip(capsys, files, mo2):
    out_path = str(files["dir"] / "k.json")
    code, _, _ = run(capsys, "to-regex", "--automaton", files["rand"], "--pivot-order", "lex", "-o", out_path)
    doc = json.load(open(out_path))
    assert {"text", "ast", "dag", "lattice"} <= set(doc)
    M = au.automaton_from_json(json.load(open(files["rand"])))
    k = rx.kleene_representation(M, "lex").regex
    words = [" ".join(w) for w in words_upto(M.alphabet, 3)]
    argv = ["regex-eval", "--regex", out_path]
    for w in words:
        argv += ["--word", w]
    code, out, _ = run(capsys, *argv)
    assert out.split("\n")[:-1] == [mo2.name_of(rx.regex_eval(k, w, mo2)) for w in words]
    assert rx.parse_regex(doc["text"], mo2) is k
    code, out, _ = run(capsys, "to-regex", "--automaton", files["rand"], "--pivot-order", "q9")
    assert code == 2


def test_regex_eval_text(capsys):
    code, out, _ = run(capsys, "regex-eval", "--regex", "<x>a.b*", "--lattice", "builtin:mo2",
                       "--word", "a b b", "--word", "b")
    assert out.split() == ["x", "0"]


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "logic-lemmas", "--lattice", "builtin:mo2",
                       "--samples", "20", "--format", "json")
    assert code == 0
    rows = [json.loads(l) for l in out.splitlines()]
    assert rows and all(r["passed"] for r in rows)


def test_verify_all_mo2(capsys):
    """The full run is deterministic and its only failures are the documented
    ones, so the exit status is 1."""
    argv = ["verify", "--suite", "all", "--lattice", "builtin:mo2", "--seed", "7", "--max-len", "5",
            "--samples", "100", "--format", "json"]
    code, out, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert out == out2
    failed = {json.loads(l)["check_id"] for l in out.splitlines() if not json.loads(l)["passed"]}
    assert failed <= KNOWN_MO2_FAILURES
    assert code == (1 if failed else 0)
