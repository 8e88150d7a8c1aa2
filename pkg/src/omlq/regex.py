"""Lattice-valued regular expressions as hash-consed DAGs.

Nodes are interned: building the same node twice returns the same object, so
the Kleene representation of an n-state automaton has O(n^3) distinct nodes
even though its unfolded tree is exponential.  Evaluation is defined on the
unfolded tree and memoised per (node, substring), so sharing is invisible.

Text syntax: ``%0`` empty language, ``@`` empty word, bare names are
symbols, ``<elem>`` prefixes a scalar, ``+`` union, ``.`` or juxtaposition
concatenation, postfix ``*`` star, parentheses.  Precedence: ``*`` over
scalar prefix over ``.`` over ``+``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import AlphabetMismatch, HasEpsilonMoves, ParseError
from .lattice import OrthoLattice

EMPTY_OP, EPS_OP, SYM_OP, SCALAR_OP, UNION_OP, CONCAT_OP, STAR_OP = (
    "empty", "eps", "sym", "scalar", "union", "concat", "star",
)


class Regex:
    __slots__ = ("op", "left", "right", "symbol", "value", "uid")

    _table: dict = {}
    _ids = itertools.count()

    def __new__(cls, op, left=None, right=None, symbol=None, value=None):
        key = (
            op,
            left.uid if left is not None else -1,
            right.uid if right is not None else -1,
            symbol,
            value,
        )
        node = cls._table.get(key)
        if node is None:
            node = object.__new__(cls)
            node.op, node.left, node.right = op, left, right
            node.symbol, node.value = symbol, value
            node.uid = next(cls._ids)
            cls._table[key] = node
        return node

    def __repr__(self):
        return f"Regex({to_text(self)})"

    def children(self):
        return tuple(c for c in (self.left, self.right) if c is not None)


EMPTY = Regex(EMPTY_OP)
EPS = Regex(EPS_OP)


def sym(a: str) -> Regex:
    return Regex(SYM_OP, symbol=str(a))


def scalar(value: int, r: Regex) -> Regex:
    return Regex(SCALAR_OP, r, value=int(value))


def union(a: Regex, b: Regex) -> Regex:
    return Regex(UNION_OP, a, b)


def concat(a: Regex, b: Regex) -> Regex:
    return Regex(CONCAT_OP, a, b)


def star(a: Regex) -> Regex:
    return Regex(STAR_OP, a)


# value-preserving simplifying constructors (used by the Kleene construction)


def s_union(a: Regex, b: Regex) -> Regex:
    if a is EMPTY:
        return b
    if b is EMPTY or a is b:
        return a
    return union(a, b)


def s_concat(a: Regex, b: Regex) -> Regex:
    if a is EMPTY or b is EMPTY:
        return EMPTY
    if a is EPS:
        return b
    if b is EPS:
        return a
    return concat(a, b)


def s_scalar(L: OrthoLattice, value: int, r: Regex) -> Regex:
    if value == L.zero or r is EMPTY:
        return EMPTY
    if value == L.one:
        return r
    return scalar(value, r)


def s_star(a: Regex) -> Regex:
    if a is EMPTY or a is EPS:
        return EPS
    return star(a)


def unique_nodes(r: Regex) -> list[Regex]:
    """Distinct nodes reachable from r, children before parents."""
    seen, out, stack = set(), [], [(r, False)]
    while stack:
        node, done = stack.pop()
        if done:
            out.append(node)
            continue
        if node.uid in seen:
            continue
        seen.add(node.uid)
        stack.append((node, True))
        stack.extend((c, False) for c in node.children())
    return out


def symbols_of(r: Regex) -> set[str]:
    return {n.symbol for n in unique_nodes(r) if n.op == SYM_OP}


# ------------------------------------------------------------------ semantics


def regex_eval(r: Regex, word, L: OrthoLattice, alphabet: Sequence[str] | None = None) -> int:
    """Membership degree of the word in L(r)."""
    from .automata import as_word

    w = as_word(word)
    if alphabet is not None:
        bad = [a for a in w if a not in alphabet]
        if bad:
            raise AlphabetMismatch(f"symbol {bad[0]!r} not in alphabet")
    return _Evaluator(L, w).value(r, 0, len(w))


class _Evaluator:
    def __init__(self, L: OrthoLattice, w: tuple):
        self.L, self.w, self.memo, self.star_memo = L, w, {}, {}

    def value(self, r: Regex, i: int, j: int) -> int:
        key = (r.uid, i, j)
        v = self.memo.get(key)
        if v is None:
            v = self._compute(r, i, j)
            self.memo[key] = v
        return v

    def _compute(self, r, i, j):
        L = self.L
        op = r.op
        if op == EMPTY_OP:
            return L.zero
        if op == EPS_OP:
            return L.one if i == j else L.zero
        if op == SYM_OP:
            return L.one if j == i + 1 and self.w[i] == r.symbol else L.zero
        if op == SCALAR_OP:
            return L.meet(r.value, self.value(r.left, i, j))
        if op == UNION_OP:
            return L.join(self.value(r.left, i, j), self.value(r.right, i, j))
        if op == CONCAT_OP:
            acc = L.zero
            for k in range(i, j + 1):
                a = self.value(r.left, i, k)
                if a != L.zero:
                    acc = L.join(acc, L.meet(a, self.value(r.right, k, j)))
            return acc
        if op == STAR_OP:
            # compositions into non-empty factors; value 1 on the empty word
            if i == j:
                return L.one
            acc = L.zero
            for k in range(i + 1, j + 1):
                a = self.value(r.left, i, k)
                if a != L.zero:
                    acc = L.join(acc, L.meet(a, self.value(r, k, j)))
            return acc
        raise ParseError(f"unknown regex node {op!r}")


def lambda_set(r: Regex) -> list[int]:
    """Scalars occurring in r."""
    return sorted({n.value for n in unique_nodes(r) if n.op == SCALAR_OP})


def delta_gamma(r: Regex, L: OrthoLattice, cap: int | None = None) -> int:
    return L.commutator(lambda_set(r), cap)


def regex_hom(h: Mapping[str, Sequence[str]], r: Regex) -> Regex:
    """Replace every symbol σ by the concatenation of the symbols of h(σ)."""
    memo: dict[int, Regex] = {}
    for n in unique_nodes(r):
        if n.op == SYM_OP:
            if n.symbol not in h:
                raise AlphabetMismatch(f"h is not defined on {n.symbol!r}")
            img = [sym(a) for a in h[n.symbol]]
            out = EPS
            if img:
                out = img[0]
                for x in img[1:]:
                    out = concat(out, x)
        elif n.op in (EMPTY_OP, EPS_OP):
            out = n
        elif n.op == SCALAR_OP:
            out = scalar(n.value, memo[n.left.uid])
        elif n.op == STAR_OP:
            out = star(memo[n.left.uid])
        else:
            out = Regex(n.op, memo[n.left.uid], memo[n.right.uid])
        memo[n.uid] = out
    return memo[r.uid]


# ------------------------------------------------------------------ Kleene representation


@dataclass(frozen=True)
class KleeneRep:
    regex: Regex
    pivot_order: tuple[str, ...]
    base: dict  # (u, v) -> α_uv over the empty pivot set
    full: dict  # (u, v) -> α_uv over all states


def resolve_pivot_order(states: Sequence[str], spec="decl") -> tuple[str, ...]:
    if spec is None or spec == "decl":
        return tuple(states)
    if spec == "lex":
        return tuple(sorted(states))
    order = tuple(spec.split(",")) if isinstance(spec, str) else tuple(spec)
    order = tuple(s.strip() for s in order)
    if sorted(order) != sorted(states):
        raise ParseError(f"pivot order {order} is not a permutation of the states {tuple(states)}")
    return order


def kleene_representation(M, pivot_order="decl") -> KleeneRep:
    """Build k(M) = Σ_{u,v} (I(u) ∧ T(v)) α_uv^Q by adding pivots one at a time.

    α_uv^∅ = Σ_σ δ(u,σ,v) σ (plus ε when u = v) and
    α_uv^{X∪{q}} = α_uv^X + α_uq^X · (α_qq^X)* · α_qv^X.
    """
    if M.has_eps:
        raise HasEpsilonMoves("the Kleene representation is built for automata without ε-moves")
    L = M.lattice
    order = resolve_pivot_order(M.states, pivot_order)
    n = M.n
    alpha = [[EMPTY] * n for _ in range(n)]
    for u in range(n):
        for v in range(n):
            acc = EPS if u == v else EMPTY
            for ai, a in enumerate(M.alphabet):
                acc = s_union(acc, s_scalar(L, M.delta[ai][u][v], sym(a)))
            alpha[u][v] = acc
    base = {(M.states[u], M.states[v]): alpha[u][v] for u in range(n) for v in range(n)}
    for qn in order:
        q = M.sidx[qn]
        loop = s_star(alpha[q][q])
        alpha = [
            [
                s_union(alpha[u][v], s_concat(s_concat(alpha[u][q], loop), alpha[q][v]))
                for v in range(n)
            ]
            for u in range(n)
        ]
    full = {(M.states[u], M.states[v]): alpha[u][v] for u in range(n) for v in range(n)}
    k = EMPTY
    for u in range(n):
        for v in range(n):
            k = s_union(k, s_scalar(L, L.meet(M.I[u], M.T[v]), alpha[u][v]))
    return KleeneRep(k, order, base, full)


# ------------------------------------------------------------------ text syntax

_TOKEN = re.compile(r"\s*(?:(%0)|(@)|<([^>]*)>|([+.*()])|([^\s+.*()<>@%]+))")
_PREC = {UNION_OP: 0, CONCAT_OP: 1, SCALAR_OP: 2, STAR_OP: 3}


def to_text(r: Regex, L: OrthoLattice | None = None) -> str:
    memo: dict[tuple[int, int], str] = {}

    def name(v):
        return L.name_of(v) if L is not None else str(v)

    def go(node, min_prec):
        key = (node.uid, min_prec)
        if key in memo:
            return memo[key]
        op = node.op
        if op == EMPTY_OP:
            s = "%0"
        elif op == EPS_OP:
            s = "@"
        elif op == SYM_OP:
            s = node.symbol
        elif op == UNION_OP:
            s = f"{go(node.left, 0)} + {go(node.right, 1)}"
        elif op == CONCAT_OP:
            s = f"{go(node.left, 1)}.{go(node.right, 2)}"
        elif op == SCALAR_OP:
            s = f"<{name(node.value)}>{go(node.left, 2)}"
        else:
            s = f"{go(node.left, 3)}*"
        if _PREC.get(op, 4) < min_prec:
            s = f"({s})"
        memo[key] = s
        return s

    return go(r, 0)


def parse_regex(text: str, L: OrthoLattice) -> Regex:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at offset {pos} in regex {text!r}")
        pos = m.end()
        empty, eps, elem, punct, name = m.groups()
        if empty:
            tokens.append(("empty", None, m.start()))
        elif eps:
            tokens.append(("eps", None, m.start()))
        elif elem is not None:
            tokens.append(("scalar", elem.strip(), m.start()))
        elif punct:
            tokens.append((punct, None, m.start()))
        else:
            tokens.append(("name", name, m.start()))
    return _Parser(tokens, L, text).parse()


class _Parser:
    def __init__(self, tokens, L, text):
        self.t, self.i, self.L, self.text = tokens, 0, L, text

    def peek(self):
        return self.t[self.i][0] if self.i < len(self.t) else None

    def fail(self, msg):
        at = self.t[self.i][2] if self.i < len(self.t) else len(self.text)
        raise ParseError(f"{msg} at offset {at} in regex {self.text!r}")

    def parse(self):
        if not self.t:
            self.fail("empty regex")
        r = self.union()
        if self.i != len(self.t):
            self.fail("unexpected token")
        return r

    def union(self):
        r = self.concat()
        while self.peek() == "+":
            self.i += 1
            r = union(r, self.concat())
        return r

    def concat(self):
        r = self.factor()
        while True:
            if self.peek() == ".":
                self.i += 1
                r = concat(r, self.factor())
            elif self.peek() in ("name", "(", "scalar", "eps", "empty"):
                r = concat(r, self.factor())
            else:
                return r

    def factor(self):
        if self.peek() == "scalar":
            v = self.L.elem(self.t[self.i][1])
            self.i += 1
            return scalar(v, self.factor())
        r = self.atom()
        while self.peek() == "*":
            self.i += 1
            r = star(r)
        return r

    def atom(self):
        kind = self.peek()
        if kind == "(":
            self.i += 1
            r = self.union()
            if self.peek() != ")":
                self.fail("missing ')'")
            self.i += 1
            return r
        if kind == "name":
            r = sym(self.t[self.i][1])
        elif kind == "eps":
            r = EPS
        elif kind == "empty":
            r = EMPTY
        else:
            self.fail("expected a symbol, '@', '%0', '<elem>' or '('")
        self.i += 1
        return r


# ------------------------------------------------------------------ JSON forms


def to_ast(r: Regex, L: OrthoLattice) -> dict:
    op = r.op
    if op in (EMPTY_OP, EPS_OP):
        return {"op": op}
    if op == SYM_OP:
        return {"op": op, "symbol": r.symbol}
    if op == SCALAR_OP:
        return {"op": op, "value": L.name_of(r.value), "arg": to_ast(r.left, L)}
    if op == STAR_OP:
        return {"op": op, "arg": to_ast(r.left, L)}
    return {"op": op, "left": to_ast(r.left, L), "right": to_ast(r.right, L)}


def to_dag(r: Regex, L: OrthoLattice) -> dict:
    """Shared-node JSON form: a node list (children first) and a root index."""
    nodes = unique_nodes(r)
    pos = {n.uid: i for i, n in enumerate(nodes)}
    out = []
    for n in nodes:
        d = {"op": n.op}
        if n.op == SYM_OP:
            d["symbol"] = n.symbol
        if n.op == SCALAR_OP:
            d["value"] = L.name_of(n.value)
        if n.op in (SCALAR_OP, STAR_OP):
            d["arg"] = pos[n.left.uid]
        if n.op in (UNION_OP, CONCAT_OP):
            d["left"], d["right"] = pos[n.left.uid], pos[n.right.uid]
        out.append(d)
    return {"nodes": out, "root": pos[r.uid]}


def from_json(doc, L: OrthoLattice) -> Regex:
    """Read either the nested AST form or the shared-node form."""
    try:
        if isinstance(doc, Mapping) and "nodes" in doc:
            built: list[Regex] = []
            for d in doc["nodes"]:
                built.append(_node_from(d, L, lambda k: built[k]))
            return built[doc["root"]]
        return _node_from(doc, L, lambda sub: from_json(sub, L))
    except (KeyError, IndexError, TypeError) as e:
        raise ParseError(f"malformed regex JSON: {e!r}") from None


def _node_from(d, L, child):
    op = d["op"]
    if op == EMPTY_OP:
        return EMPTY
    if op == EPS_OP:
        return EPS
    if op == SYM_OP:
        return sym(d["symbol"])
    if op == SCALAR_OP:
        return scalar(L.elem(d["value"]), child(d["arg"]))
    if op == STAR_OP:
        return star(child(d["arg"]))
    if op in (UNION_OP, CONCAT_OP):
        return Regex(op, child(d["left"]), child(d["right"]))
    raise ParseError(f"unknown regex op {op!r}")
