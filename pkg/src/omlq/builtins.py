"""Named lattices: two-element and power-set Boolean algebras, MO2, the
Chinese lantern, the benzene ring O6 and the product 2^4 x MO2."""

from __future__ import annotations

import functools
import itertools
import string

from .errors import UnknownBuiltin
from .lattice import OrthoLattice, product_lattice, validate_lattice

BUILTIN_NAMES = ("bool2", "boolN:<k>", "mo2", "chinese_lantern", "o6", "free2")
MAX_BOOL_ATOMS = 8


def _mo2_shape(name, zero, atoms, one, aliases=None):
    a, ac, b, bc = atoms
    leq = [[zero, x] for x in atoms] + [[x, one] for x in atoms]
    ortho = {zero: one, one: zero, a: ac, ac: a, b: bc, bc: b}
    return validate_lattice(name, [zero, a, ac, b, bc, one], leq, ortho, aliases)


def boolean_algebra(k: int) -> OrthoLattice:
    """Power set of k atoms named a, b, c, ...; subsets named by their atoms."""
    if not 0 <= k <= MAX_BOOL_ATOMS:
        raise UnknownBuiltin(f"boolN:{k} out of supported range 0..{MAX_BOOL_ATOMS}")
    atoms = string.ascii_lowercase[:k]
    subsets = [c for r in range(k + 1) for c in itertools.combinations(atoms, r)]

    def nm(s):
        if not s:
            return "0"
        if len(s) == k:
            return "1"
        return "".join(s)

    names = [nm(s) for s in subsets]
    leq = [[nm(s), nm(t)] for s in subsets for t in subsets if set(s) <= set(t)]
    ortho = {nm(s): nm(tuple(x for x in atoms if x not in s)) for s in subsets}
    return validate_lattice(f"boolN:{k}" if k != 1 else "bool2", names, leq, ortho)


@functools.lru_cache(maxsize=None)
def builtin(name: str) -> OrthoLattice:
    if name == "bool2":
        return boolean_algebra(1)
    if name.startswith("boolN:"):
        try:
            k = int(name.split(":", 1)[1])
        except ValueError:
            raise UnknownBuiltin(f"bad atom count in {name!r}") from None
        return boolean_algebra(k)
    if name == "mo2":
        return _mo2_shape("mo2", "0", ["x", "x'", "y", "y'"], "1", {"x′": "x'", "y′": "y'"})
    if name == "chinese_lantern":
        aliases = {"p−": "p-", "p̄−": "pbar-", "p̄+": "pbar+"}
        return _mo2_shape("chinese_lantern", "0", ["p-", "p+", "pbar-", "pbar+"], "1", aliases)
    if name == "o6":
        names = ["0", "a", "b", "b'", "a'", "1"]
        leq = [["0", "a"], ["a", "b"], ["b", "1"], ["0", "b'"], ["b'", "a'"], ["a'", "1"]]
        ortho = {"0": "1", "1": "0", "a": "a'", "a'": "a", "b": "b'", "b'": "b"}
        return validate_lattice("o6", names, leq, ortho)
    if name == "free2":
        return product_lattice(builtin("boolN:4"), builtin("mo2"), name="free2")
    raise UnknownBuiltin(f"unknown builtin lattice {name!r}; known: {', '.join(BUILTIN_NAMES)}")


def resolve_lattice(ref) -> OrthoLattice:
    """Accept an OrthoLattice, ``builtin:<name>``, a bare builtin name, a JSON
    document (dict) or a path to a JSON file."""
    import json
    import os

    from .lattice import lattice_from_json

    if isinstance(ref, OrthoLattice):
        return ref
    if isinstance(ref, dict):
        return lattice_from_json(ref)
    ref = str(ref)
    if ref.startswith("builtin:"):
        return builtin(ref[len("builtin:"):])
    if os.path.exists(ref):
        with open(ref, encoding="utf-8") as fh:
            return lattice_from_json(json.load(fh))
    return builtin(ref)
