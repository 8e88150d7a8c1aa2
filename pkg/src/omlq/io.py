"""JSON documents for lattices, languages, automata and homomorphisms."""

from __future__ import annotations

import json
from typing import Any, Mapping

from .errors import ParseError
from .lattice import OrthoLattice


def lattice_ref_for(L: OrthoLattice) -> Any:
    """``builtin:<name>`` when L is a builtin, else the full lattice document."""
    from .builtins import builtin
    from .errors import UnknownBuiltin

    try:
        if builtin(L.name) == L:
            return f"builtin:{L.name}"
    except UnknownBuiltin:
        pass
    return L.to_json()


def read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from None
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2, sort_keys=False) + "\n"


def load_lattice(ref) -> OrthoLattice:
    from .builtins import resolve_lattice

    return resolve_lattice(ref)


def load_automaton(path_or_doc, lattice: OrthoLattice | None = None):
    from .automata import automaton_from_json

    doc = read_json(path_or_doc) if isinstance(path_or_doc, str) else path_or_doc
    return automaton_from_json(doc, lattice)


def load_language(path_or_doc, lattice: OrthoLattice | None = None):
    from .language import language_from_json

    doc = read_json(path_or_doc) if isinstance(path_or_doc, str) else path_or_doc
    return language_from_json(doc, lattice)


def load_hom(path_or_doc) -> dict[str, tuple[str, ...]]:
    """A homomorphism document maps each symbol to a list of symbols."""
    doc = read_json(path_or_doc) if isinstance(path_or_doc, str) else path_or_doc
    if not isinstance(doc, Mapping):
        raise ParseError("homomorphism document must be an object of symbol -> [symbols]")
    out = {}
    for a, img in doc.items():
        if isinstance(img, str):
            img = img.split()
        if not isinstance(img, list) or not all(isinstance(b, str) for b in img):
            raise ParseError(f"image of {a!r} must be a list of symbol names")
        out[str(a)] = tuple(img)
    return out
