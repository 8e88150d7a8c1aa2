"""Check reports and the per-word aggregation used by every check."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

from ..lattice import OrthoLattice

RELATIONS = ("<=", "=", "gap-strict")


def relation_holds(L: OrthoLattice, relation: str, lhs: int, rhs: int) -> bool:
    if relation == "<=":
        return L.leq(lhs, rhs)
    if relation == "=":
        return lhs == rhs
    if relation == "gap-strict":
        return L.lt(lhs, rhs)
    raise ValueError(f"unknown relation {relation!r}")


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    index: int
    instance: str
    lattice: str
    lhs: str
    rhs: str
    relation: str
    passed: bool
    witness: Optional[str] = None
    notes: tuple = field(default=())

    def to_json(self) -> dict:
        d = asdict(self)
        d["notes"] = list(self.notes)
        return d

    def sort_key(self):
        return (self.check_id, self.index)


def make_report(L, check_id, index, instance, lhs, rhs, relation, witness=None, notes=()) -> CheckReport:
    return CheckReport(
        check_id=check_id,
        index=index,
        instance=instance,
        lattice=L.name,
        lhs=L.name_of(lhs),
        rhs=L.name_of(rhs),
        relation=relation,
        passed=relation_holds(L, relation, lhs, rhs),
        witness=witness,
        notes=tuple(notes),
    )


def word_text(word) -> str:
    return " ".join(word) if word else '""'


class Tally:
    """Collects (word, lhs, rhs) triples for one check on one instance.

    The reported word is the first failing one, else (for ≤) the first word
    where the inequality is strict, else the last word seen."""

    def __init__(self, L: OrthoLattice, check_id: str, index: int, instance: str, relation: str):
        self.L, self.check_id, self.index = L, check_id, index
        self.instance, self.relation = instance, relation
        self.fail = self.strict = self.last = None
        self.count = 0

    def add(self, word, lhs: int, rhs: int) -> None:
        self.count += 1
        item = (tuple(word), lhs, rhs)
        self.last = item
        if self.fail is None and not relation_holds(self.L, self.relation, lhs, rhs):
            self.fail = item
        elif self.strict is None and self.relation == "<=" and lhs != rhs:
            self.strict = item

    def report(self) -> CheckReport:
        pick = self.fail or self.strict or self.last
        if pick is None:
            raise ValueError(f"no observations recorded for {self.check_id}")
        word, lhs, rhs = pick
        return make_report(
            self.L, self.check_id, self.index, self.instance, lhs, rhs, self.relation,
            witness=word_text(word), notes=(f"{self.count} words",),
        )


def summary_table(reports) -> str:
    rows = [("check", "#", "lattice", "lhs", "rel", "rhs", "ok", "witness")]
    for r in reports:
        rows.append((r.check_id, str(r.index), r.lattice, r.lhs, r.relation, r.rhs,
                     "pass" if r.passed else "FAIL", r.witness or ""))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    failed = sum(not r.passed for r in reports)
    lines.append(f"{len(reports)} reports, {failed} failed")
    return "\n".join(lines) + "\n"
