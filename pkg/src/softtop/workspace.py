"""JSON workspace files: a context plus named soft sets and named topologies.

Shape::

    {"universe": ["h1", "h2", "h3"],
     "parameters": ["e1", "e2"],
     "sets": {"F1": {"e1": ["h2"], "e2": ["h1"]}},
     "topologies": {"tau": ["NULL", "ABS", "F1"]}}

``NULL`` and ``ABS`` always name the null and absolute soft sets.  Rows left
out of a set are empty.  An optional top-level ``"note"`` string is carried
through untouched.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable

from .softset import Context, SoftSet, SoftSetError, UnknownLabel
from .topology import SoftTopology

RESERVED = ("NULL", "ABS")
KEYS = {"universe", "parameters", "sets", "topologies", "note"}


class ParseError(SoftSetError, ValueError):
    pass


class DuplicateName(SoftSetError, ValueError):
    pass


def _no_duplicate_keys(pairs: list[tuple[str, Any]]) -> dict:
    out = {}
    for k, v in pairs:
        if k in out:
            raise DuplicateName(f"duplicate key {k!r}")
        out[k] = v
    return out


def _labels(value: Any, where: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise ParseError(f"{where}: expected a list of strings")
    return value


@dataclass
class Workspace:
    context: Context
    named_sets: dict[str, SoftSet] = field(default_factory=dict)
    named_topologies: dict[str, list[str]] = field(default_factory=dict)
    note: str | None = None

    def soft_set(self, name: str) -> SoftSet:
        if name == "NULL":
            return SoftSet(self.context, 0)
        if name == "ABS":
            return SoftSet(self.context, self.context.full)
        try:
            return self.named_sets[name]
        except KeyError:
            raise UnknownLabel(f"unknown soft set {name!r}") from None

    def family(self, name: str) -> list[SoftSet]:
        try:
            names = self.named_topologies[name]
        except KeyError:
            raise UnknownLabel(f"unknown topology {name!r}") from None
        return [self.soft_set(s) for s in names]

    def topology(self, name: str) -> SoftTopology:
        """The named family, validated (raises :class:`InvalidTopology`)."""
        return SoftTopology.from_family(self.context, self.family(name), name)

    def name_of(self, F: SoftSet) -> str | None:
        """First-declared name of a soft set equal to ``F``."""
        if F.bits == 0:
            return "NULL"
        if F.bits == self.context.full:
            return "ABS"
        for name, G in self.named_sets.items():
            if G.bits == F.bits:
                return name
        return None

    def to_dict(self) -> dict:
        doc: dict[str, Any] = {}
        if self.note is not None:
            doc["note"] = self.note
        doc["universe"] = list(self.context.universe)
        doc["parameters"] = list(self.context.parameters)
        doc["sets"] = {name: {e: list(xs) for e, xs in F.rows().items()} for name, F in self.named_sets.items()}
        doc["topologies"] = {name: list(names) for name, names in self.named_topologies.items()}
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")


def from_dict(doc: Any) -> Workspace:
    if not isinstance(doc, dict):
        raise ParseError("top level: expected a JSON object")
    extra = set(doc) - KEYS
    if extra:
        raise ParseError(f"top level: unexpected keys {sorted(extra)}")
    for key in ("universe", "parameters"):
        if key not in doc:
            raise ParseError(f"top level: missing {key!r}")
    try:
        ctx = Context(_labels(doc["universe"], "universe"), _labels(doc["parameters"], "parameters"))
    except ValueError as exc:
        raise ParseError(f"context: {exc}") from None

    sets_doc = doc.get("sets", {})
    if not isinstance(sets_doc, dict):
        raise ParseError("sets: expected an object")
    named: dict[str, SoftSet] = {}
    for name, rows in sets_doc.items():
        if name in RESERVED:
            raise DuplicateName(f"sets.{name}: {name} is reserved")
        if not isinstance(rows, dict):
            raise ParseError(f"sets.{name}: expected an object of parameter rows")
        for e, xs in rows.items():
            _labels(xs, f"sets.{name}.{e}")
        try:
            named[name] = SoftSet.from_rows(ctx, rows)
        except UnknownLabel as exc:
            raise UnknownLabel(f"sets.{name}: {exc}") from None

    tops_doc = doc.get("topologies", {})
    if not isinstance(tops_doc, dict):
        raise ParseError("topologies: expected an object")
    tops: dict[str, list[str]] = {}
    for name, members in tops_doc.items():
        members = _labels(members, f"topologies.{name}")
        for s in members:
            if s not in named and s not in RESERVED:
                raise UnknownLabel(f"topologies.{name}: unknown soft set {s!r}")
        tops[name] = list(members)

    note = doc.get("note")
    if note is not None and not isinstance(note, str):
        raise ParseError("note: expected a string")
    return Workspace(ctx, named, tops, note)


def loads(text: str) -> Workspace:
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_dict(doc)


def load(path: str | Path) -> Workspace:
    return loads(Path(path).read_text(encoding="utf-8"))


def name_sets(ws: Workspace, sets: Iterable[SoftSet], prefix: str = "H") -> dict[int, str]:
    """Names for ``sets``: existing names where known, else ``H1, H2, ...`` in canonical order."""
    names: dict[int, str] = {}
    counter = 0
    taken = set(ws.named_sets) | set(RESERVED)
    for F in sorted(sets, key=lambda s: s.bits):
        if F.bits in names:
            continue
        known = ws.name_of(F)
        if known is None:
            counter += 1
            while f"{prefix}{counter}" in taken:
                counter += 1
            known = f"{prefix}{counter}"
        names[F.bits] = known
    return names
