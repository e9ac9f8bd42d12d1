"""Check records and reports.

A :class:`Verdict` is a truthy pass/fail value carrying the smallest
counterexample.  A :class:`Report` is an ordered bag of named
:class:`Check` records plus whatever tables the computation produced.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .anchors import anchor_for


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    witness: Any = None

    def __bool__(self):
        return self.ok

    @classmethod
    def passed(cls):
        return cls(True)

    @classmethod
    def failed(cls, reason, witness=None):
        return cls(False, reason, witness)


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    passed: bool
    witness: Any = None

    def to_json(self):
        return {
            "name": self.name,
            "anchor": self.anchor,
            "passed": self.passed,
            "witness": _jsonable(self.witness),
        }


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    tables: dict[str, Any] = field(default_factory=dict)

    def add(self, name, passed, witness=None, anchor=None):
        if isinstance(passed, Verdict):
            witness = passed.witness if witness is None else witness
            passed = passed.ok
        self.checks.append(Check(name, anchor or anchor_for(name), bool(passed), witness))
        return bool(passed)

    def extend(self, other: Report, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.anchor, c.passed, c.witness))
        for key, value in other.tables.items():
            self.tables.setdefault(prefix + key, value)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self, input_digest=""):
        records = sorted((c.to_json() for c in self.checks), key=lambda r: r["name"])
        n_failed = sum(1 for r in records if not r["passed"])
        return {
            "version": __version__,
            "title": self.title,
            "input_digest": input_digest,
            "records": records,
            "tables": _jsonable(self.tables),
            "summary": {
                "passed": n_failed == 0,
                "n_checks": len(records),
                "n_failed": n_failed,
            },
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        return sorted(_jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple, range)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return obj


def digest(payload) -> str:
    text = json.dumps(_jsonable(payload), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()
