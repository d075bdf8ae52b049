"""Claims with provenance, and their text/JSON rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import QuadNum, frac_str

PROVENANCE = ("PAPER", "TRIVIAL", "DERIVED")


def render(x):
    """JSON-safe form: rationals as "p/q", tuples as lists."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, Fraction):
        return frac_str(x)
    if isinstance(x, int):
        return x
    if isinstance(x, QuadNum):
        return str(x)
    if isinstance(x, dict):
        return {str(k): render(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x, key=repr) if isinstance(x, (set, frozenset)) else x
        return [render(v) for v in items]
    if isinstance(x, float):
        return round(x, 6)
    return str(x)


def show(x) -> str:
    """Text form; rationals get a 6-place decimal alongside."""
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{frac_str(x)} ~ {float(x):.6f}"
    if isinstance(x, (tuple, list)) and not isinstance(x, str):
        return "(" + ", ".join(show(v) for v in x) + ")"
    return str(render(x)) if not isinstance(x, str) else x


@dataclass
class Claim:
    id: str
    expected: object
    computed: object
    provenance: str
    passed: bool | None = None
    note: str = ""

    def __post_init__(self):
        if self.provenance not in PROVENANCE:
            raise ValueError(f"unknown provenance {self.provenance}")
        if self.passed is None:
            self.passed = self.expected == self.computed

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "expected": render(self.expected),
            "computed": render(self.computed),
            "provenance": self.provenance,
            "pass": bool(self.passed),
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Report:
    command: str
    claims: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, *args, **kw) -> Claim:
        c = Claim(*args, **kw)
        self.claims.append(c)
        return c

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "data": render(self.data),
            "claims": [c.to_json() for c in self.claims],
            "pass": self.ok,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def text(self) -> str:
        lines = [f"# {self.command}"]
        for k, v in self.data.items():
            lines.append(f"{k}: {show(v)}")
        for c in self.claims:
            mark = "PASS" if c.passed else "FAIL"
            line = f"[{mark}] {c.id}: computed {show(c.computed)}, expected {show(c.expected)} [{c.provenance}]"
            if c.note:
                line += f"  ({c.note})"
            lines.append(line)
        return "\n".join(lines)
