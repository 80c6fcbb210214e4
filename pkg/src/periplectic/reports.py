"""Check/report records shared by the verifiers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass
class Check:
    name: str
    status: str
    details: dict = field(default_factory=dict)

    @classmethod
    def of(cls, name: str, ok: bool, **details) -> Check:
        return cls(name, PASS if ok else FAIL, details)

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "details": _plain(self.details)}


@dataclass
class Report:
    suite: str
    n: int
    p: int
    checks: list[Check] = field(default_factory=list)
    timing: dict | None = None
    extra: dict = field(default_factory=dict)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    @property
    def status(self) -> str:
        states = {c.status for c in self.checks}
        if FAIL in states:
            return FAIL
        if INCONCLUSIVE in states:
            return INCONCLUSIVE
        return PASS

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "params": {"n": self.n, "p": self.p},
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.name)],
            "timing": self.timing,
        }
        out.update(_plain(self.extra))
        return out


def _plain(x):
    """Make report details JSON-friendly (tuples to lists, numpy to int)."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_plain(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    if hasattr(x, "item") and not isinstance(x, (str, bytes)):
        return x.item()
    return x
