"""Verification reports: one entry per check, renderable as text or JSON."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["CheckEntry", "Report"]


@dataclass
class CheckEntry:
    check_id: str
    label: str
    status: str  # "pass" or "fail"
    lhs: str | None = None
    rhs: str | None = None

    def to_json(self) -> dict:
        data = {"id": self.check_id, "label": self.label, "status": self.status}
        if self.lhs is not None:
            data["lhs"] = self.lhs
        if self.rhs is not None:
            data["rhs"] = self.rhs
        return data


@dataclass
class Report:
    suite: str
    bound: int | None = None
    entries: list = field(default_factory=list)

    def add(self, check_id: str, label: str, ok: bool,
            lhs: str | None = None, rhs: str | None = None) -> None:
        # failing entries must carry the two sides for diagnosis
        self.entries.append(CheckEntry(check_id, label,
                                       "pass" if ok else "fail", lhs, rhs))

    def extend(self, other: "Report") -> None:
        self.entries.extend(other.entries)

    @property
    def passed(self) -> int:
        return sum(1 for e in self.entries if e.status == "pass")

    @property
    def failed(self) -> int:
        return sum(1 for e in self.entries if e.status == "fail")

    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "bound": self.bound,
            "checks": [e.to_json() for e in self.entries],
            "passed": self.passed,
            "failed": self.failed,
        }

    def render_text(self) -> str:
        lines = []
        for e in self.entries:
            line = f"[{e.status.upper():4s}] {e.check_id}: {e.label}"
            if e.status == "fail" and e.lhs is not None:
                line += f"\n    lhs = {e.lhs}\n    rhs = {e.rhs}"
            lines.append(line)
        lines.append(f"suite {self.suite}: {self.passed} passed, {self.failed} failed")
        return "\n".join(lines)
