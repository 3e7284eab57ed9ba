"""Structured pass/fail reports shared by all checkers."""

import json
from dataclasses import dataclass, field


@dataclass
class CheckItem:
    check_id: str
    status: str  # "pass" | "fail" | "skipped"
    witness: str | None = None

    @property
    def ok(self):
        return self.status != "fail"


@dataclass
class Report:
    subject: str
    items: list = field(default_factory=list)

    def add(self, check_id, ok, witness=None):
        status = "pass" if ok else "fail"
        self.items.append(CheckItem(check_id, status, None if ok else witness))
        return ok

    def skip(self, check_id, reason=None):
        self.items.append(CheckItem(check_id, "skipped", reason))

    def extend(self, other):
        self.items.extend(other.items)

    @property
    def ok(self):
        return all(item.ok for item in self.items)

    @property
    def failures(self):
        return [item for item in self.items if not item.ok]

    def to_dict(self):
        return {
            "subject": self.subject,
            "ok": self.ok,
            "items": [
                {"check_id": i.check_id, "status": i.status, "witness": i.witness}
                for i in sorted(self.items, key=lambda i: i.check_id)
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self):
        lines = [f"{self.subject}: {'OK' if self.ok else 'FAILED'}"]
        for item in self.failures:
            lines.append(f"  FAIL {item.check_id}" + (f": {item.witness}" if item.witness else ""))
        for item in self.items:
            if item.status == "skipped":
                lines.append(f"  SKIP {item.check_id}" + (f": {item.witness}" if item.witness else ""))
        n_pass = sum(1 for i in self.items if i.status == "pass")
        lines.append(f"  {n_pass}/{len(self.items)} checks passed")
        return "\n".join(lines)
