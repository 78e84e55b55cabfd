from dataclasses import dataclass, field
from typing import List, Optional

PASS = "pass"
FAIL = "fail"


@dataclass(frozen=True)
class Check:
    statement_id: str
    citation: str
    status: str
    witness: Optional[str] = None

    @property
    def passed(self):
        return self.status == PASS

    def to_structured(self):
        record = {"statement-id": self.statement_id, "citation": self.citation, "status": self.status}
        if self.witness is not None:
            record["witness"] = self.witness
        return record


@dataclass
class VerificationReport:
    name: str
    checks: List[Check] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    def record(self, statement_id, citation, ok, witness=None):
        self.checks.append(Check(statement_id, citation, PASS if ok else FAIL, None if ok else witness))
        return ok

    def expect_equal(self, statement_id, citation, lhs, rhs):
        """Record lhs == rhs; on failure the witness is the rendered difference."""
        diff = lhs - rhs
        ok = _all_zero(diff)
        return self.record(statement_id, citation, ok, witness=None if ok else f"lhs - rhs = {_render(diff)}")

    def expect_zero(self, statement_id, citation, value):
        ok = _all_zero(value)
        return self.record(statement_id, citation, ok, witness=None if ok else f"nonzero: {_render(value)}")

    def extend(self, other, prefix=None):
        for check in other.checks:
            sid = f"{prefix}.{check.statement_id}" if prefix else check.statement_id
            self.checks.append(Check(sid, check.citation, check.status, check.witness))
        self.notes.extend(other.notes)
        return self

    def to_structured(self):
        doc = {
            "report": self.name,
            "status": PASS if self.passed else FAIL,
            "total": len(self.checks),
            "failed": len(self.failures),
            "checks": [check.to_structured() for check in self.checks],
        }
        if self.notes:
            doc["notes"] = list(self.notes)
        return doc

    def summary(self, verbose=False):
        lines = [f"{self.name}: {len(self.checks) - len(self.failures)}/{len(self.checks)} checks passed"]
        for check in self.checks:
            if verbose or not check.passed:
                line = f"  [{check.status.upper()}] {check.statement_id}: {check.citation}"
                if check.witness:
                    line += f"\n      {check.witness}"
                lines.append(line)
        lines.extend(f"  note: {note}" for note in self.notes)
        return "\n".join(lines)


def _all_zero(value):
    if hasattr(value, "shape"):
        return all(entry == 0 for entry in value.flat)
    return not value


def _render(value):
    text = str(value)
    if len(text) > 400:
        text = text[:400] + " ..."
    return text
