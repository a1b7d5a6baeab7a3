from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of one verification pass.

    ``violations`` make the check fail; ``findings`` are observations that
    are reported but never fail it.
    """

    name: str
    violations: list[str] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, message: str) -> None:
        self.violations.append(message)

    def note(self, message: str) -> None:
        self.findings.append(message)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status}  {self.name} ({self.checked} checked"
        if self.violations:
            line += f", {len(self.violations)} violations"
        return line + ")"
