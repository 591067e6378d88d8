from dataclasses import dataclass, field


@dataclass
class Check:
    """
    One named comparison. `gate` checks decide PASS/FAIL; the others are reportage.
    """
    name: str
    deviation: float
    tolerance: float
    gate: bool = True
    detail: str = ""

    @property
    def passed(self):
        return self.deviation <= self.tolerance

    def to_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "deviation": self.deviation,
            "tolerance": self.tolerance,
            "gate": self.gate,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    title: str
    checks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, name, deviation, tolerance, gate=True, detail=""):
        check = Check(name, float(deviation), float(tolerance), gate, detail)
        self.checks.append(check)
        return check

    def extend(self, other, prefix=""):
        for check in other.checks:
            self.checks.append(Check(prefix + check.name, check.deviation, check.tolerance, check.gate, check.detail))

    @property
    def passed(self):
        return all(c.passed for c in self.checks if c.gate)

    @property
    def max_deviation(self):
        return max((c.deviation for c in self.checks if c.gate), default=0.0)

    def failures(self):
        return [c for c in self.checks if c.gate and not c.passed]

    def to_dict(self):
        return {
            "title": self.title,
            "verdict": "PASS" if self.passed else "FAIL",
            "max_deviation": self.max_deviation,
            "checks": [c.to_dict() for c in self.checks],
            "data": self.data,
        }
