"""Structured pass/fail records shared by all verification suites."""


class Check:
    __slots__ = ("name", "passed", "witness")

    def __init__(self, name, passed, witness=None):
        self.name = name
        self.passed = bool(passed)
        self.witness = witness

    def to_json(self):
        out = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class VerificationReport:
    """Ordered list of named checks with optional failure witnesses."""

    def __init__(self, suite):
        self.suite = suite
        self.checks = []

    def add(self, name, passed, witness=None):
        self.checks.append(Check(name, passed, witness))
        return self

    def extend(self, other):
        self.checks.extend(other.checks)
        return self

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_json(self):
        return {"schema": "qplane/1", "suite": self.suite,
                "passed": self.ok,
                "checks": [c.to_json() for c in self.checks]}

    def lines(self):
        out = []
        for c in self.checks:
            line = "%s %s" % ("PASS" if c.passed else "FAIL", c.name)
            if not c.passed and c.witness:
                line += "  [witness: %s]" % c.witness
            out.append(line)
        return out

    def __repr__(self):
        return "VerificationReport(%s: %d/%d passed)" % (
            self.suite, sum(c.passed for c in self.checks), len(self.checks))
