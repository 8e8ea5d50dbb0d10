"""Structured outcomes of inequality and identity checks."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class VerificationReport:
    """One checked inequality lhs <= rhs with an additive error budget.

    The check passes when lhs <= rhs + budget and is flagged tight when
    lhs > rhs - budget, i.e. when the margin is not resolved by the budget.
    Equality checks are encoded as lhs = |difference| against rhs = 0.
    """

    name: str
    lhs: float
    rhs: float
    budget: float
    passed: bool
    tight: bool
    params: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "budget": self.budget,
            "pass": self.passed,
            "tight": self.tight,
            "params": self.params,
        }


def make_report(name: str, lhs: float, rhs: float, budget: float,
                params: dict | None = None) -> VerificationReport:
    return VerificationReport(
        name=name,
        lhs=lhs,
        rhs=rhs,
        budget=budget,
        passed=lhs <= rhs + budget,
        tight=lhs > rhs - budget,
        params=params or {},
    )
