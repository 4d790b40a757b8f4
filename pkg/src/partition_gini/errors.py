"""Exception types shared across the package."""


class PartitionError(ValueError):
    """Input is not a valid integer partition."""


class WeightMismatch(ValueError):
    """Two partitions that must share a weight do not."""


class BudgetExceeded(RuntimeError):
    """A size guard refused to start a computation."""

    def __init__(self, budget_name: str, needed: int, budget: int):
        self.budget_name = budget_name
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"{budget_name} exceeded: need {needed}, budget is {budget}"
        )
