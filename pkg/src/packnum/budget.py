"""Search-node budgets shared by the exact solvers."""

from __future__ import annotations


class BudgetExceeded(RuntimeError):
    """A solver used up its node budget before reaching an exact answer."""

    def __init__(self, limit: int, what: str = "search"):
        self.limit = limit
        super().__init__(f"{what} exceeded node budget of {limit}")


class Budget:
    """Node counter; ``limit=None`` means unlimited.

    Solvers keep a local count and call ``spend`` in batches so the hot loop
    stays cheap.
    """

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        if limit is not None and limit <= 0:
            raise ValueError("budget must be positive")
        self.limit = limit
        self.used = 0

    def spend(self, nodes: int, what: str = "search") -> None:
        self.used += nodes
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(self.limit, what)


def as_budget(budget: Budget | int | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)
