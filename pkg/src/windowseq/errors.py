"""Exception types shared across the package."""

from __future__ import annotations


class BudgetExceededError(RuntimeError):
    """An exponential enumeration would exceed its configured budget.

    Raised *before* silently truncating any candidate set, so callers can
    distinguish "decided NO" from "could not decide at this budget".
    """

    def __init__(self, required: int, budget: int, what: str = "candidates") -> None:
        self.required = required
        self.budget = budget
        self.what = what
        super().__init__(
            f"needs {required} {what}, exceeding the budget of {budget}"
        )


class MissingSymbolError(ValueError):
    """A pattern symbol never occurs in the host word, so no traversal count exists."""

    def __init__(self, symbol: int) -> None:
        self.symbol = symbol
        super().__init__(f"symbol {symbol} does not occur in the host word")
