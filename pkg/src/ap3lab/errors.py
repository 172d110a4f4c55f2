class Ap3Error(Exception):
    """Base class for every error raised by ap3lab."""


class InvalidInput(Ap3Error, ValueError):
    pass


class NotAMetric(InvalidInput):
    """The described space does not define a metric (e.g. a disconnected graph)."""


class InvalidParameters(InvalidInput):
    """A construction was asked for parameters that violate one of its conditions."""


class BudgetExceeded(Ap3Error):
    def __init__(self, required: int, budget: int):
        super().__init__(
            f"search needs {required} subsets but the budget is {budget}; "
            f"raise the budget to at least {required}"
        )
        self.required = required
        self.budget = budget


class ParseError(InvalidInput):
    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset
