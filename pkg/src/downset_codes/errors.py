"""Exception hierarchy shared by the library and the CLI."""


class DownsetCodesError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(DownsetCodesError, ValueError):
    """Invalid parameters: non-prime modulus, r out of range, unsupported p, ..."""


class DimensionError(ParameterError):
    """Operands disagree in length or modulus."""


class BudgetExceeded(DownsetCodesError, RuntimeError):
    """A computation would exceed its configured work budget."""

    def __init__(self, what: str, cost: int, budget: int):
        self.what = what
        self.cost = cost
        self.budget = budget
        super().__init__(f"{what}: cost {cost} exceeds budget {budget}")
