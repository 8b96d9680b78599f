class LabError(Exception):
    """Base class for every error raised by the workbench."""


class UsageError(LabError, ValueError):
    """Bad arguments or a violated input contract (exit code 2)."""


class BudgetExceededError(LabError):
    """An enumeration box is larger than the membership-test budget (exit code 3)."""

    def __init__(self, box_size: int, budget: int):
        super().__init__(f"enumeration needs {box_size} membership tests, budget is {budget}")
        self.box_size = box_size
        self.budget = budget


class VerificationError(LabError):
    """A cross-check between two computations failed (exit code 1)."""


class BijectionError(VerificationError):
    """The boundary maps produced a point outside their declared codomain."""


class RootSolverError(LabError):
    """Numeric root finding did not reach the requested residual."""
