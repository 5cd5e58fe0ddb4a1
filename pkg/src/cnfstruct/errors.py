"""Exception types shared across the package."""


class GuardExceeded(RuntimeError):
    """An exponential computation was refused because the input is too large."""

    def __init__(self, what, size, guard):
        super().__init__(f"{what}: size {size} exceeds guard {guard}")
        self.what = what
        self.size = size
        self.guard = guard


class TheoryViolation(AssertionError):
    """A proven bound or structural fact failed on verified input; always an implementation bug."""


class DimacsError(ValueError):
    """Malformed DIMACS CNF input."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotMinimallyUnsatisfiable(ValueError):
    """Raised by operations whose precondition is minimal unsatisfiability."""


def check_guard(what, size, guard):
    if guard is not None and size > guard:
        raise GuardExceeded(what, size, guard)
