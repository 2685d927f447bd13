from typing import Any, Optional


class InputError(ValueError):
    """Malformed input or a violated precondition."""


class PaceFormatError(InputError):
    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class CertificateError(ValueError):
    """A certificate (decomposition, bramble, model, ...) failed validation."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class BudgetExceeded(RuntimeError):
    """An exact oracle was asked to run beyond its configured size limit."""

    def __init__(self, operation: str, size: int, limit: int):
        super().__init__(f"{operation}: size {size} exceeds budget {limit}")
        self.operation = operation
        self.size = size
        self.limit = limit


def check_budget(operation: str, size: int, limit: int) -> None:
    if size > limit:
        raise BudgetExceeded(operation, size, limit)
