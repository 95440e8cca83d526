"""Error hierarchy shared by every module.

Each error carries a human readable ``detail`` and the exit code the CLI
maps it to.
"""
from typing import Any, Optional

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CHECK_FAILED = 2
EXIT_BUDGET = 3


class KodairaError(Exception):
    exit_code: int = EXIT_INVALID

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InvalidInput(KodairaError):
    exit_code = EXIT_INVALID


class NotPrime(InvalidInput):
    pass


class ZeroInverse(InvalidInput):
    pass


class DimensionMismatch(InvalidInput):
    pass


class MixedDegrees(InvalidInput):
    pass


class DimensionOverflow(InvalidInput):
    pass


class BudgetExceeded(KodairaError):
    exit_code = EXIT_BUDGET


class CrossCheckFailed(KodairaError):
    exit_code = EXIT_CHECK_FAILED

    def __init__(self, detail: str, report: Optional[Any] = None):
        super().__init__(detail)
        self.report = report
