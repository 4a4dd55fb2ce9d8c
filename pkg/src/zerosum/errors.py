"""Exception types shared across the package.

Each error carries the CLI exit code it maps to: 1 for invalid input,
2 for infeasible instances, 3 for exceeded budgets.
"""


class ZeroSumError(Exception):
    exit_code = 1


class InvalidParameters(ZeroSumError, ValueError):
    pass


class InvalidWeighting(ZeroSumError, ValueError):
    pass


class DegenerateMeasure(ZeroSumError, ValueError):
    pass


class RegimeViolation(ZeroSumError, ValueError):
    pass


class NoFeasibleWeighting(ZeroSumError):
    exit_code = 2


class InstanceTooLarge(ZeroSumError):
    exit_code = 3
