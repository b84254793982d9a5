"""Exception hierarchy. Every error knows its diagnostic code and CLI exit status."""


class ReliabilityError(Exception):
    code = "E_RELIABILITY"
    exit_status = 1


class ConfigError(ReliabilityError):
    code = "E_CONFIG"
    exit_status = 2


class NetworkFormatError(ReliabilityError):
    """Syntax error in a network or MP file. `line` is 1-based, None if unknown."""

    code = "E_PARSE"
    exit_status = 3

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NetworkValidationError(ReliabilityError):
    code = "E_INVALID"
    exit_status = 3

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NetworkFileError(ReliabilityError):
    code = "E_IO"
    exit_status = 3

    def __init__(self, path, reason):
        self.path = str(path)
        super().__init__(f"cannot read {self.path}: {reason}")


class VectorLengthError(ReliabilityError, ValueError):
    code = "E_LENGTH"
    exit_status = 3


class InstanceTooLargeError(ReliabilityError):
    code = "E_BUDGET"
    exit_status = 4


class GeneratorError(ReliabilityError):
    code = "E_GENERATOR"
    exit_status = 4


class EngineDisagreementError(ReliabilityError):
    """Raised by compare_engines; `comparison` holds every engine's report."""

    code = "E_DISAGREE"
    exit_status = 5

    def __init__(self, comparison):
        self.comparison = comparison
        values = ", ".join(
            f"{name}={report.reliability:.12f}" for name, report in comparison.reports.items()
        )
        super().__init__(
            f"engines disagree by {comparison.max_deviation:.3e} "
            f"(tolerance {comparison.tolerance:.1e}): {values}"
        )
