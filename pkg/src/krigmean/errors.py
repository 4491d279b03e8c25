"""Exception hierarchy.

Errors are grouped so the CLI can map each family to one exit code:
``DataError`` for unreadable or invalid input, ``NumericalError`` for
degenerate statistics and singular systems.
"""


class KrigmeanError(Exception):
    """Base class for all package errors."""


class DataError(KrigmeanError):
    pass


class EmptyInput(DataError):
    pass


class TooShort(DataError):
    pass


class MalformedRow(DataError):
    def __init__(self, line, text, reason="non-numeric value"):
        self.line = line
        self.text = text
        super().__init__(f"line {line}: {reason}: {text!r}")


class NumericalError(KrigmeanError):
    pass


class DegenerateVariogram(NumericalError):
    pass


class LagOutOfRange(NumericalError, ValueError):
    pass


class NoInformativePoints(NumericalError, ValueError):
    pass


class NonFiniteResidual(NumericalError):
    pass


class NotPositiveDefinite(NumericalError):
    pass


class SingularSystem(NumericalError):
    def __init__(self, pivot_index, pivot_value, t=None):
        self.pivot_index = pivot_index
        self.pivot_value = pivot_value
        self.t = t
        where = f" at t={t}" if t is not None else ""
        super().__init__(
            f"singular kriging system{where}: pivot {pivot_index} has magnitude {abs(pivot_value):.3e}"
        )

    def with_t(self, t):
        return SingularSystem(self.pivot_index, self.pivot_value, t=t)
