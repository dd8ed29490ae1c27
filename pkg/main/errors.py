class LeverageError(ValueError):
    """Root of every error raised by the library."""


class InvalidGrid(LeverageError):
    pass


class InvalidDistribution(LeverageError):
    pass


class InvalidRegularity(LeverageError):
    pass


class InvalidCapitalStructure(LeverageError):
    pass


class InvalidDecision(LeverageError):
    pass


class InvalidWindow(LeverageError):
    pass


class EmptySamples(LeverageError):
    pass


class WindowTooLarge(LeverageError):
    pass


class EmptyDecisionSet(LeverageError):
    pass


class NegativeLeverage(LeverageError):
    pass


class UnsupportedCriterion(LeverageError):
    pass


class NonFiniteValue(LeverageError):
    """A criterion overflowed to an infinite or undefined value."""


class ScenarioFileError(LeverageError):
    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path


class CriterionFlagMisuse(LeverageError):
    """A flag that only applies to another criterion was passed."""
