class PKMEError(Exception):
    pass


class DomainError(PKMEError, ValueError):
    """A precondition on the inputs is violated (digit range, positions, unitarity, spec/state mismatch, ...)."""
    pass


class CapacityError(PKMEError, MemoryError):
    pass


class BudgetExceededError(PKMEError, RuntimeError):
    """Raised instead of returning a partial AME verdict."""
    pass


class StateFileError(PKMEError):
    pass


class StateFileParseError(StateFileError):
    pass


class StateFileShapeError(StateFileError):
    pass


class StateFileNormError(StateFileError):
    pass
