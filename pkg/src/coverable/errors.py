"""Exception hierarchy shared by every module."""


class CoverableError(ValueError):
    """Base class for input and validation failures."""


class ParseError(CoverableError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ComplexError(CoverableError):
    pass


class DanglingError(ComplexError):
    """An edge or face refers to an undeclared cell."""


class DuplicateCellError(ComplexError):
    pass


class OpenBoundaryError(ComplexError):
    """A face boundary is not a closed edge path."""


class DisconnectedError(ComplexError):
    pass


class NotCoverError(CoverableError):
    pass


class PathEndpointsError(CoverableError):
    pass


class NotBasedError(CoverableError):
    """A loop is not based at the required vertex."""


class LoopOutsideError(CoverableError):
    pass


class BudgetError(CoverableError):
    """A computation could not finish inside its budget."""


class TruncatedError(CoverableError):
    pass


class CoveringError(CoverableError):
    def __init__(self, message, cells=()):
        self.cells = tuple(cells)
        if self.cells:
            message = f"{message}: {', '.join(map(str, self.cells))}"
        super().__init__(message)


class FiberError(CoveringError):
    pass


class EdgeLiftError(CoveringError):
    pass


class FaceLiftError(CoveringError):
    pass
