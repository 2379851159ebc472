class WorkbenchError(ValueError):
    """Base class for every domain error raised by the workbench."""


class ParseError(WorkbenchError):
    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ShapeError(WorkbenchError):
    """A term parses as λ_lsub but is not a λ_vker term."""


class PreconditionError(WorkbenchError):
    pass


class InvalidRedexError(WorkbenchError):
    pass


class UnknownSuiteError(WorkbenchError):
    pass
