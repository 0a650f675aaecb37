"""Exception types shared across the pipeline."""


class HatgridError(Exception):
    pass


class MalformedRational(HatgridError, ValueError):
    pass


class DegenerateParameters(HatgridError, ValueError):
    """Parameters put some vertex exactly on a cell or region boundary."""


class InconsistencyError(HatgridError, RuntimeError):
    """An internal invariant broke; points at a bug, not at the input."""


class ResolutionError(HatgridError, RuntimeError):
    pass


class GenerationFailed(HatgridError, RuntimeError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
