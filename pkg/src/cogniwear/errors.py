"""Exception types shared across the library."""


class ConvergenceError(RuntimeError):
    """Raised when an iterative solver exhausts its iteration budget.

    Carries the iteration count and the final residual so callers can
    report or retune without re-running the solve.
    """

    def __init__(self, message: str, iterations: int, residual: float):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual


class ValidationError(ValueError):
    """Raised when an input file or bundle fails ingestion validation.

    ``diagnostics`` is a list of human-readable strings, one per problem,
    each naming the file and line where the problem was found.
    """

    def __init__(self, message: str, diagnostics: list[str] | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or []


class StageError(RuntimeError):
    """Raised when a pipeline stage fails; names the stage and participant."""

    def __init__(self, stage: str, participant: str, cause: BaseException):
        super().__init__(f"stage '{stage}' failed for participant '{participant}': {cause}")
        self.stage = stage
        self.participant = participant
        self.cause = cause
