"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an argument violates an operation's preconditions."""


class SpectralError(ArithmeticError):
    """Raised when the eigensolver cannot meet its residual contract.

    The best residual reached is kept on ``residual`` so callers can
    report how far off the solve was.
    """

    def __init__(self, message: str, residual: float = float("nan")):
        super().__init__(message)
        self.residual = residual


class DegenerateTrialError(RuntimeError):
    """Raised when a benchmark trial cannot be sampled with a usable witness set."""
