"""Exception types shared across the package."""

__all__ = ["AccuracyError"]


class AccuracyError(RuntimeError):
    """A numerical routine could not reach its accuracy target.

    The ``achieved`` attribute carries the best bound that was reached
    before giving up, so callers can decide whether it is still usable.
    """

    def __init__(self, message: str, achieved: float | None = None):
        super().__init__(message)
        self.achieved = achieved
