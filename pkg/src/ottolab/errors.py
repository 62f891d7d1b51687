"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the validity domain of a formula."""


class InfeasibleDeviceError(DomainError):
    """The requested device has an empty operating window at these parameters."""


class NoFeasiblePointError(RuntimeError):
    """Every point probed by the optimizer evaluated to a non-finite value."""
