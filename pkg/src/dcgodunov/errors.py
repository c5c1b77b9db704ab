"""Exception types raised by the solvers."""


class InvalidDataError(ValueError):
    """Non-finite or otherwise malformed input data."""


class DegenerateSpeedsError(ValueError):
    """Both wave speeds vanish where a nonzero speed is required."""


class StabilityError(ValueError):
    """A time step violates the explicit stability bound of a scheme."""


class UnsupportedCaseError(ValueError):
    """The requested operation is not defined for this sign pattern of speeds."""


class StiffnessError(RuntimeError):
    """The adaptive integrator needed a step below its underflow guard."""
