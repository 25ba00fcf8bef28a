"""Exception hierarchy.

Every error raised by the library derives from :class:`LimlocError`, so callers
(notably the CLI) can map whole families of failures to exit codes.
"""


class LimlocError(Exception):
    """Base class for all library errors."""


class InvalidInstance(LimlocError, ValueError):
    """An instance, region or coordinate violates the domain invariants."""


class EmptyAgents(InvalidInstance):
    pass


class CoordinateOutOfRange(InvalidInstance):
    pass


class EmptyRegion(InvalidInstance):
    pass


class InvalidInterval(InvalidInstance):
    pass


class BadFacilityCount(InvalidInstance):
    pass


class EmptyList(LimlocError, ValueError):
    pass


class ArityMismatch(LimlocError, ValueError):
    """Mechanism/instance facility counts disagree, or a phantom profile has the wrong length."""


class InfeasibleMechanismOutput(LimlocError):
    """A mechanism that must respect the feasible region placed a facility outside it."""


class NegativeValue(LimlocError, ValueError):
    pass


class InstanceSyntaxError(LimlocError, ValueError):
    """Malformed instance text. ``where`` names the offending field or position."""

    def __init__(self, message: str, where: str | None = None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)
