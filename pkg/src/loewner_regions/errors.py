"""Exception types raised by the library."""


class DegeneratePointError(ValueError):
    """The origin was passed where an argument (angle) is needed."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class UnreachableTargetError(ValueError):
    """A half-plane target has Im not larger than the start point."""


class SingularityError(ArithmeticError):
    """The chordal driver collided with the trajectory."""


class DriverFileError(ValueError):
    """Malformed driver file."""
