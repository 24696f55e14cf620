"""Exception hierarchy shared by the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class NotInDiagramError(DomainError):
    """A point (X, Y) is not attained by any triangle."""


class ConvergenceError(RuntimeError):
    """Bisection did not reach its tolerance within the iteration cap."""


class InconsistencyError(ArithmeticError):
    """A radicand was negative beyond rounding noise.

    This signals a logic error upstream, never bad user input.
    """
