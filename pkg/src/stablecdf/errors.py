"""Exception hierarchy shared by every module of the package."""


class StableError(Exception):
    """Base class for all errors raised by ``stablecdf``."""


class DomainError(StableError, ValueError):
    """An argument lies outside the domain where a formula is valid."""

    def __init__(self, parameter, message):
        self.parameter = parameter
        super().__init__(f"{parameter}: {message}")


class ContractError(StableError, ValueError):
    """A caller violated an operation's precondition."""


class NumericalError(StableError, ArithmeticError):
    """Base class for failures of a numerical procedure."""


class QuadratureFailure(NumericalError):
    """Adaptive quadrature hit its subdivision limit before meeting tolerance."""

    def __init__(self, message, value=None, estimate=None):
        self.value = value
        self.estimate = estimate
        super().__init__(message)


class BracketError(NumericalError):
    """The root of a monotone equation lies outside the search bracket.

    ``side`` is ``"below"`` or ``"above"`` and ``edge`` the bracket end
    that was passed.
    """

    def __init__(self, message, side=None, edge=None):
        super().__init__(message)
        self.side = side
        self.edge = edge


class OracleAccuracyError(NumericalError):
    """The reference Fourier inversion cannot meet its accuracy target."""


class OutOfValidatedRange(NumericalError):
    """No certified method covers the requested point."""
