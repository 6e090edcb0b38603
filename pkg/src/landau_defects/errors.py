"""Exception types shared across the package."""


class DomainError(ValueError):
    """Parameters outside the physical or mathematical domain of an operation."""


class NumericalError(ArithmeticError):
    """A numerical procedure failed to converge or produced a meaningless value.

    Parameters
    ----------
    message : str
        Human readable description.
    residual : float, optional
        Size of the last correction, when the failure is a convergence failure.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class GridError(ValueError):
    """The discretization grid cannot represent the requested states.

    ``required_rho_max`` carries the outer radius that would be adequate.
    """

    def __init__(self, message, required_rho_max=None):
        super().__init__(message)
        self.required_rho_max = required_rho_max


class ConfigError(ValueError):
    """Scenario configuration failed to parse or validate.

    ``errors`` is a list of ``(line_number, message)`` pairs; the line number is
    ``None`` for problems that are not attached to a single line.
    """

    def __init__(self, errors):
        self.errors = list(errors)
        lines = []
        for lineno, msg in self.errors:
            lines.append(f"line {lineno}: {msg}" if lineno is not None else msg)
        super().__init__("; ".join(lines))


class InteriorDiskWarning(UserWarning):
    """Evaluation inside a disclination disk, where only the exterior metric is known."""
