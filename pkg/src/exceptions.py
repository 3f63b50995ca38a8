"""
Exception hierarchy for prodint.

Every error raised on purpose by the library derives from ProdIntError and
from the closest builtin, so callers can catch either.
"""
from typing import Optional, Sequence


class ProdIntError(Exception):
    """Base class for all prodint errors."""


class ContractViolation(ProdIntError, ValueError):
    """A precondition of an operation was not met."""


class IntegrationError(ProdIntError, ArithmeticError):
    """Quadrature hit a non-finite integrand value."""

    def __init__(self, message: str, t: Optional[float] = None):
        super().__init__(message if t is None else f"{message} (t={t!r})")
        self.t = t


class OutOfChartError(ProdIntError, ValueError):
    """A group element or algebra vector lies outside the chart domain."""


class InversionError(ProdIntError, ArithmeticError):
    """A group element could not be inverted."""

    def __init__(self, message: str, t: Optional[float] = None):
        super().__init__(message if t is None else f"{message} (t={t!r})")
        self.t = t


class SeriesConvergenceError(ProdIntError, ArithmeticError):
    """A power series did not reach its truncation threshold within the term cap."""

    def __init__(self, message: str, terms: int, last_term_norm: float):
        super().__init__(f"{message} (terms={terms}, last term norm={last_term_norm:.3e})")
        self.terms = terms
        self.last_term_norm = last_term_norm


class StepLimitError(ProdIntError, ValueError):
    """An evolution would need more steps than allowed."""


class HypothesisViolation(ProdIntError, ValueError):
    """A sampled hypothesis of the parameter-derivative formula failed."""

    def __init__(self, seminorm: str, order: int, h: float, ratio: float, bound: float):
        super().__init__(
            f"difference quotient bound violated for p={seminorm}, s={order}, h={h:.3e}: "
            f"{ratio:.6e} > {bound:.6e}")
        self.seminorm = seminorm
        self.order = order
        self.h = h


class ScheduleDecayError(ProdIntError, ValueError):
    """A Mackey schedule increment does not decay like c * 2^(-n^2)."""

    def __init__(self, n: int, norm: float, bound: float):
        super().__init__(f"increment X_{n} has norm {norm:.3e} > {bound:.3e}")
        self.n = n


class UnknownGroupError(ProdIntError, ValueError):
    """make_group was asked for a group it does not know."""


class ConfigError(ProdIntError, ValueError):
    """An experiment config could not be read or validated."""

    def __init__(self, message: str, diagnostics: Sequence[str] = ()):
        super().__init__(message)
        self.diagnostics = list(diagnostics)
