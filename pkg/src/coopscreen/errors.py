"""Exception hierarchy.

Every error raised by this package derives from :class:`CoopScreenError`,
so callers can catch one base class. Parameter problems additionally
derive from :class:`ParameterError`, which the CLI maps to exit code 1;
runtime simulation failures map to exit code 2.
"""

from __future__ import annotations


class CoopScreenError(Exception):
    """Base class for all package errors."""


class ParameterError(CoopScreenError, ValueError):
    """A model parameter or configuration value violates its contract."""


class OrderingViolation(ParameterError):
    """Payoffs do not satisfy dc > cc > dd > cd."""


class NonPositivePayoff(ParameterError):
    """A material payoff is zero or negative (reproduction factors must stay positive)."""


class AlphaTooSmall(ParameterError):
    """The cooperation bonus does not strictly exceed dc - cc."""


class POutOfRange(ParameterError):
    """Inheritance discount outside [0, 1]."""


class FeeOutsideICInterval(ParameterError):
    """Explicit membership fee outside the incentive-compatible interval."""


class ShareOutOfRange(ParameterError):
    """A population share outside [0, 1]."""


class NegativeMass(ParameterError):
    """A population mass is negative."""


class EmptyPopulation(ParameterError):
    """Total population mass is not strictly positive."""


class InfeasibleConfiguration(CoopScreenError, ValueError):
    """A matching configuration violates its feasibility constraints."""


class PayoffNonPositive(CoopScreenError, ArithmeticError):
    """A computed average payoff is not strictly positive, so it cannot act as a reproduction factor."""


class MassOverflow(CoopScreenError, OverflowError):
    """Population masses left the representable floating-point range (enable renormalization)."""


class TrajectoryTooShort(CoopScreenError, ValueError):
    """Trajectory has too few generations for the outcome detectors."""


class OddPopulation(CoopScreenError, ValueError):
    """Agent population size is odd or below two; pairing needs an even count."""


class ParseError(CoopScreenError, ValueError):
    """A configuration document is malformed."""


# Config-level constraint failures delegate to the parameter checks above.
ValidationError = ParameterError
