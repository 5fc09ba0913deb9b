"""Exception hierarchy shared by the pricing engines.

Input validation raises plain ``ValueError``; everything that can go wrong
*numerically* (overflow, truncated series that did not settle, quadrature
that did not converge) derives from :class:`NumericalError` so callers can
map the two failure classes to distinct exit codes.
"""


class NumericalError(ArithmeticError):
    """A computation failed for numerical reasons, not bad inputs."""


class SeriesOverflowError(NumericalError):
    """An intermediate series term exceeded the double-precision range."""


class ConvergenceError(NumericalError):
    """An iteration or truncated sum did not reach its tolerance."""


class QuadratureError(NumericalError):
    """A quadrature result failed its accuracy or sanity checks."""
