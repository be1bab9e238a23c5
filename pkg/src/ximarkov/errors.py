"""Exception hierarchy and warning categories shared across the package."""


class XiMarkovError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(XiMarkovError, ValueError):
    """A parameter lies outside its admissible domain."""


class DegenerateResponseError(XiMarkovError):
    """The response variable is (numerically) degenerate, so the measure is undefined."""


class PerfectInternalDependenceError(XiMarkovError):
    """The response vector is perfectly self-determined; the chained-measure denominator vanishes."""


class SingularConfigurationError(XiMarkovError):
    """A closed form is evaluated at a 0/0 configuration; the limit is not extrapolated."""


class EmptyConditioningError(XiMarkovError):
    """The conditioning point lies outside the support of the conditioning distribution."""


class InvalidRadialError(XiMarkovError):
    """A radial sampler or CDF violates nonnegativity of the radial part."""


class ControlAssertionError(XiMarkovError):
    """A declared experiment control (a floor or an exact identity) failed."""


class ConfigError(XiMarkovError):
    """An experiment configuration is malformed or out of domain."""


class ClampWarning(UserWarning):
    """A computed measure landed outside its documented range and was clamped."""
