"""Exception hierarchy shared by the library and the command line."""


class QcagError(Exception):
    """Base class for every error raised by this package."""


class FieldError(QcagError, ValueError):
    """Invalid field parameters or an illegal field operation."""


class CurveError(QcagError, ValueError):
    """Curve data violating the Kummer-curve invariants."""


class AutomorphismError(QcagError, ValueError):
    """A map that is not an automorphism of the curve it was given for."""


class ConstraintError(QcagError, ValueError):
    """Valid objects combined outside their admissible range (e.g. ``t``)."""


class CensusError(QcagError, ValueError):
    """Preconditions of an orbit census do not hold."""


class ConfigError(QcagError, ValueError):
    """A malformed job configuration or unknown preset."""
