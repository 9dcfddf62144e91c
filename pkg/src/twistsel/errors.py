"""Exception hierarchy shared by all twistsel modules."""


class TwistselError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(TwistselError):
    """An argument violates a documented contract (bad twist parameter, reducible factor, ...)."""


class PreconditionError(TwistselError):
    """A documented precondition does not hold (bad reduction where good is required, ...)."""


class UnsupportedError(TwistselError):
    """Input is outside the supported range (wrong prime, positive discriminant, ...)."""


class ResourceError(TwistselError):
    """A computation gave up against its internal resource bounds."""


class DegenerateTowerError(TwistselError):
    """Tower construction collapsed: the adjoined element is identically zero mod the base factor."""
