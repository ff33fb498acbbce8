"""Exception hierarchy. Every domain failure derives from :class:`QuiverError`."""


class QuiverError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class DimensionMismatch(QuiverError, ValueError):
    pass


class WrongQuiverClass(QuiverError):
    """The quiver lacks a property the operation needs (acyclic, extended Dynkin, ...)."""


class LoopAtVertex(QuiverError):
    pass


class NotRegular(QuiverError):
    """The dimension vector is not the dimension of a regular representation."""


class EulerNonzero(QuiverError):
    """Schofield pairing requested for dimensions with nonzero Euler form."""


class RetryExhausted(QuiverError):
    pass


class InternalInconsistency(QuiverError):
    """A computed quantity violated an identity that must hold."""
